#include "netgof/report.hpp"

#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

namespace netgof {

Json to_json(const TestResult& result) {
  Json out;
  out["method"] = to_string(result.method);
  out["statistic"] = result.statistic;
  out["df"] = result.df;
  out["bin_count"] = result.bin_count;
  out["p_value"] = result.p_value;
  out["n_subgraphs"] = result.n_subgraphs;
  out["subgraph_size"] = result.subgraph_size;
  out["node_count"] = result.node_count;
  out["edge_count"] = result.edge_count;
  out["seed"] = result.seed.value;
  out["degenerate"] = result.degenerate;
  Json bins = Json::array();
  for (std::size_t m = 0; m < result.bins.bin_count(); ++m) {
    bins.push_back({{"lo", result.bins.lo(m)},
                    {"hi", result.bins.hi(m)},
                    {"observed", result.counts.observed[m]},
                    {"expected", result.counts.expected[m]}});
  }
  out["bins"] = std::move(bins);
  if (result.method == Method::empirical) {
    out["replicates"] = result.replicates;
    out["null_stats"] = result.null_stats;
  }
  return out;
}

Json pmf_to_json(const std::map<std::uint64_t, double>& pmf) {
  Json out = Json::object();
  for (const auto& [y, p] : pmf) out[std::to_string(y)] = p;
  return out;
}

Json to_json(const ExperimentRow& row) {
  Json out;
  out["size"] = row.size;
  out["mean_degree"] = row.mean_degree;
  out["ratio"] = row.ratio ? Json(*row.ratio) : Json(nullptr);
  out["method"] = to_string(row.method);
  out["replications"] = row.replications;
  out["rejections"] = row.rejections;
  out["rejection_rate"] = row.rejection_rate;
  out["ci_lo"] = row.ci_lo;
  out["ci_hi"] = row.ci_hi;
  out["mean_runtime"] = row.mean_runtime;
  out["mean_bins"] = row.mean_bins;
  out["skipped"] = row.skipped.empty() ? Json(nullptr) : Json(row.skipped);
  return out;
}

Json to_json(std::span<const ExperimentRow> rows) {
  Json out = Json::array();
  for (const auto& row : rows) out.push_back(to_json(row));
  return out;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

std::string number(double v) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10) << v;
  return out.str();
}

}  // namespace

void write_csv(std::ostream& out, std::span<const ExperimentRow> rows) {
  out << "size,mean_degree,ratio,method,replications,rejections,rejection_rate,ci_lo,ci_hi,"
         "mean_runtime,mean_bins,skipped\r\n";
  for (const auto& row : rows) {
    out << row.size << ',' << number(row.mean_degree) << ','
        << (row.ratio ? number(*row.ratio) : std::string{}) << ',' << to_string(row.method) << ','
        << row.replications << ',' << row.rejections << ',' << number(row.rejection_rate) << ','
        << number(row.ci_lo) << ',' << number(row.ci_hi) << ',' << number(row.mean_runtime) << ','
        << number(row.mean_bins) << ',' << csv_field(row.skipped) << "\r\n";
  }
}

}  // namespace netgof
