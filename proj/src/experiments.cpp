#include "netgof/experiments.hpp"

#include <chrono>
#include <cmath>
#include <cstring>
#include <sstream>

#include "netgof/errors.hpp"

namespace netgof {

TwoColourParams calibrate_two_colour(std::size_t n, double mean_degree, double ratio) {
  if (n < 4 || n % 2 != 0)
    throw ParameterError("two-colour calibration needs an even node count >= 4, got " +
                         std::to_string(n));
  if (!(ratio >= 0.0 && ratio <= 1.0))
    throw ParameterError("ratio must lie in [0, 1], got " + std::to_string(ratio));
  if (!(mean_degree >= 0.0)) throw ParameterError("mean degree must be nonnegative");

  const double half = static_cast<double>(n / 2);
  const double s = 2.0 * mean_degree / ((half - 1.0) + half * std::sqrt(1.0 - ratio * ratio));
  TwoColourParams params{n / 2, n / 2, s * (1.0 - ratio) / 2.0, s * (1.0 + ratio) / 2.0};
  if (params.p < 0.0 || params.p > 1.0 || params.q < 0.0 || params.q > 1.0) {
    std::ostringstream msg;
    msg << "calibration gives p = " << params.p << ", q = " << params.q
        << " outside [0, 1] for n = " << n << ", d = " << mean_degree << ", r = " << ratio;
    throw CalibrationError(msg.str());
  }
  return params;
}

double expected_mean_degree(const TwoColourParams& params) {
  const double n1 = static_cast<double>(params.n1);
  const double n2 = static_cast<double>(params.n2);
  if (n1 + n2 == 0.0) return 0.0;
  const double cross = params.cross();
  const double red = params.p * (n1 - 1.0) + cross * n2;
  const double blue = params.q * (n2 - 1.0) + cross * n1;
  return (n1 * red + n2 * blue) / (n1 + n2);
}

WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double centre = (phat + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

ExperimentConfig ExperimentConfig::paper_scale(Method method) {
  ExperimentConfig config;
  config.method = method;
  config.sizes.clear();
  for (int i = 0; i <= 8; ++i) {
    const auto n = static_cast<std::size_t>(std::llround(std::pow(10.0, 2.0 + 0.25 * i)));
    if (method == Method::empirical && n > 1000) break;
    config.sizes.push_back(n);
  }
  config.replications = method == Method::approximation ? 500 : 200;
  return config;
}

void ExperimentConfig::validate() const {
  if (sizes.empty() || mean_degrees.empty()) throw ParameterError("empty experiment grid");
  for (auto n : sizes)
    if (n < 2) throw ParameterError("network sizes must be >= 2");
  for (auto d : mean_degrees)
    if (!(d >= 0.0)) throw ParameterError("mean degrees must be nonnegative");
  for (auto r : ratios)
    if (!(r >= 0.0 && r <= 1.0)) throw ParameterError("ratios must lie in [0, 1]");
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (replications < 1) throw ParameterError("replications must be positive");
  if (n_subgraphs < 10) throw ParameterError("at least 10 subgraphs are needed per test");
  if (method == Method::empirical && replicates < 1)
    throw ParameterError("empirical method needs at least 1 replicate");
}

namespace {

using Clock = std::chrono::steady_clock;

// Cell seeds depend on the cell's parameters, not its grid position, so a
// cell reproduces when run alone or inside a larger grid.
std::uint64_t cell_key(std::size_t size, double degree, double ratio) {
  auto bits = [](double v) {
    std::uint64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
  };
  return detail::splitmix64(size) ^ detail::splitmix64(bits(degree) + 1) ^
         detail::splitmix64(bits(ratio) + 2);
}

struct RepOutcome {
  bool rejected = false;
  double seconds = 0.0;
  std::size_t bins = 0;
};

using GraphFactory = std::function<Graph(RngSeed)>;

ExperimentRow run_cell(const ExperimentConfig& config, std::size_t size, double degree,
                       std::optional<double> ratio, const GraphFactory& make_graph,
                       bool parallel_reps) {
  const RngSeed cell = derive_seed(config.base_seed, cell_key(size, degree, ratio.value_or(-1.0)));
  TestOptions options;
  options.n_subgraphs = config.n_subgraphs;
  options.replicates = config.replicates;
  options.exec = Exec::serial;

  std::vector<RepOutcome> outcomes(config.replications);
  auto rep = [&](std::int64_t i) {
    const RngSeed s = derive_seed(cell, static_cast<std::uint64_t>(i));
    const Graph g = make_graph(derive_seed(s, 0));
    TestOptions local = options;
    local.seed = derive_seed(s, 1);
    const auto start = Clock::now();
    const TestResult result = run_test(g, config.method, local);
    const std::chrono::duration<double> elapsed = Clock::now() - start;
    outcomes[static_cast<std::size_t>(i)] = {result.p_value <= config.alpha, elapsed.count(),
                                             result.bin_count};
  };
  const auto n_rep = static_cast<std::int64_t>(config.replications);
  if (parallel_reps && config.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n_rep; ++i) rep(i);
  } else {
    for (std::int64_t i = 0; i < n_rep; ++i) rep(i);
  }

  ExperimentRow row;
  row.size = size;
  row.mean_degree = degree;
  row.ratio = ratio;
  row.method = config.method;
  row.replications = config.replications;
  double seconds = 0.0, bins = 0.0;
  for (const auto& o : outcomes) {
    row.rejections += o.rejected;
    seconds += o.seconds;
    bins += static_cast<double>(o.bins);
  }
  const double reps = static_cast<double>(config.replications);
  row.rejection_rate = static_cast<double>(row.rejections) / reps;
  const auto ci = wilson_interval(row.rejections, row.replications);
  row.ci_lo = ci.lo;
  row.ci_hi = ci.hi;
  row.mean_runtime = seconds / reps;
  row.mean_bins = bins / reps;
  return row;
}

ExperimentRow skipped_row(const ExperimentConfig& config, std::size_t size, double degree,
                          std::optional<double> ratio, std::string reason) {
  ExperimentRow row;
  row.size = size;
  row.mean_degree = degree;
  row.ratio = ratio;
  row.method = config.method;
  row.skipped = std::move(reason);
  return row;
}

std::string describe(const ExperimentRow& row) {
  std::ostringstream out;
  out << "|V|=" << row.size << " d=" << row.mean_degree;
  if (row.ratio) out << " r=" << *row.ratio;
  if (!row.skipped.empty())
    out << " skipped: " << row.skipped;
  else
    out << " rate=" << row.rejection_rate << " [" << row.ci_lo << ", " << row.ci_hi << "]"
        << " t=" << row.mean_runtime << "s";
  return out.str();
}

void report(const ExperimentConfig& config, const ExperimentRow& row) {
  if (config.progress) config.progress(describe(row));
}

// Returns a reason when G(n, round(d n / 2)) cannot be tested.
std::optional<std::string> homogeneous_cell_problem(std::size_t n, double degree, std::uint64_t m) {
  if (!(degree < static_cast<double>(n) - 1.0))
    return "mean degree must be below |V| - 1";
  if (m > pair_count(n)) return "edge count exceeds C(|V|, 2)";
  return std::nullopt;
}

std::vector<ExperimentRow> homogeneous_sweep(const ExperimentConfig& config, bool parallel_reps) {
  config.validate();
  std::vector<ExperimentRow> rows;
  for (auto n : config.sizes) {
    for (auto d : config.mean_degrees) {
      const auto m = static_cast<std::uint64_t>(std::llround(d * static_cast<double>(n) / 2.0));
      if (auto problem = homogeneous_cell_problem(n, d, m)) {
        rows.push_back(skipped_row(config, n, d, std::nullopt, *problem));
      } else {
        rows.push_back(run_cell(
            config, n, d, std::nullopt, [n, m](RngSeed s) { return generate_gnm(n, m, s); },
            parallel_reps));
      }
      report(config, rows.back());
    }
  }
  return rows;
}

}  // namespace

std::vector<ExperimentRow> run_significance(const ExperimentConfig& config) {
  return homogeneous_sweep(config, true);
}

std::vector<ExperimentRow> run_power(const ExperimentConfig& config) {
  config.validate();
  if (config.method != Method::approximation)
    throw ParameterError("power study supports the approximation method only");
  if (config.ratios.empty()) throw ParameterError("power study needs at least one ratio");
  std::vector<ExperimentRow> rows;
  for (auto n : config.sizes) {
    for (auto d : config.mean_degrees) {
      for (auto r : config.ratios) {
        try {
          const TwoColourParams params = calibrate_two_colour(n, d, r);
          rows.push_back(run_cell(
              config, n, d, r, [params](RngSeed s) { return generate_two_colour(params, s); },
              true));
        } catch (const std::exception& e) {
          rows.push_back(skipped_row(config, n, d, r, e.what()));
        }
        report(config, rows.back());
      }
    }
  }
  return rows;
}

std::vector<ExperimentRow> run_timing(const ExperimentConfig& config) {
  return homogeneous_sweep(config, false);
}

double log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ParameterError("slope needs two or more matching points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace netgof
