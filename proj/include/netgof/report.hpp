#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <span>

#include "json.hpp"

#include "netgof/experiments.hpp"
#include "netgof/gof.hpp"

namespace netgof {

using Json = nlohmann::ordered_json;

/// {method, statistic, df, bin_count, p_value, n_subgraphs, subgraph_size,
///  node_count, edge_count, seed, degenerate, bins: [{lo, hi, observed,
///  expected}], replicates?, null_stats?}
Json to_json(const TestResult& result);

/// Edge count (as a string key) to probability.
Json pmf_to_json(const std::map<std::uint64_t, double>& pmf);

Json to_json(const ExperimentRow& row);
Json to_json(std::span<const ExperimentRow> rows);

/// RFC 4180 CSV with a header row.
void write_csv(std::ostream& out, std::span<const ExperimentRow> rows);

}  // namespace netgof
