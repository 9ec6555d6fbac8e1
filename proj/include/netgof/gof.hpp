#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netgof/dist.hpp"
#include "netgof/graph.hpp"
#include "netgof/rng.hpp"
#include "netgof/sampling.hpp"

namespace netgof {

/// Bins over the integers: (-inf, cuts[0]], (cuts[0], cuts[1]], ...,
/// (cuts.back(), +inf). With no cuts there is one bin covering everything.
struct BinSpec {
  std::vector<std::int64_t> cuts;
  std::vector<double> probs;  ///< null probability of each bin, size cuts.size() + 1
  std::int64_t support_min = 0;
  std::int64_t support_max = 0;

  std::size_t bin_count() const noexcept { return probs.size(); }
  std::size_t bin_of(std::int64_t y) const;
  /// Inclusive bounds of bin m clipped to the null support.
  std::int64_t lo(std::size_t m) const;
  std::int64_t hi(std::size_t m) const;

  friend bool operator==(const BinSpec&, const BinSpec&) = default;
};

struct BinnedCounts {
  std::vector<std::uint64_t> observed;
  std::vector<double> expected;

  std::size_t bin_count() const noexcept { return observed.size(); }

  friend bool operator==(const BinnedCounts&, const BinnedCounts&) = default;
};

/// Cut points such that every bin's null probability is at least 5 / N.
///
/// With c = 5 / N: starting from p = c, repeatedly take the least x with
/// cdf(x) >= p as the next cut and set p = cdf(x) + c, while p + c < 1 - c.
/// Cuts with cdf(x) >= 1 - c are dropped so the open last bin keeps
/// probability above c. Requires N >= 10.
BinSpec build_bins(const Hypergeometric& null, std::size_t n_obs);
BinSpec build_bins(const HypergeomNull& null, std::size_t n_obs);

BinnedCounts tabulate(const BinSpec& bins, std::span<const std::uint64_t> edge_counts);

/// Pearson statistic sum (f - e)^2 / e. Throws ParameterError if any e <= 0
/// or the vectors differ in length.
double chi_square_statistic(const BinnedCounts& counts);

enum class Method { approximation, empirical };
std::string to_string(Method m);
Method method_from_string(const std::string& s);

struct TestResult {
  Method method = Method::approximation;
  double statistic = 0.0;
  std::size_t bin_count = 1;
  std::size_t df = 0;
  double p_value = 1.0;
  std::size_t n_subgraphs = 0;
  std::size_t subgraph_size = 0;
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  RngSeed seed;
  /// The test carries no information: a single bin, or an empty/complete graph.
  bool degenerate = false;
  BinSpec bins;
  BinnedCounts counts;
  std::size_t replicates = 0;    ///< empirical only
  std::vector<double> null_stats;  ///< empirical only, x^2 of each replicate

  friend bool operator==(const TestResult&, const TestResult&) = default;
};

struct TestOptions {
  std::optional<std::size_t> subgraph_size;  ///< default: optimal_subgraph_size(|V|)
  std::size_t n_subgraphs = 1000;
  std::size_t replicates = 200;
  RngSeed seed{0};
  Exec exec = Exec::parallel;
};

/// Chi-square goodness of fit of sampled induced edge counts against the
/// hypergeometric null, p-value from the chi-square law with M - 1 df.
TestResult approximation_test(const Graph& g, const TestOptions& options = {});

/// Same statistic; p-value is the share of R simulated G(|V|, |E|) networks
/// whose statistic is at least the observed one. Bins are shared because the
/// null depends only on |V|, |E| and N.
TestResult empirical_test(const Graph& g, const TestOptions& options = {});

TestResult run_test(const Graph& g, Method method, const TestOptions& options);

/// Exact law of the induced edge count of a uniform k-subset, by
/// enumerating every subset. Throws GuardError if C(|V|, k) > max_subsets.
std::map<std::uint64_t, double> exact_edge_count_distribution(
    const Graph& g, std::size_t k, std::uint64_t max_subsets = 10'000'000);

}  // namespace netgof
