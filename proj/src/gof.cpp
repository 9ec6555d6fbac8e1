#include "netgof/gof.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "netgof/errors.hpp"

namespace netgof {

std::size_t BinSpec::bin_of(std::int64_t y) const {
  return static_cast<std::size_t>(std::lower_bound(cuts.begin(), cuts.end(), y) - cuts.begin());
}

std::int64_t BinSpec::lo(std::size_t m) const { return m == 0 ? support_min : cuts[m - 1] + 1; }

std::int64_t BinSpec::hi(std::size_t m) const { return m < cuts.size() ? cuts[m] : support_max; }

BinSpec build_bins(const Hypergeometric& null, std::size_t n_obs) {
  if (n_obs < 10)
    throw ParameterError("binning needs at least 10 observations, got " + std::to_string(n_obs));
  const double c = 5.0 / static_cast<double>(n_obs);
  BinSpec spec;
  spec.support_min = null.support_min();
  spec.support_max = null.support_max();

  double p = c;
  while (p + c < 1.0 - c) {
    const std::int64_t x = null.quantile(p);
    const double at = null.cdf(x);
    // The tail above x would hold less than c; every later cut would too.
    if (at >= 1.0 - c) break;
    spec.cuts.push_back(x);
    p = at + c;
  }

  double below = 0.0;
  for (auto x : spec.cuts) {
    const double at = null.cdf(x);
    spec.probs.push_back(at - below);
    below = at;
  }
  spec.probs.push_back(1.0 - below);
  return spec;
}

BinSpec build_bins(const HypergeomNull& null, std::size_t n_obs) {
  return build_bins(Hypergeometric(null), n_obs);
}

BinnedCounts tabulate(const BinSpec& bins, std::span<const std::uint64_t> edge_counts) {
  BinnedCounts out;
  out.observed.assign(bins.bin_count(), 0);
  for (auto y : edge_counts) ++out.observed[bins.bin_of(static_cast<std::int64_t>(y))];
  const double n = static_cast<double>(edge_counts.size());
  out.expected.reserve(bins.bin_count());
  for (double prob : bins.probs) out.expected.push_back(prob * n);
  return out;
}

double chi_square_statistic(const BinnedCounts& counts) {
  if (counts.observed.size() != counts.expected.size())
    throw ParameterError("observed and expected bin counts differ in length");
  double x2 = 0.0;
  for (std::size_t m = 0; m < counts.observed.size(); ++m) {
    const double e = counts.expected[m];
    if (!(e > 0.0)) throw ParameterError("expected count must be positive in bin " + std::to_string(m));
    const double d = static_cast<double>(counts.observed[m]) - e;
    x2 += d * d / e;
  }
  return x2;
}

std::string to_string(Method m) {
  return m == Method::approximation ? "approximation" : "empirical";
}

Method method_from_string(const std::string& s) {
  if (s == "approximation" || s == "approx") return Method::approximation;
  if (s == "empirical") return Method::empirical;
  throw ParameterError("unknown test method '" + s + "'");
}

namespace {

struct Prepared {
  std::size_t k = 0;
  Hypergeometric null;
  BinSpec bins;
};

Prepared prepare(const Graph& g, const TestOptions& options) {
  if (g.node_count() < 2) throw ParameterError("test needs at least 2 nodes");
  const std::size_t k = options.subgraph_size.value_or(optimal_subgraph_size(g.node_count()));
  if (k < 2 || k > g.node_count())
    throw ParameterError("subgraph size k must lie in [2, " + std::to_string(g.node_count()) +
                         "], got " + std::to_string(k));
  Hypergeometric null(HypergeomNull::for_graph(g.node_count(), g.edge_count(), k));
  BinSpec bins = build_bins(null, options.n_subgraphs);
  return {k, std::move(null), std::move(bins)};
}

// Independent seed domains: subgraph draws on the observed graph use `seed`
// directly; replicate r uses the children of replicate_root(seed, r).
RngSeed replicate_root(RngSeed seed, std::uint64_t r) {
  return derive_seed(derive_seed(seed, ~std::uint64_t{0}), r);
}

TestResult base_result(const Graph& g, const Prepared& prep, const TestOptions& options,
                       Method method, std::span<const std::uint64_t> draws) {
  TestResult result;
  result.method = method;
  result.n_subgraphs = options.n_subgraphs;
  result.subgraph_size = prep.k;
  result.node_count = g.node_count();
  result.edge_count = g.edge_count();
  result.seed = options.seed;
  result.bins = prep.bins;
  result.counts = tabulate(prep.bins, draws);
  result.bin_count = prep.bins.bin_count();
  result.df = result.bin_count - 1;
  const bool trivial_graph = g.edge_count() == 0 || g.edge_count() == pair_count(g.node_count());
  result.degenerate = trivial_graph || result.bin_count == 1;
  result.statistic = result.bin_count == 1 ? 0.0 : chi_square_statistic(result.counts);
  return result;
}

}  // namespace

TestResult approximation_test(const Graph& g, const TestOptions& options) {
  const Prepared prep = prepare(g, options);
  const auto draws = draw_edge_counts(g, prep.k, options.n_subgraphs, options.seed, options.exec);
  TestResult result = base_result(g, prep, options, Method::approximation, draws);
  result.p_value =
      result.bin_count == 1 ? 1.0 : chi_square_sf(result.statistic, static_cast<int>(result.df));
  return result;
}

TestResult empirical_test(const Graph& g, const TestOptions& options) {
  if (options.replicates < 1) throw ParameterError("empirical test needs at least 1 replicate");
  const Prepared prep = prepare(g, options);
  const auto draws = draw_edge_counts(g, prep.k, options.n_subgraphs, options.seed, options.exec);
  TestResult result = base_result(g, prep, options, Method::empirical, draws);
  result.replicates = options.replicates;
  result.null_stats.assign(options.replicates, 0.0);

  if (result.bin_count > 1) {
    const auto n_rep = static_cast<std::int64_t>(options.replicates);
    auto replicate = [&](std::int64_t r) {
      const RngSeed root = replicate_root(options.seed, static_cast<std::uint64_t>(r));
      const Graph null_graph = generate_gnm(g.node_count(), g.edge_count(), derive_seed(root, 0));
      const auto null_draws = draw_edge_counts(null_graph, prep.k, options.n_subgraphs,
                                               derive_seed(root, 1), Exec::serial);
      result.null_stats[static_cast<std::size_t>(r)] =
          chi_square_statistic(tabulate(prep.bins, null_draws));
    };
    if (options.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t r = 0; r < n_rep; ++r) replicate(r);
    } else {
      for (std::int64_t r = 0; r < n_rep; ++r) replicate(r);
    }
  }

  const auto exceed = std::count_if(result.null_stats.begin(), result.null_stats.end(),
                                    [&](double x2) { return x2 >= result.statistic; });
  result.p_value = static_cast<double>(exceed) / static_cast<double>(options.replicates);
  return result;
}

TestResult run_test(const Graph& g, Method method, const TestOptions& options) {
  return method == Method::approximation ? approximation_test(g, options)
                                         : empirical_test(g, options);
}

std::map<std::uint64_t, double> exact_edge_count_distribution(const Graph& g, std::size_t k,
                                                              std::uint64_t max_subsets) {
  const std::size_t n = g.node_count();
  if (k < 1 || k > n)
    throw ParameterError("sample size k must lie in [1, " + std::to_string(n) + "], got " +
                         std::to_string(k));
  // C(n, k) with early exit once the budget is exceeded.
  std::uint64_t subsets = 1;
  for (std::size_t i = 1; i <= std::min(k, n - k); ++i) {
    subsets = subsets * (n - std::min(k, n - k) + i) / i;
    if (subsets > max_subsets)
      throw GuardError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds " +
                       std::to_string(max_subsets) +
                       " subsets; use Monte-Carlo sampling instead");
  }

  std::vector<std::uint64_t> tally(pair_count(k) + 1, 0);
  std::vector<NodeId> subset(k);
  std::iota(subset.begin(), subset.end(), NodeId{0});
  std::vector<std::uint8_t> marked(n, 0);
  while (true) {
    for (auto v : subset) marked[v] = 1;
    std::uint64_t twice = 0;
    for (auto v : subset)
      for (auto w : g.neighbours(v)) twice += marked[w];
    for (auto v : subset) marked[v] = 0;
    ++tally[twice / 2];

    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }

  std::map<std::uint64_t, double> pmf;
  const double total = static_cast<double>(subsets);
  for (std::size_t y = 0; y < tally.size(); ++y)
    if (tally[y]) pmf[y] = static_cast<double>(tally[y]) / total;
  return pmf;
}

}  // namespace netgof
