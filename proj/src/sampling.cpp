#include "netgof/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "netgof/errors.hpp"

namespace netgof {

namespace {

void check_sample_size(const Graph& g, std::size_t k) {
  if (k < 1 || k > g.node_count())
    throw ParameterError("sample size k must lie in [1, " + std::to_string(g.node_count()) +
                         "], got " + std::to_string(k));
}

// Partial Fisher-Yates: afterwards perm[0..k) holds the sample. Swap targets
// are recorded so the caller can restore the identity permutation.
void partial_shuffle(std::vector<NodeId>& perm, std::vector<std::size_t>& swaps, std::size_t k,
                     Engine& rng) {
  const std::size_t n = perm.size();
  swaps.clear();
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    const std::size_t j = pick(rng);
    std::swap(perm[i], perm[j]);
    swaps.push_back(j);
  }
}

void unshuffle(std::vector<NodeId>& perm, const std::vector<std::size_t>& swaps) {
  for (std::size_t i = swaps.size(); i-- > 0;) std::swap(perm[i], perm[swaps[i]]);
}

}  // namespace

SubgraphSampler::SubgraphSampler(const Graph& g)
    : graph_(&g), perm_(g.node_count()), marked_(g.node_count(), 0) {
  std::iota(perm_.begin(), perm_.end(), NodeId{0});
}

std::uint64_t SubgraphSampler::draw(std::size_t k, Engine& rng) {
  partial_shuffle(perm_, swaps_, k, rng);
  for (std::size_t i = 0; i < k; ++i) marked_[perm_[i]] = 1;
  std::uint64_t twice = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (auto w : graph_->neighbours(perm_[i])) twice += marked_[w];
  for (std::size_t i = 0; i < k; ++i) marked_[perm_[i]] = 0;
  unshuffle(perm_, swaps_);
  return twice / 2;
}

std::uint64_t sample_subgraph_edge_count(const Graph& g, std::size_t k, RngSeed seed) {
  check_sample_size(g, k);
  SubgraphSampler sampler(g);
  Engine rng = make_engine(seed);
  return sampler.draw(k, rng);
}

std::vector<std::uint64_t> draw_edge_counts(const Graph& g, std::size_t k, std::size_t n_draws,
                                            RngSeed seed, Exec exec) {
  check_sample_size(g, k);
  std::vector<std::uint64_t> counts(n_draws);
  const auto n = static_cast<std::int64_t>(n_draws);
  if (exec == Exec::serial) {
    SubgraphSampler sampler(g);
    for (std::int64_t i = 0; i < n; ++i) {
      Engine rng = make_engine(derive_seed(seed, i));
      counts[i] = sampler.draw(k, rng);
    }
    return counts;
  }
#pragma omp parallel
  {
    SubgraphSampler sampler(g);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      Engine rng = make_engine(derive_seed(seed, i));
      counts[i] = sampler.draw(k, rng);
    }
  }
  return counts;
}

std::vector<std::uint64_t> draw_edge_counts_reference(const Graph& g, std::size_t k,
                                                      std::size_t n_draws, RngSeed seed) {
  check_sample_size(g, k);
  std::vector<NodeId> perm(g.node_count());
  std::vector<std::size_t> swaps;
  std::vector<std::uint64_t> counts;
  counts.reserve(n_draws);
  for (std::size_t i = 0; i < n_draws; ++i) {
    std::iota(perm.begin(), perm.end(), NodeId{0});
    Engine rng = make_engine(derive_seed(seed, i));
    partial_shuffle(perm, swaps, k, rng);
    std::uint64_t c = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) c += g.has_edge(perm[a], perm[b]);
    counts.push_back(c);
  }
  return counts;
}

int worker_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_worker_threads(int n) {
  if (n < 1) throw ParameterError("thread count must be positive");
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}

}  // namespace netgof
