#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netgof/graph.hpp"
#include "netgof/rng.hpp"

namespace netgof {

enum class Exec { serial, parallel };

/// Reusable scratch for node sampling on one graph. Not thread-safe; each
/// worker owns one.
///
/// A draw does a partial Fisher-Yates shuffle over an identity permutation,
/// marks the chosen nodes in a bitmap, counts marked neighbours of marked
/// nodes, then undoes the swaps and marks. Cost is O(k + sum of degrees of
/// the sample).
class SubgraphSampler {
 public:
  explicit SubgraphSampler(const Graph& g);

  std::uint64_t draw(std::size_t k, Engine& rng);

 private:
  const Graph* graph_;
  std::vector<NodeId> perm_;
  std::vector<std::uint8_t> marked_;
  std::vector<std::size_t> swaps_;
};

/// N induced edge counts; draw i uses derive_seed(seed, i), so the output is
/// the same for either execution mode and any thread count.
std::vector<std::uint64_t> draw_edge_counts(const Graph& g, std::size_t k, std::size_t n_draws,
                                            RngSeed seed, Exec exec = Exec::parallel);

/// Reference kernel: checks every pair of the k sampled nodes against the
/// edge set. O(k^2 log deg) per draw; uses the same node draws as the fast
/// kernel so both must agree exactly.
std::vector<std::uint64_t> draw_edge_counts_reference(const Graph& g, std::size_t k,
                                                      std::size_t n_draws, RngSeed seed);

/// Threads used by Exec::parallel paths (1 when built without OpenMP).
int worker_threads();
void set_worker_threads(int n);

}  // namespace netgof
