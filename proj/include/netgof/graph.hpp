#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "netgof/rng.hpp"

namespace netgof {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Number of unordered pairs among n items, C(n, 2).
constexpr std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Undirected, loop-free simple graph on dense ids [0, node_count).
///
/// Edges are kept as a sorted list of (lo, hi) pairs with lo < hi, plus a CSR
/// adjacency index (each edge appears in both endpoints' neighbour lists).
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Orientation is ignored and duplicate
  /// pairs collapse. Throws ParameterError on a self-loop or an endpoint
  /// outside [0, node_count).
  Graph(std::size_t node_count, std::vector<Edge> edges);

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const NodeId> neighbours(NodeId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(NodeId a, NodeId b) const noexcept;

  double mean_degree() const noexcept {
    return node_count_ ? 2.0 * static_cast<double>(edges_.size()) / node_count_ : 0.0;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

/// Result of reading an edge list: the graph plus the label of each id.
struct ParsedGraph {
  Graph graph;
  std::vector<std::string> labels;  ///< labels[id]; ids past the last named node are unlabelled
  std::size_t self_loops_dropped = 0;
  std::size_t duplicates_collapsed = 0;
};

/// Reads whitespace-separated "u v" lines. Blank lines and lines starting
/// with '#' are skipped; tokens are arbitrary strings mapped to ids in order
/// of first appearance. `node_count` forces |V| (to account for isolated
/// nodes) and must be at least the number of distinct labels.
ParsedGraph parse_edge_list(std::istream& in, std::optional<std::size_t> node_count = {});
ParsedGraph parse_edge_list_string(const std::string& text,
                                   std::optional<std::size_t> node_count = {});

/// Canonical form: one "lo hi" line per edge, sorted, 0-based ids.
void write_edge_list(std::ostream& out, const Graph& g);

/// Uniform G(n, m): exactly m distinct pairs chosen without replacement.
Graph generate_gnm(std::size_t n, std::uint64_t m, RngSeed seed);

/// G(n, p): every pair present independently with probability p.
Graph generate_gnp(std::size_t n, double p, RngSeed seed);

/// Two classes: ids [0, n1) are red, [n1, n1 + n2) blue. Red-red pairs link
/// with probability p, blue-blue with q, red-blue with sqrt(p q).
struct TwoColourParams {
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  double p = 0.0;
  double q = 0.0;

  double cross() const;
  void validate() const;
};

Graph generate_two_colour(const TwoColourParams& params, RngSeed seed);

/// Number of edges induced by k nodes drawn uniformly without replacement.
std::uint64_t sample_subgraph_edge_count(const Graph& g, std::size_t k, RngSeed seed);

/// Number of edges of g with both endpoints in `nodes` (distinct ids).
std::uint64_t induced_edge_count(const Graph& g, std::span<const NodeId> nodes);

}  // namespace netgof
