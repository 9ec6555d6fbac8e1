#include "netgof/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "netgof/errors.hpp"

namespace netgof {

namespace {

// Pairs (i, j), i < j, are indexed column-wise: index = j (j - 1) / 2 + i.
Edge decode_pair(std::uint64_t index) {
  auto j = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(index))) / 2.0);
  while (pair_count(j) > index) --j;
  while (pair_count(j + 1) <= index) ++j;
  return {static_cast<NodeId>(index - pair_count(j)), static_cast<NodeId>(j)};
}

// Appends the successes of `total` independent Bernoulli(p) trials, visiting
// only the successes by geometric skipping.
template <class Emit>
void bernoulli_skip(std::uint64_t total, double p, Engine& rng, Emit&& emit) {
  if (total == 0 || p <= 0.0) return;
  if (p >= 1.0) {
    for (std::uint64_t t = 0; t < total; ++t) emit(t);
    return;
  }
  std::geometric_distribution<std::uint64_t> gap(p);
  std::uint64_t t = gap(rng);
  while (t < total) {
    emit(t);
    const std::uint64_t skip = gap(rng);
    if (skip >= total - t) break;
    t += skip + 1;
  }
}

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw ParameterError(std::string(name) + " must lie in [0, 1], got " + std::to_string(p));
}

}  // namespace

Graph::Graph(std::size_t node_count, std::vector<Edge> edges) : node_count_(node_count) {
  for (auto& [a, b] : edges) {
    if (a >= node_count || b >= node_count)
      throw ParameterError("edge endpoint out of range [0, " + std::to_string(node_count) + ")");
    if (a == b) throw ParameterError("self-loop at node " + std::to_string(a));
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  offsets_.assign(node_count_ + 1, 0);
  for (const auto& [a, b] : edges_) {
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  for (std::size_t v = 0; v < node_count_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [a, b] : edges_) {
    adjacency_[fill[a]++] = b;
    adjacency_[fill[b]++] = a;
  }
  for (std::size_t v = 0; v < node_count_; ++v)
    std::sort(adjacency_.begin() + offsets_[v], adjacency_.begin() + offsets_[v + 1]);
}

bool Graph::has_edge(NodeId a, NodeId b) const noexcept {
  if (a >= node_count_ || b >= node_count_) return false;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbours(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

ParsedGraph parse_edge_list(std::istream& in, std::optional<std::size_t> node_count) {
  ParsedGraph out;
  std::unordered_map<std::string, NodeId> ids;
  std::vector<Edge> edges;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(out.labels.size()));
    if (inserted) out.labels.push_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string u, v, extra;
    if (!(fields >> u >> v) || (fields >> extra))
      throw ParseError("expected two node tokens", line_no);
    const NodeId a = intern(u);
    const NodeId b = intern(v);
    if (a == b) {
      ++out.self_loops_dropped;
      continue;
    }
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  if (out.labels.empty()) throw ParseError("edge list is empty", 0);

  std::size_t n = out.labels.size();
  if (node_count) {
    if (*node_count < n)
      throw ParseError("node count " + std::to_string(*node_count) + " is less than the " +
                           std::to_string(n) + " distinct nodes in the edge list",
                       0);
    n = *node_count;
  }
  const std::size_t raw = edges.size();
  out.graph = Graph(n, std::move(edges));
  out.duplicates_collapsed = raw - out.graph.edge_count();
  return out;
}

ParsedGraph parse_edge_list_string(const std::string& text, std::optional<std::size_t> node_count) {
  std::istringstream in(text);
  return parse_edge_list(in, node_count);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

Graph generate_gnm(std::size_t n, std::uint64_t m, RngSeed seed) {
  const std::uint64_t total = pair_count(n);
  if (m > total)
    throw ParameterError("G(n, m) needs m <= C(n, 2) = " + std::to_string(total) + ", got " +
                         std::to_string(m));
  Engine rng = make_engine(seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total ? total - 1 : 0);

  // Draw whichever of the edge set or its complement is smaller.
  const bool complement = m > total / 2;
  const std::uint64_t wanted = complement ? total - m : m;
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(wanted * 2);
  std::vector<std::uint64_t> order;
  order.reserve(wanted);
  while (chosen.size() < wanted) {
    const std::uint64_t t = pick(rng);
    if (chosen.insert(t).second) order.push_back(t);
  }

  std::vector<Edge> edges;
  edges.reserve(m);
  if (complement) {
    for (std::uint64_t t = 0; t < total; ++t)
      if (!chosen.contains(t)) edges.push_back(decode_pair(t));
  } else {
    for (auto t : order) edges.push_back(decode_pair(t));
  }
  return Graph(n, std::move(edges));
}

Graph generate_gnp(std::size_t n, double p, RngSeed seed) {
  check_probability(p, "p");
  Engine rng = make_engine(seed);
  std::vector<Edge> edges;
  bernoulli_skip(pair_count(n), p, rng, [&](std::uint64_t t) { edges.push_back(decode_pair(t)); });
  return Graph(n, std::move(edges));
}

double TwoColourParams::cross() const { return std::sqrt(p * q); }

void TwoColourParams::validate() const {
  check_probability(p, "p");
  check_probability(q, "q");
}

Graph generate_two_colour(const TwoColourParams& params, RngSeed seed) {
  params.validate();
  Engine rng = make_engine(seed);
  const auto n1 = static_cast<NodeId>(params.n1);
  std::vector<Edge> edges;
  bernoulli_skip(pair_count(params.n1), params.p, rng,
                 [&](std::uint64_t t) { edges.push_back(decode_pair(t)); });
  bernoulli_skip(pair_count(params.n2), params.q, rng, [&](std::uint64_t t) {
    auto [a, b] = decode_pair(t);
    edges.emplace_back(a + n1, b + n1);
  });
  bernoulli_skip(static_cast<std::uint64_t>(params.n1) * params.n2, params.cross(), rng,
                 [&](std::uint64_t t) {
                   edges.emplace_back(static_cast<NodeId>(t / params.n2),
                                      static_cast<NodeId>(n1 + t % params.n2));
                 });
  return Graph(params.n1 + params.n2, std::move(edges));
}

std::uint64_t induced_edge_count(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<std::uint8_t> in(g.node_count(), 0);
  for (auto v : nodes) in[v] = 1;
  std::uint64_t twice = 0;
  for (auto v : nodes)
    for (auto w : g.neighbours(v)) twice += in[w];
  return twice / 2;
}

}  // namespace netgof
