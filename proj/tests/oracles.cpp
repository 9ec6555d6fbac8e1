#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

namespace oracle {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return static_cast<std::uint64_t>(c);
}

std::map<std::int64_t, double> hypergeom_pmf_exact(std::uint64_t population,
                                                   std::uint64_t successes, std::uint64_t draws) {
  std::map<std::int64_t, double> pmf;
  const std::uint64_t total = binomial(population, draws);
  for (std::uint64_t y = 0; y <= draws; ++y) {
    const std::uint64_t ways = binomial(successes, y) * binomial(population - successes, draws - y);
    if (ways) pmf[static_cast<std::int64_t>(y)] = static_cast<double>(ways) / static_cast<double>(total);
  }
  return pmf;
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
               double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 60);
}

}  // namespace

double chi_square_sf_quadrature(double x, int df) {
  const double k = 0.5 * df;
  const double log_norm = -k * std::log(2.0) - std::lgamma(k);
  auto density = [&](double t) {
    return t <= 0.0 ? 0.0 : std::exp(log_norm + (k - 1.0) * std::log(t) - 0.5 * t);
  };
  // Integrate piecewise so the adaptive rule sees the peak.
  const double upper = std::max(x, static_cast<double>(df)) + 60.0 * std::sqrt(2.0 * df) + 200.0;
  double total = 0.0;
  const int pieces = 64;
  for (int i = 0; i < pieces; ++i) {
    const double a = x + (upper - x) * i / pieces;
    const double b = x + (upper - x) * (i + 1) / pieces;
    total += integrate(density, a, b, 1e-14);
  }
  return total;
}

std::vector<netgof::Graph> all_graphs(std::size_t n, std::size_t m) {
  std::vector<netgof::Edge> pairs;
  for (netgof::NodeId a = 0; a < n; ++a)
    for (netgof::NodeId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<netgof::Graph> graphs;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != m) continue;
    std::vector<netgof::Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    graphs.emplace_back(n, edges);
  }
  return graphs;
}

std::map<std::uint64_t, double> edge_count_law_bruteforce(const netgof::Graph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  std::map<std::uint64_t, std::uint64_t> tally;
  std::uint64_t subsets = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
    ++subsets;
    std::uint64_t edges = 0;
    for (netgof::NodeId a = 0; a < n; ++a)
      for (netgof::NodeId b = a + 1; b < n; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && g.has_edge(a, b)) ++edges;
    ++tally[edges];
  }
  std::map<std::uint64_t, double> law;
  for (auto [y, c] : tally) law[y] = static_cast<double>(c) / static_cast<double>(subsets);
  return law;
}

double ks_uniform(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    d = std::max(d, (i + 1) / n - sample[i]);
    d = std::max(d, sample[i] - i / n);
  }
  return d;
}

netgof::Graph network_a() { return netgof::Graph(4, {{0, 1}, {0, 2}}); }
netgof::Graph network_b() { return netgof::Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace oracle
