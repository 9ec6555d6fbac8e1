#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the library's numerical code paths.

#include <cstdint>
#include <map>
#include <vector>

#include "netgof/graph.hpp"

namespace oracle {

/// Exact C(n, k) for small arguments.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Hypergeometric pmf from exact integer binomials (population <= ~60).
std::map<std::int64_t, double> hypergeom_pmf_exact(std::uint64_t population,
                                                   std::uint64_t successes, std::uint64_t draws);

/// P(X >= x) for X ~ chi-square(df) by adaptive Simpson integration of the
/// density over [x, x + tail].
double chi_square_sf_quadrature(double x, int df);

/// Every simple graph on n nodes with exactly m edges.
std::vector<netgof::Graph> all_graphs(std::size_t n, std::size_t m);

/// Brute-force induced edge count law: enumerates subsets by bitmask and
/// checks every pair with has_edge (n <= 20).
std::map<std::uint64_t, double> edge_count_law_bruteforce(const netgof::Graph& g, std::size_t k);

/// Kolmogorov-Smirnov distance between the sample and U(0, 1).
double ks_uniform(std::vector<double> sample);

/// Fig. 1 networks, nodes relabelled 0..3.
netgof::Graph network_a();
netgof::Graph network_b();

}  // namespace oracle
