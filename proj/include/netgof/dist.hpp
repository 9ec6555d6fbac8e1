#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace netgof {

/// Null law of the induced edge count: `draws` potential edges taken without
/// replacement from `population` potential edges, `successes` of which exist.
struct HypergeomNull {
  std::uint64_t population = 0;  ///< C(|V|, 2)
  std::uint64_t successes = 0;   ///< |E|
  std::uint64_t draws = 0;       ///< C(k, 2)

  /// Null for sampling k of n nodes from a graph with e edges.
  static HypergeomNull for_graph(std::uint64_t n, std::uint64_t e, std::uint64_t k);

  void validate() const;
  std::int64_t support_min() const;
  std::int64_t support_max() const;
  double mean() const;
  double variance() const;

  friend bool operator==(const HypergeomNull&, const HypergeomNull&) = default;
};

/// Tabulated pmf/cdf over the full support.
///
/// The pmf is anchored at the mode in log space (log-gamma), extended in both
/// directions with the exact term ratio, and normalised, so it sums to one to
/// rounding even when the population is ~1e8.
class Hypergeometric {
 public:
  explicit Hypergeometric(const HypergeomNull& null);

  const HypergeomNull& null() const noexcept { return null_; }
  std::int64_t support_min() const noexcept { return lo_; }
  std::int64_t support_max() const noexcept { return lo_ + static_cast<std::int64_t>(pmf_.size()) - 1; }

  double pmf(std::int64_t y) const;
  double cdf(std::int64_t y) const;
  /// Least y in the support with cdf(y) >= p; p must lie in (0, 1].
  std::int64_t quantile(double p) const;

 private:
  HypergeomNull null_;
  std::int64_t lo_ = 0;
  std::vector<double> pmf_;
  std::vector<double> cdf_;
};

double hypergeom_pmf(const HypergeomNull& null, std::int64_t y);
double hypergeom_cdf(const HypergeomNull& null, std::int64_t y);
std::int64_t hypergeom_quantile(const HypergeomNull& null, double p);

/// log C(n, k) via log-gamma.
double log_binomial(double n, double k);

/// Regularised upper incomplete gamma Q(a, x).
double gamma_q(double a, double x);

/// Upper tail P(X >= x) of a chi-square variable with `df` degrees of freedom.
double chi_square_sf(double x, int df);

/// Subgraph size maximising the variance of the induced edge count,
/// (1 + sqrt(1 + 2 n (n - 1))) / 2, rounded half away from zero and clamped
/// to [2, n].
std::size_t optimal_subgraph_size(std::size_t n);

}  // namespace netgof
