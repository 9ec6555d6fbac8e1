#include "netgof/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "netgof/errors.hpp"

namespace netgof {

HypergeomNull HypergeomNull::for_graph(std::uint64_t n, std::uint64_t e, std::uint64_t k) {
  auto pairs = [](std::uint64_t m) { return m < 2 ? std::uint64_t{0} : m * (m - 1) / 2; };
  return {pairs(n), e, pairs(k)};
}

void HypergeomNull::validate() const {
  if (successes > population || draws > population)
    throw ParameterError("hypergeometric null needs successes, draws <= population");
}

std::int64_t HypergeomNull::support_min() const {
  const auto failures = population - successes;
  return draws > failures ? static_cast<std::int64_t>(draws - failures) : 0;
}

std::int64_t HypergeomNull::support_max() const {
  return static_cast<std::int64_t>(std::min(successes, draws));
}

double HypergeomNull::mean() const {
  return population ? static_cast<double>(draws) * static_cast<double>(successes) / population : 0.0;
}

double HypergeomNull::variance() const {
  if (population < 2) return 0.0;
  const double N = static_cast<double>(population);
  const double K = static_cast<double>(successes);
  const double n = static_cast<double>(draws);
  return n * (K / N) * ((N - K) / N) * ((N - n) / (N - 1));
}

double log_binomial(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

Hypergeometric::Hypergeometric(const HypergeomNull& null) : null_(null) {
  null.validate();
  lo_ = null.support_min();
  const std::int64_t hi = null.support_max();
  const auto size = static_cast<std::size_t>(hi - lo_ + 1);
  pmf_.assign(size, 0.0);

  const double N = static_cast<double>(null.population);
  const double K = static_cast<double>(null.successes);
  const double n = static_cast<double>(null.draws);
  const auto mode = std::clamp(
      static_cast<std::int64_t>(std::floor((n + 1.0) * (K + 1.0) / (N + 2.0))), lo_, hi);

  // Unnormalised weights relative to the mode; the ratio
  // P(y + 1) / P(y) = (K - y)(n - y) / ((y + 1)(N - K - n + y + 1)) is exact.
  const auto m = static_cast<std::size_t>(mode - lo_);
  pmf_[m] = 1.0;
  for (std::int64_t y = mode; y < hi; ++y) {
    const double yd = static_cast<double>(y);
    const double ratio = (K - yd) * (n - yd) / ((yd + 1.0) * (N - K - n + yd + 1.0));
    pmf_[static_cast<std::size_t>(y + 1 - lo_)] = pmf_[static_cast<std::size_t>(y - lo_)] * ratio;
  }
  for (std::int64_t y = mode; y > lo_; --y) {
    const double yd = static_cast<double>(y - 1);
    const double ratio = (K - yd) * (n - yd) / ((yd + 1.0) * (N - K - n + yd + 1.0));
    pmf_[static_cast<std::size_t>(y - 1 - lo_)] = pmf_[static_cast<std::size_t>(y - lo_)] / ratio;
  }

  // Sum small terms first.
  std::vector<double> sorted(pmf_);
  std::sort(sorted.begin(), sorted.end());
  double total = 0.0;
  for (double w : sorted) total += w;
  for (double& w : pmf_) w /= total;

  cdf_.resize(size);
  double acc = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    acc += pmf_[i];
    cdf_[i] = std::min(acc, 1.0);
  }
  cdf_.back() = 1.0;
}

double Hypergeometric::pmf(std::int64_t y) const {
  if (y < lo_ || y > support_max()) return 0.0;
  return pmf_[static_cast<std::size_t>(y - lo_)];
}

double Hypergeometric::cdf(std::int64_t y) const {
  if (y < lo_) return 0.0;
  if (y >= support_max()) return 1.0;
  return cdf_[static_cast<std::size_t>(y - lo_)];
}

std::int64_t Hypergeometric::quantile(double p) const {
  if (!(p > 0.0 && p <= 1.0))
    throw ParameterError("quantile probability must lie in (0, 1], got " + std::to_string(p));
  const auto it = std::lower_bound(cdf_.begin(), cdf_.end(), p);
  if (it == cdf_.end()) return support_max();
  return lo_ + static_cast<std::int64_t>(it - cdf_.begin());
}

double hypergeom_pmf(const HypergeomNull& null, std::int64_t y) {
  return Hypergeometric(null).pmf(y);
}

double hypergeom_cdf(const HypergeomNull& null, std::int64_t y) {
  return Hypergeometric(null).cdf(y);
}

std::int64_t hypergeom_quantile(const HypergeomNull& null, double p) {
  return Hypergeometric(null).quantile(p);
}

namespace {

constexpr int kMaxIterations = 1'000'000;
constexpr double kEps = 1e-16;

// Series for P(a, x), valid for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) break;
  }
  return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x), valid for x >= a + 1.
double gamma_q_fraction(double a, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) break;
  }
  return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_q(double a, double x) {
  if (!(a > 0.0)) throw ParameterError("gamma_q needs a > 0");
  if (x < 0.0 || std::isnan(x)) throw ParameterError("gamma_q needs x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_fraction(a, x);
}

double chi_square_sf(double x, int df) {
  if (df < 1) throw ParameterError("chi-square needs df >= 1, got " + std::to_string(df));
  if (x < 0.0 || std::isnan(x))
    throw ParameterError("chi-square statistic must be nonnegative, got " + std::to_string(x));
  return gamma_q(0.5 * df, 0.5 * x);
}

std::size_t optimal_subgraph_size(std::size_t n) {
  if (n < 2) throw ParameterError("optimal subgraph size needs n >= 2, got " + std::to_string(n));
  const double nd = static_cast<double>(n);
  const double k = (1.0 + std::sqrt(1.0 + 2.0 * nd * (nd - 1.0))) / 2.0;
  return std::clamp(static_cast<std::size_t>(std::llround(k)), std::size_t{2}, n);
}

}  // namespace netgof
