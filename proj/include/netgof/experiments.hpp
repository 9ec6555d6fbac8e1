#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netgof/gof.hpp"
#include "netgof/graph.hpp"
#include "netgof/rng.hpp"

namespace netgof {

/// Equal-sized two-colour model with heterogeneity ratio r = (q - p)/(p + q)
/// and expected mean degree `mean_degree`.
///
/// With h = n/2 and s = p + q, a red node expects p (h - 1) + sqrt(pq) h
/// neighbours and sqrt(pq) = (s/2) sqrt(1 - r^2), so
///   s = 2 d / ((h - 1) + h sqrt(1 - r^2)),  p = s (1 - r)/2,  q = s (1 + r)/2.
/// Throws ParameterError for odd n or r outside [0, 1], CalibrationError if
/// p or q leaves [0, 1].
TwoColourParams calibrate_two_colour(std::size_t n, double mean_degree, double ratio);

/// Analytic expected average degree of a two-colour graph.
double expected_mean_degree(const TwoColourParams& params);

struct WilsonInterval {
  double lo = 0.0;
  double hi = 1.0;
};

/// 95% Wilson score interval for `successes` out of `trials`.
WilsonInterval wilson_interval(std::size_t successes, std::size_t trials, double z = 1.959963984540054);

struct ExperimentConfig {
  std::vector<std::size_t> sizes{100, 178, 316, 562, 1000, 1778, 3162};
  std::vector<double> mean_degrees{1, 3, 5, 10};
  std::vector<double> ratios{0.01, 0.1, 0.2, 0.5, 0.75, 1.0};
  std::size_t replications = 100;
  std::size_t n_subgraphs = 1000;
  std::size_t replicates = 200;  ///< R, empirical method only
  double alpha = 0.05;
  Method method = Method::approximation;
  RngSeed base_seed{0};
  Exec exec = Exec::parallel;
  /// Called with one line per finished cell.
  std::function<void(const std::string&)> progress;

  /// Full grid: |V| = 10^i for i = 2, 2.25, ..., 4 (|V| <= 1000 for the
  /// empirical method), 500 replications (200 empirical).
  static ExperimentConfig paper_scale(Method method);

  void validate() const;
};

struct ExperimentRow {
  std::size_t size = 0;
  double mean_degree = 0.0;
  std::optional<double> ratio;
  Method method = Method::approximation;
  std::size_t replications = 0;
  std::size_t rejections = 0;
  double rejection_rate = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 1.0;
  double mean_runtime = 0.0;  ///< seconds per test
  double mean_bins = 0.0;     ///< average bin count M
  std::string skipped;        ///< reason, empty when the cell ran
};

/// Homogeneous G(n, round(d n / 2)) networks: estimated significance level.
std::vector<ExperimentRow> run_significance(const ExperimentConfig& config);

/// Calibrated two-colour networks: estimated power of the approximation test.
std::vector<ExperimentRow> run_power(const ExperimentConfig& config);

/// Mean wall-clock time of one test per (|V|, d) cell. Runs serially.
std::vector<ExperimentRow> run_timing(const ExperimentConfig& config);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace netgof
