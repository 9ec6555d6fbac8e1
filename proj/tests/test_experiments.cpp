#include <cmath>
#include <sstream>

#include "doctest.h"
#include "netgof/errors.hpp"
#include "netgof/experiments.hpp"
#include "netgof/report.hpp"

using namespace netgof;

TEST_SUITE("experiments") {
  TEST_CASE("calibration") {
    SUBCASE("r = 0 is the homogeneous rate") {
      const auto p = calibrate_two_colour(1000, 5.0, 0.0);
      CHECK(p.p == doctest::Approx(5.0 / 999.0).epsilon(1e-14));
      CHECK(p.q == doctest::Approx(5.0 / 999.0).epsilon(1e-14));
      CHECK(p.n1 == 500);
      CHECK(p.n2 == 500);
    }
    SUBCASE("published difference at (1000, 5, 0.5)") {
      const auto p = calibrate_two_colour(1000, 5.0, 0.5);
      CHECK(std::abs((p.q - p.p) - 0.005364) < 1e-5);
    }
    SUBCASE("r = 1 empties the red class") {
      const auto p = calibrate_two_colour(1000, 5.0, 1.0);
      CHECK(p.p == 0.0);
      CHECK(p.q == doctest::Approx(10.0 / 499.0).epsilon(1e-14));
      CHECK(p.cross() == 0.0);
    }
    SUBCASE("round trip over a grid") {
      for (std::size_t n : {100, 316, 1000, 10000})
        for (double d : {1.0, 3.0, 5.0, 10.0})
          for (double r : {0.0, 0.01, 0.1, 0.2, 0.5, 0.75, 1.0}) {
            const auto p = calibrate_two_colour(n, d, r);
            CHECK(std::abs(expected_mean_degree(p) - d) < 1e-9);
            CHECK(std::abs((p.q - p.p) / (p.p + p.q) - r) < 1e-12);
          }
    }
    CHECK_THROWS_AS(calibrate_two_colour(101, 5.0, 0.5), ParameterError);
    CHECK_THROWS_AS(calibrate_two_colour(100, 5.0, 1.5), ParameterError);
    CHECK_THROWS_AS(calibrate_two_colour(10, 9.0, 1.0), CalibrationError);
  }

  TEST_CASE("calibrated two-colour graphs hit the mean degree") {
    const auto params = calibrate_two_colour(1000, 5.0, 0.5);
    const int trials = 500;
    std::vector<double> degrees;
    for (int s = 0; s < trials; ++s)
      degrees.push_back(generate_two_colour(params, RngSeed{std::uint64_t(s)}).mean_degree());
    double mean = 0.0, var = 0.0;
    for (double d : degrees) mean += d / trials;
    for (double d : degrees) var += (d - mean) * (d - mean) / (trials - 1);
    CHECK(std::abs(mean - 5.0) <= 3.0 * std::sqrt(var / trials));
  }

  TEST_CASE("wilson interval") {
    // Reference values: statsmodels proportion_confint(10, 200, method="wilson").
    const auto ci = wilson_interval(10, 200);
    CHECK(ci.lo == doctest::Approx(0.027382645600763922).epsilon(1e-12));
    CHECK(ci.hi == doctest::Approx(0.089578148138776).epsilon(1e-12));
    const auto zero = wilson_interval(0, 50);
    CHECK(zero.lo == 0.0);
    CHECK(zero.hi > 0.0);
    const auto all = wilson_interval(50, 50);
    CHECK(all.hi == doctest::Approx(1.0));
    for (std::size_t n : {1, 7, 100, 500})
      for (std::size_t s = 0; s <= n; s += std::max<std::size_t>(1, n / 9)) {
        const auto w = wilson_interval(s, n);
        const double rate = static_cast<double>(s) / n;
        CHECK(w.lo <= rate + 1e-15);
        CHECK(w.hi >= rate - 1e-15);
      }
  }

  TEST_CASE("paper-scale grid") {
    const auto approx = ExperimentConfig::paper_scale(Method::approximation);
    CHECK(approx.sizes == std::vector<std::size_t>{100, 178, 316, 562, 1000, 1778, 3162, 5623, 10000});
    CHECK(approx.replications == 500);
    const auto emp = ExperimentConfig::paper_scale(Method::empirical);
    CHECK(emp.sizes.back() == 1000);
    CHECK(emp.replications == 200);
  }

  TEST_CASE("config validation") {
    ExperimentConfig c;
    c.alpha = 1.0;
    CHECK_THROWS_AS(c.validate(), ParameterError);
    c = {};
    c.sizes = {1};
    CHECK_THROWS_AS(c.validate(), ParameterError);
    c = {};
    c.ratios = {1.2};
    CHECK_THROWS_AS(c.validate(), ParameterError);
  }

  TEST_CASE("significance sweep is reproducible and well formed") {
    ExperimentConfig c;
    c.sizes = {60, 120};
    c.mean_degrees = {3, 200};
    c.replications = 20;
    c.n_subgraphs = 200;
    c.base_seed = RngSeed{5};
    const auto rows = run_significance(c);
    REQUIRE(rows.size() == 4);
    CHECK_FALSE(rows[1].skipped.empty());  // d = 200 >= |V| - 1
    for (const auto& row : {rows[0], rows[2]}) {
      CHECK(row.skipped.empty());
      CHECK(row.replications == 20);
      CHECK(row.rejection_rate == doctest::Approx(row.rejections / 20.0));
      const auto ci = wilson_interval(row.rejections, row.replications);
      CHECK(row.ci_lo == ci.lo);
      CHECK(row.ci_hi == ci.hi);
      CHECK(row.mean_runtime > 0.0);
      CHECK(row.mean_bins >= 1.0);
    }
    const auto again = run_significance(c);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(again[i].rejections == rows[i].rejections);

    // A cell's seed depends on its parameters, not its position in the grid.
    ExperimentConfig single = c;
    single.sizes = {120};
    single.mean_degrees = {3};
    CHECK(run_significance(single)[0].rejections == rows[2].rejections);

    c.exec = Exec::serial;
    const auto serial = run_significance(c);
    for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial[i].rejections == rows[i].rejections);
  }

  TEST_CASE("power sweep") {
    ExperimentConfig c;
    c.sizes = {200, 201};
    c.mean_degrees = {5};
    c.ratios = {0.0, 1.0};
    c.replications = 20;
    c.base_seed = RngSeed{1};
    const auto rows = run_power(c);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].ratio == 0.0);
    CHECK(rows[1].rejection_rate >= rows[0].rejection_rate);
    CHECK_FALSE(rows[2].skipped.empty());  // odd |V|
    c.method = Method::empirical;
    CHECK_THROWS_AS(run_power(c), ParameterError);
  }

  TEST_CASE("timing sweep") {
    ExperimentConfig c;
    c.sizes = {100, 178};
    c.mean_degrees = {5};
    c.replications = 3;
    const auto rows = run_timing(c);
    REQUIRE(rows.size() == 2);
    for (const auto& row : rows) CHECK(row.mean_runtime > 0.0);
  }

  TEST_CASE("csv and json rows") {
    ExperimentRow row;
    row.size = 100;
    row.mean_degree = 5;
    row.ratio = 0.5;
    row.replications = 10;
    row.rejections = 3;
    row.rejection_rate = 0.3;
    ExperimentRow skipped;
    skipped.size = 7;
    skipped.skipped = "odd, \"quoted\" reason";
    const std::vector<ExperimentRow> rows{row, skipped};
    std::ostringstream csv;
    write_csv(csv, rows);
    const std::string text = csv.str();
    CHECK(text.rfind("size,mean_degree,ratio,method,replications,rejections,rejection_rate", 0) == 0);
    CHECK(text.find("100,5,0.5,approximation,10,3,0.29999999999999999") != std::string::npos);
    CHECK(text.find("\"odd, \"\"quoted\"\" reason\"\r\n") != std::string::npos);
    const Json json = to_json(std::span<const ExperimentRow>(rows));
    CHECK(json.size() == 2);
    CHECK(json[0]["ratio"] == 0.5);
    CHECK(json[1]["ratio"].is_null());
    CHECK(json[0]["skipped"].is_null());
  }

  TEST_CASE("log-log slope") {
    CHECK(log_log_slope({1, 10, 100}, {3, 300, 30000}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(log_log_slope({1}, {1}), ParameterError);
  }
}
