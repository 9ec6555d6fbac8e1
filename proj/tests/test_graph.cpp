#include <cmath>
#include <set>

#include "doctest.h"
#include "netgof/errors.hpp"
#include "netgof/graph.hpp"
#include "oracles.hpp"

using namespace netgof;

TEST_SUITE("graph") {
  TEST_CASE("constructor normalises orientation and duplicates") {
    Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
    CHECK(g.node_count() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges()[0] == Edge{0, 3});
    CHECK(g.edges()[1] == Edge{1, 2});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK(g.degree(1) == 1);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), ParameterError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), ParameterError);
  }

  TEST_CASE("parse_edge_list") {
    SUBCASE("basic") {
      auto p = parse_edge_list_string("1 2\n1 3");
      CHECK(p.graph.node_count() == 3);
      CHECK(p.graph.edge_count() == 2);
      CHECK(p.labels == std::vector<std::string>{"1", "2", "3"});
    }
    SUBCASE("duplicates, reversals and loops") {
      auto p = parse_edge_list_string("a b\nb a\nc c");
      CHECK(p.graph.node_count() == 3);
      CHECK(p.graph.edge_count() == 1);
      CHECK(p.self_loops_dropped == 1);
      CHECK(p.duplicates_collapsed == 1);
    }
    SUBCASE("node count override adds isolated nodes") {
      auto p = parse_edge_list_string("1 2\n1 3", 4);
      CHECK(p.graph.node_count() == 4);
      CHECK(p.graph.edge_count() == 2);
      CHECK(p.graph.degree(3) == 0);
      CHECK_THROWS_AS(parse_edge_list_string("1 2\n1 3", 2), ParseError);
    }
    SUBCASE("comments, blank lines, tabs and CRLF") {
      auto p = parse_edge_list_string("# header\n\n  x\ty\r\n   # indented comment\ny z\r\n");
      CHECK(p.graph.node_count() == 3);
      CHECK(p.graph.edge_count() == 2);
    }
    SUBCASE("malformed lines report their line number") {
      try {
        parse_edge_list_string("1 2\n# c\n3 4 5\n");
        FAIL("expected ParseError");
      } catch (const ParseError& e) {
        CHECK(e.line() == 3);
      }
      CHECK_THROWS_AS(parse_edge_list_string("1 2\nlonely\n"), ParseError);
    }
    SUBCASE("empty input") {
      CHECK_THROWS_AS(parse_edge_list_string(""), ParseError);
      CHECK_THROWS_AS(parse_edge_list_string("# only comments\n\n"), ParseError);
    }
  }

  TEST_CASE("generate_gnm") {
    CHECK(generate_gnm(4, 6, RngSeed{11}) == Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
    CHECK(generate_gnm(50, 0, RngSeed{3}).edge_count() == 0);
    CHECK_THROWS_AS(generate_gnm(4, 7, RngSeed{1}), ParameterError);

    SUBCASE("exact edge count on both sampling branches") {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        CHECK(generate_gnm(30, 100, RngSeed{seed}).edge_count() == 100);  // direct
        CHECK(generate_gnm(30, 400, RngSeed{seed}).edge_count() == 400);  // complement
      }
    }
    SUBCASE("determinism") {
      CHECK(generate_gnm(200, 500, RngSeed{9}) == generate_gnm(200, 500, RngSeed{9}));
      CHECK_FALSE(generate_gnm(200, 500, RngSeed{9}) == generate_gnm(200, 500, RngSeed{10}));
    }
    SUBCASE("fixed pair inclusion frequency is m / C(n, 2)") {
      // Binomial oracle: 5000 seeds, p = 250 / 4950.
      const int trials = 5000;
      int hits = 0;
      for (int s = 1; s <= trials; ++s) hits += generate_gnm(100, 250, RngSeed{std::uint64_t(s)}).has_edge(17, 63);
      const double p = 250.0 / 4950.0;
      const double sigma = std::sqrt(trials * p * (1 - p));
      CHECK(std::abs(hits - trials * p) <= 3 * sigma);
    }
  }

  TEST_CASE("generate_gnp") {
    CHECK(generate_gnp(40, 0.0, RngSeed{1}).edge_count() == 0);
    CHECK(generate_gnp(40, 1.0, RngSeed{1}).edge_count() == pair_count(40));
    CHECK_THROWS_AS(generate_gnp(10, 1.5, RngSeed{1}), ParameterError);
    CHECK_THROWS_AS(generate_gnp(10, -0.1, RngSeed{1}), ParameterError);
    CHECK(generate_gnp(300, 0.02, RngSeed{5}) == generate_gnp(300, 0.02, RngSeed{5}));

    // Mean |E| over 2000 seeds against the binomial mean 0.05 C(200, 2) = 995.
    const int trials = 2000;
    double sum = 0.0;
    for (int s = 1; s <= trials; ++s) sum += generate_gnp(200, 0.05, RngSeed{std::uint64_t(s)}).edge_count();
    const double mean = sum / trials;
    const double sd_of_mean = std::sqrt(19900 * 0.05 * 0.95 / trials);
    CHECK(std::abs(mean - 995.0) <= 3 * sd_of_mean);
  }

  TEST_CASE("generate_gnp covers every pair uniformly") {
    // Each of the C(8, 2) = 28 pairs should appear in about p of the draws.
    std::vector<int> hits(28, 0);
    const int trials = 4000;
    for (int s = 0; s < trials; ++s) {
      auto g = generate_gnp(8, 0.3, RngSeed{std::uint64_t(s)});
      int idx = 0;
      for (NodeId a = 0; a < 8; ++a)
        for (NodeId b = a + 1; b < 8; ++b, ++idx) hits[idx] += g.has_edge(a, b);
    }
    const double sigma = std::sqrt(trials * 0.3 * 0.7);
    for (int h : hits) CHECK(std::abs(h - trials * 0.3) <= 4 * sigma);
  }

  TEST_CASE("generate_two_colour") {
    SUBCASE("p = 1, q = 0 gives a red clique only") {
      auto g = generate_two_colour({6, 5, 1.0, 0.0}, RngSeed{2});
      CHECK(g.node_count() == 11);
      CHECK(g.edge_count() == pair_count(6));
      for (auto [a, b] : g.edges()) {
        CHECK(a < 6);
        CHECK(b < 6);
      }
    }
    SUBCASE("p = q collapses to G(n, p)") {
      const int trials = 500;
      double sum = 0.0;
      for (int s = 0; s < trials; ++s)
        sum += generate_two_colour({50, 50, 0.04, 0.04}, RngSeed{std::uint64_t(s)}).edge_count();
      const double var = pair_count(100) * 0.04 * 0.96;
      CHECK(std::abs(sum / trials - pair_count(100) * 0.04) <= 3 * std::sqrt(var / trials));
    }
    SUBCASE("block densities") {
      // Each block's empirical density tracks its probability.
      const TwoColourParams params{40, 60, 0.3, 0.05};
      double rr = 0, bb = 0, rb = 0;
      const int trials = 300;
      for (int s = 0; s < trials; ++s) {
        auto g = generate_two_colour(params, RngSeed{std::uint64_t(s)});
        for (auto [a, b] : g.edges()) {
          if (b < 40) ++rr;
          else if (a >= 40) ++bb;
          else ++rb;
        }
      }
      CHECK(rr / trials / pair_count(40) == doctest::Approx(0.3).epsilon(0.02));
      CHECK(bb / trials / pair_count(60) == doctest::Approx(0.05).epsilon(0.03));
      CHECK(rb / trials / (40.0 * 60.0) == doctest::Approx(params.cross()).epsilon(0.02));
    }
    CHECK_THROWS_AS(generate_two_colour({5, 5, 1.2, 0.1}, RngSeed{1}), ParameterError);
  }

  TEST_CASE("induced_edge_count") {
    const Graph a = oracle::network_a();
    const std::vector<NodeId> s123{0, 1, 2};
    const std::vector<NodeId> s234{1, 2, 3};
    CHECK(induced_edge_count(a, s123) == 2);
    CHECK(induced_edge_count(a, s234) == 0);
  }
}
