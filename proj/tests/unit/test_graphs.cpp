#include <sstream>

#include "doctest.h"
#include "interchange/errors.hpp"
#include "interchange/weight_function.hpp"

using namespace interchange;

TEST_CASE("complete(3) has unit weights on all pairs") {
  const auto w = load_graph("complete:3");
  CHECK(w.entries().size() == 3);
  for (int i = 0; i < 3; ++i) CHECK(w.vertex_weight(i) == 2.0);
  CHECK(w.total() == 6.0);
}

TEST_CASE("hamming2(2) is 2-regular on 4 vertices") {
  const auto w = load_graph("hamming2:2");
  CHECK(w.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(w.vertex_weight(i) == 2.0);
  CHECK(w.total() == 8.0);
}

TEST_CASE("hamming2(m) joins pairs sharing exactly one coordinate") {
  for (int m = 2; m <= 5; ++m) {
    const auto w = load_graph("hamming2:" + std::to_string(m));
    for (int v = 0; v < m * m; ++v) {
      CHECK(w.vertex_weight(v) == 2.0 * (m - 1));
      for (int u = v + 1; u < m * m; ++u) {
        const int shared = (v / m == u / m) + (v % m == u % m);
        CHECK(w.weight(u, v) == (shared == 1 ? 1.0 : 0.0));
      }
    }
    CHECK(w.total() == 2.0 * (m * m * m - m * m));
  }
}

TEST_CASE("path(3) weights and degrees") {
  const auto w = load_graph("path:3");
  CHECK(w.weight(0, 1) == 1.0);
  CHECK(w.weight(1, 2) == 1.0);
  CHECK(w.weight(0, 2) == 0.0);
  CHECK(w.vertex_weights() == std::vector<double>{1, 2, 1});
}

TEST_CASE("degree_stats") {
  SUBCASE("complete(4)") {
    const auto s = degree_stats(load_graph("complete:4"));
    CHECK(s.vertex_weights == std::vector<double>{3, 3, 3, 3});
    CHECK(s.total == 12.0);
    CHECK(s.min_positive_weight == 1.0);
    CHECK(s.connected);
    CHECK(s.regular);
  }
  SUBCASE("min* ignores zeros") {
    const WeightFunction w(3, {{0, 1, 0.5}, {1, 2, 2.0}, {0, 2, 0.0}});
    CHECK(w.entries().size() == 2);
    CHECK(degree_stats(w).min_positive_weight == 0.5);
    CHECK_FALSE(degree_stats(w).regular);
  }
  SUBCASE("two disjoint edges") {
    const WeightFunction w(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_FALSE(degree_stats(w).connected);
  }
  SUBCASE("all zero") { CHECK_THROWS_AS(degree_stats(WeightFunction(3)), DegenerateWeightError); }
}

TEST_CASE("regular families: equal degrees and min w_i^2 / w_tot = d / n") {
  for (const char* spec : {"complete:5", "cycle:7", "hypercube:3", "hypercube:4", "hamming2:3"}) {
    const auto w = load_graph(spec);
    const auto s = degree_stats(w);
    CAPTURE(spec);
    CHECK(s.regular);
    const double d = s.vertex_weights.front();
    CHECK(s.min_vertex_weight * s.min_vertex_weight / s.total == doctest::Approx(d / w.size()));
    double sum = 0;
    for (double x : s.vertex_weights) sum += x;
    CHECK(sum == s.total);
  }
}

TEST_CASE("other families") {
  const auto star = load_graph("star:4");
  CHECK(star.vertex_weight(0) == 3.0);
  CHECK(star.vertex_weight(3) == 1.0);
  const auto tree = load_graph("regular-tree:3,2");
  CHECK(tree.size() == 10);
  CHECK(tree.entries().size() == 9);
  CHECK(tree.vertex_weight(0) == 3.0);
  CHECK(tree.vertex_weight(1) == 3.0);
  CHECK(tree.vertex_weight(9) == 1.0);
  CHECK(is_connected(tree));
  const auto cube = load_graph("hypercube:3");
  CHECK(cube.size() == 8);
  CHECK(cube.entries().size() == 12);
}

TEST_CASE("invalid family parameters") {
  CHECK_THROWS_AS(load_graph("regular-tree:1,3"), ParameterError);
  CHECK_THROWS_AS(load_graph("complete:1"), ParameterError);
  CHECK_THROWS_AS(load_graph("cycle:2"), ParameterError);
  CHECK_THROWS_AS(load_graph("hamming2:1"), ParameterError);
  CHECK_THROWS_AS(load_graph("wheel:5"), ParameterError);
  CHECK_THROWS_AS(load_graph("complete:x"), ParameterError);
  CHECK_THROWS_AS(load_graph("complete"), ParameterError);
}

TEST_CASE("weight function invariants") {
  CHECK_THROWS_AS(WeightFunction(3, {{1, 1, 1.0}}), ParameterError);
  CHECK_THROWS_AS(WeightFunction(3, {{0, 1, -1.0}}), ParameterError);
  CHECK_THROWS_AS(WeightFunction(3, {{0, 3, 1.0}}), ParameterError);
  CHECK_THROWS_AS(WeightFunction(3, {{0, 1, 1.0}, {1, 0, 2.0}}), ParameterError);
  const WeightFunction w(3, {{2, 0, 1.5}});
  CHECK(w.weight(0, 2) == 1.5);
  CHECK(w.weight(2, 0) == 1.5);
  CHECK(w.scaled(2.0).weight(0, 2) == 3.0);
}

TEST_CASE("weight file format") {
  std::istringstream in("# comment\nn 4\n0 1 1.5\n2 3 0.25\n\n1 2 2\n");
  const auto w = parse_weight_file(in);
  CHECK(w.size() == 4);
  CHECK(w.weight(1, 0) == 1.5);
  CHECK(w.weight(2, 3) == 0.25);
  std::istringstream again(format_weight_file(w));
  const auto back = parse_weight_file(again);
  CHECK(back.entries() == w.entries());

  std::istringstream dup("n 3\n0 1 1\n1 0 2\n");
  CHECK_THROWS_AS(parse_weight_file(dup), ParameterError);
  std::istringstream no_header("0 1 1\n");
  CHECK_THROWS_AS(parse_weight_file(no_header), ParameterError);
  std::istringstream junk("n 3\n0 1 1 extra\n");
  CHECK_THROWS_AS(parse_weight_file(junk), ParameterError);
  CHECK_THROWS_AS(read_weight_file("/nonexistent/weights.txt"), ParameterError);
}
