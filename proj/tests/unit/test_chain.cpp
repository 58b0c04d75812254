#include <cmath>
#include <random>

#include "doctest.h"
#include "interchange/errors.hpp"
#include "interchange/lazy_chain.hpp"
#include "test_helpers.hpp"

using namespace interchange;

namespace {

// Sequential oracle: multiply by P one step at a time and stop at the first
// t meeting each definition. No dyadic powers, no bisection.
struct SequentialMixing {
  std::int64_t lmix = 0;
  std::int64_t tv = 0;
};

SequentialMixing sequential_mixing(const LazyChain& c) {
  const int n = c.size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  SequentialMixing out;
  for (std::int64_t t = 1; out.lmix == 0 || out.tv == 0; ++t) {
    p = p * c.transition();
    bool lower = true;
    double tv = 0.0;
    for (int i = 0; i < n; ++i) {
      double row = 0.0;
      for (int j = 0; j < n; ++j) {
        lower = lower && p(i, j) - 0.75 * c.stationary()(j) > c.tie_guard();
        row += std::abs(p(i, j) - c.stationary()(j));
      }
      tv = std::max(tv, row / 2);
    }
    if (out.lmix == 0 && lower) out.lmix = t;
    if (out.tv == 0 && tv < 0.25 - c.tie_guard()) out.tv = t;
  }
  return out;
}

}  // namespace

TEST_CASE("lazy chain of complete(3)") {
  const LazyChain c(load_graph("complete:3"));
  for (int i = 0; i < 3; ++i) {
    CHECK(c.transition()(i, i) == 0.5);
    CHECK(c.stationary()(i) == doctest::Approx(1.0 / 3));
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(c.transition()(i, j) == 0.25);
  }
}

TEST_CASE("lazy chain of path(3) and star(4)") {
  const LazyChain p(load_graph("path:3"));
  CHECK(p.transition()(1, 0) == 0.25);
  CHECK(p.stationary()(0) == 0.25);
  CHECK(p.stationary()(1) == 0.5);
  const LazyChain s(load_graph("star:4"));
  CHECK(s.stationary()(0) == 0.5);
  CHECK(s.stationary()(2) == doctest::Approx(1.0 / 6));
}

TEST_CASE("isolated vertex is rejected") {
  CHECK_THROWS_AS(LazyChain(WeightFunction(3, {{0, 1, 1.0}})), DegenerateWeightError);
}

TEST_CASE("transition powers") {
  const LazyChain c(load_graph("complete:3"));
  CHECK(c.power(0).isApprox(Eigen::MatrixXd::Identity(3, 3)));
  const auto p2 = c.power(2);
  CHECK(p2(0, 0) == doctest::Approx(3.0 / 8).epsilon(1e-15));
  CHECK(p2(0, 1) == doctest::Approx(5.0 / 16).epsilon(1e-15));
  const LazyChain path(load_graph("path:6"));
  const auto far = path.power(5000);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(far(i, j) == doctest::Approx(path.stationary()(j)).epsilon(1e-10));
  // Powers past the cached dyadics agree with step-by-step multiplication.
  Eigen::MatrixXd seq = Eigen::MatrixXd::Identity(6, 6);
  for (int t = 0; t < 77; ++t) seq = seq * path.transition();
  CHECK((path.power(77) - seq).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("mixing times match the sequential oracle") {
  SUBCASE("frozen small cases") {
    struct Case {
      const char* spec;
      std::int64_t lmix, tv;
      double delta;
    };
    // Exact rational values from tests/oracles/frozen_values.py.
    for (const Case& k : {Case{"complete:2", 1, 1, 2.0 / 3}, Case{"complete:3", 2, 1, 16.0 / 33},
                          Case{"complete:4", 2, 2, 0.5}, Case{"path:3", 4, 2, 8.0 / 27}}) {
      CAPTURE(k.spec);
      const LazyChain c(load_graph(k.spec));
      CHECK(c.lmix() == k.lmix);
      CHECK(c.tv_mix() == k.tv);
      CHECK(delta_factor(c).delta == doctest::Approx(k.delta).epsilon(1e-12));
    }
  }
  SUBCASE("random weighted graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const auto w = testing::random_weights(3 + trial % 6, rng, 0.5);
      const LazyChain c(w);
      const auto seq = sequential_mixing(c);
      CHECK(c.lmix() == seq.lmix);
      CHECK(c.tv_mix() == seq.tv);
    }
  }
  SUBCASE("families") {
    for (const char* spec : {"cycle:9", "path:8", "star:7", "hypercube:4", "hamming2:3", "regular-tree:3,2"}) {
      CAPTURE(spec);
      const LazyChain c(load_graph(spec));
      const auto seq = sequential_mixing(c);
      CHECK(c.lmix() == seq.lmix);
      CHECK(c.tv_mix() == seq.tv);
    }
  }
}

TEST_CASE("disconnected chains never mix") {
  const WeightFunction w(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  const LazyChain c(w);
  CHECK_FALSE(c.lmix().has_value());
  CHECK_FALSE(c.tv_mix().has_value());
  CHECK_THROWS_AS(delta_factor(c), DisconnectedError);
  CHECK_THROWS_AS(delta_clause_diagnostics(w, c), DisconnectedError);
  CHECK_THROWS_AS(comparison_bound(w, c), DisconnectedError);
  CHECK_THROWS_AS(verify_probability_bounds(c, w), DisconnectedError);
  const auto report = mixing_report(w);
  CHECK_FALSE(report.delta.has_value());
}

TEST_CASE("delta: two routes, lower bound, epsilon sequence") {
  const LazyChain k3(load_graph("complete:3"));
  const auto d = delta_factor(k3);
  REQUIRE(d.epsilon.size() == 2);
  CHECK(d.epsilon[0] == 0.5);
  CHECK(d.epsilon[1] == doctest::Approx(3.0 / 8));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto w = testing::random_weights(3 + trial % 7, rng, 0.4);
    const LazyChain c(w);
    const auto a = delta_factor(c);
    const auto b = delta_by_doubling(w, *c.lmix());
    CHECK(a.delta == doctest::Approx(b.delta).epsilon(1e-9));
    CHECK(a.delta >= 1.0 / (2.0 * static_cast<double>(*c.lmix())));
    CHECK(a.delta <= 1.0);
  }
}

TEST_CASE("clause diagnostics") {
  const auto k4 = load_graph("complete:4");
  const LazyChain c4(k4);
  const auto d = delta_clause_diagnostics(k4, c4);
  CHECK(d.min_weight_ratio_sq == doctest::Approx(1.0 / 9));
  CHECK(d.regular);
  CHECK(d.inverse_two_lmix == doctest::Approx(1.0 / (2.0 * static_cast<double>(*c4.lmix()))));
  const auto p3 = load_graph("path:3");
  const auto dp = delta_clause_diagnostics(p3, LazyChain(p3));
  CHECK(dp.min_weight_ratio_sq == doctest::Approx(0.25));
  CHECK_FALSE(dp.regular);
}

TEST_CASE("comparison lower bound") {
  CHECK(comparison_bound(load_graph("complete:3")) == doctest::Approx(16.0 / 33 / 2 * 4.0 / 6).epsilon(1e-12));
  std::mt19937_64 rng(3);
  const auto w = testing::random_weights(6, rng);
  for (double s : {0.01, 3.0, 250.0}) {
    CHECK(comparison_bound(w.scaled(s)) == doctest::Approx(s * comparison_bound(w)).epsilon(1e-10));
  }
}

TEST_CASE("lifted weights and doubling") {
  const auto k3 = load_graph("complete:3");
  const auto u = lift_lazy(k3);
  CHECK(u(0, 0) == 2.0);
  CHECK(u(0, 1) == 1.0);
  CHECK(u.row_sums()(0) == 4.0);
  CHECK(u.transition().isApprox(LazyChain(k3).transition()));
  const auto u2 = double_weight(u);
  CHECK(u2(1, 1) == doctest::Approx(1.5));

  const auto p3 = lift_lazy(load_graph("path:3"));
  CHECK(p3.row_sums()(0) == 2.0);
  CHECK(p3.row_sums()(1) == 4.0);
  CHECK(p3(1, 1) == 2.0);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = testing::random_weights(4 + trial % 5, rng);
    const LazyChain c(w);
    auto v = lift_lazy(w);
    const Eigen::VectorXd sums = v.row_sums();
    for (int k = 1; k <= 5; ++k) {
      v = double_weight(v);
      CHECK(((v.row_sums() - sums).cwiseAbs().array() <= 1e-12 * sums.array()).all());
      CHECK((v.transition() - c.power(std::int64_t{1} << k)).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
  CHECK_THROWS_AS(lift_lazy(WeightFunction(3, {{0, 1, 1.0}})), DegenerateWeightError);
}

TEST_CASE("probability upper bounds") {
  const auto k3 = load_graph("complete:3");
  const auto r = verify_probability_bounds(LazyChain(k3), k3);
  CHECK(r.connectivity_holds);
  CHECK(r.steps_checked == 2);
  CHECK(r.connectivity_slack == doctest::Approx(30.0 / std::sqrt(2.0) * 2.0 - 3.0 / 8));

  const auto cube = load_graph("hypercube:4");
  const auto rc = verify_probability_bounds(LazyChain(cube), cube);
  CHECK(rc.regular);
  CHECK(rc.regular_holds);
  CHECK(rc.connectivity_holds);
  // Below t = 17 both bounds exceed 1.
  CHECK(rc.regular_slack.value() > 0.0);
}

TEST_CASE("monotonicity and sandwich on assorted graphs") {
  std::mt19937_64 rng(9);
  std::vector<WeightFunction> graphs;
  for (const char* spec : {"complete:5", "cycle:8", "path:7", "star:6", "hypercube:3", "hamming2:3"})
    graphs.push_back(load_graph(spec));
  for (int i = 0; i < 10; ++i) graphs.push_back(testing::random_weights(5, rng, 0.5));
  for (const auto& w : graphs) {
    const LazyChain c(w);
    const auto mono = verify_monotonicity(c, 2 * *c.lmix());
    CHECK(mono.min_ratio_nondecreasing);
    CHECK(mono.tv_nonincreasing);
    const auto lmix = static_cast<double>(*c.lmix());
    const auto mix = static_cast<double>(*c.tv_mix());
    CHECK(lmix / 8 <= mix);
    CHECK(mix <= lmix);
    for (int t = 0; t <= 10; ++t) {
      const Eigen::VectorXd rows = c.power(t).rowwise().sum();
      CHECK((rows.array() - 1.0).abs().maxCoeff() <= 1e-10);
    }
  }
}
