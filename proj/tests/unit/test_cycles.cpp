#include <cmath>
#include <map>
#include <random>

#include "doctest.h"
#include "interchange/cycles.hpp"
#include "interchange/errors.hpp"
#include "interchange/group_algebra.hpp"
#include "test_helpers.hpp"

using namespace interchange;

namespace {

std::map<std::string, int> as_map(const CycleFormula& f) {
  std::map<std::string, int> m;
  for (const auto& term : f.terms) m[term.partition.to_string()] = term.coefficient;
  return m;
}

// w4 from the oracle script
WeightFunction w4() {
  return WeightFunction(4, {{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, 2.0}, {0, 3, 0.25}, {0, 2, 1.5}});
}

}  // namespace

TEST_CASE("coefficient tables") {
  CHECK(as_map(cycle_coefficients(6, 4)) ==
        std::map<std::string, int>{{"[6]", 1}, {"[3^2]", -1}, {"[2^2,1^2]", 1}, {"[2,1^4]", -1}});
  CHECK(as_map(cycle_coefficients(3, 2)) == std::map<std::string, int>{{"[3]", 1}, {"[1^3]", -1}});
  CHECK(as_map(cycle_coefficients(4, 1)) == std::map<std::string, int>{{"[4]", 1}, {"[3,1]", 1}});
  CHECK_THROWS_AS(cycle_coefficients(4, 0), ParameterError);
  CHECK_THROWS_AS(cycle_coefficients(4, 5), ParameterError);
}

TEST_CASE("every candidate is a valid partition and the table sums to zero") {
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      const auto f = cycle_coefficients(n, k);
      long long weighted = 0;
      for (const auto& term : f.terms) {
        CHECK(term.partition.size() == n);
        weighted += term.coefficient * static_cast<long long>(hook_dim(term.partition));
      }
      // At t = 0 the formula gives (1/k) sum a_rho dim rho = number of k-cycles of the identity.
      CHECK(weighted == (k == 1 ? n : 0));
    }
  }
}

TEST_CASE("family closed forms match contents and hooks") {
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (auto family : {CycleFamily::first, CycleFamily::second}) {
        const auto [lo, hi] = family_index_range(n, k, family);
        for (int i = lo; i <= hi; ++i) {
          const auto v = family_lambda_dim(n, k, i, family);
          const auto rho = family_partition(n, k, i, family);
          CHECK(v.partition == rho);
          CHECK(v.lambda_kn == doctest::Approx(lambda_kn(rho)).epsilon(1e-12));
          CHECK(v.dim == hook_dim(rho));
        }
        if (lo <= hi) CHECK_THROWS_AS(family_lambda_dim(n, k, hi + 1, family), ParameterError);
      }
    }
  }
}

TEST_CASE("complete(3) closed forms") {
  const auto k3 = complete_graph(3);
  for (double t : {0.0, 0.1, 0.5, 1.0, 3.0}) {
    CHECK(std::abs(expected_cycles_spectral(k3, 2, t) - 0.5 * (1 - std::exp(-6 * t))) < 1e-10);
    CHECK(std::abs(expected_cycles_spectral(k3, 3, t) - std::pow(1 - std::exp(-3 * t), 2) / 3) < 1e-10);
  }
  CHECK(expected_cycles_spectral(k3, 2, 0.5) == doctest::Approx(0.475106465816068).epsilon(1e-12));
  CHECK(expected_cycles_spectral(k3, 3, 0.5) == doctest::Approx(0.2011755826903357).epsilon(1e-12));
}

TEST_CASE("frozen weighted values") {
  const auto w = w4();
  const double at03[] = {2.1954033599196805, 0.5338061162741906, 0.184428868316846, 0.04592445064535011};
  const double at10[] = {1.2700185465347409, 0.5146666886484418, 0.32037847093843747, 0.18487816583826652};
  for (int k = 1; k <= 4; ++k) {
    CHECK(std::abs(expected_cycles_spectral(w, k, 0.3) - at03[k - 1]) < 1e-10);
    CHECK(std::abs(expected_cycles_spectral(w, k, 1.0) - at10[k - 1]) < 1e-10);
    CHECK(std::abs(exact_cycles_bruteforce(w, k, 0.3) - at03[k - 1]) < 1e-10);
  }
}

TEST_CASE("spectral and brute force agree") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + trial % 4;
    const auto w = testing::random_weights(n, rng, 0.3, 0.1, 2.0, trial % 2 == 0);
    for (double t : {0.0, 0.05, 0.3, 1.0, 2.5}) {
      double sum_k = 0.0;
      for (int k = 1; k <= n; ++k) {
        const double s = expected_cycles_spectral(w, k, t);
        CHECK(std::abs(s - exact_cycles_bruteforce(w, k, t)) < 1e-8);
        sum_k += k * s;
      }
      CHECK(sum_k == doctest::Approx(n));
    }
  }
}

TEST_CASE("simulator basics") {
  const auto k4 = complete_graph(4);
  const auto still = simulate_interchange(k4, 0.0, 5);
  CHECK(still.events == 0);
  CHECK(still.cycle_counts[1] == 4);
  CHECK(still.total_cycles() == 4);
  CHECK(still.square_weighted_cycles() == 4);
  CHECK(still.longest_cycle() == 1);

  const auto a = simulate_interchange(k4, 2.0, 9);
  const auto b = simulate_interchange(k4, 2.0, 9);
  CHECK(a.final_state == b.final_state);
  CHECK(a.events == b.events);

  // Two vertices: the swap count is Poisson(t), odd with probability (1 - e^{-2t}) / 2.
  const InterchangeSimulator edge(complete_graph(2));
  const double t = 0.4;
  const std::size_t samples = 40000;
  std::size_t swapped = 0, events = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto tr = edge.run(t, stream_seed(3, s));
    swapped += tr.final_state[0] == 1;
    events += tr.events;
    CHECK((tr.events % 2 == 1) == (tr.final_state[0] == 1));
  }
  const double p = 0.5 * (1 - std::exp(-2 * t));
  CHECK(std::abs(static_cast<double>(swapped) / samples - p) < 4 * std::sqrt(p * (1 - p) / samples));
  CHECK(std::abs(static_cast<double>(events) / samples - t) < 4 * std::sqrt(t / samples));
}

TEST_CASE("Monte Carlo within 4 standard errors") {
  for (const char* spec : {"complete:6", "hamming2:2"}) {
    const auto w = load_graph(spec);
    for (int k : {1, 2, 3}) {
      const auto mc = expected_cycles_mc(w, k, 0.2, 20000, 17);
      CHECK(mc.samples == 20000);
      CHECK(mc.std_error > 0.0);
      CHECK(std::abs(mc.estimate - expected_cycles_spectral(w, k, 0.2)) < 4 * mc.std_error);
    }
  }
  const auto a = expected_cycles_mc(complete_graph(5), 2, 0.3, 5000, 4);
  const auto b = expected_cycles_mc(complete_graph(5), 2, 0.3, 5000, 4);
  CHECK(a.estimate == b.estimate);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("large cycles appear on the complete graph") {
  const auto w = complete_graph(8);
  const auto early = large_cycle_probability(w, 0.0, 2000, 1);
  CHECK(early.estimate == 0.0);
  const auto late = large_cycle_probability(w, 2.0, 4000, 1);
  // Uniform limit: probability of a cycle longer than n/2 is sum_{k>n/2} 1/k.
  const double uniform = 1.0 / 5 + 1.0 / 6 + 1.0 / 7 + 1.0 / 8;
  CHECK(std::abs(late.estimate - uniform) < 4 * late.std_error + 0.02);
}
