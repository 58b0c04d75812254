#include <cmath>
#include <random>

#include "doctest.h"
#include "interchange/errors.hpp"
#include "interchange/irreps.hpp"
#include "test_helpers.hpp"

using namespace interchange;

namespace {

// Brute-force partition count by dynamic programming (independent of the
// recursive enumerator).
std::uint64_t partition_count(int n) {
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(n + 1), 0);
  ways[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) ways[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - part)];
  return ways[static_cast<std::size_t>(n)];
}

}  // namespace

TEST_CASE("partition enumeration") {
  const auto p3 = partitions(3);
  REQUIRE(p3.size() == 3);
  CHECK(p3[0].parts() == std::vector<int>{3});
  CHECK(p3[1].parts() == std::vector<int>{2, 1});
  CHECK(p3[2].parts() == std::vector<int>{1, 1, 1});
  for (int n = 1; n <= kMaxPartitionN; ++n) CHECK(partitions(n).size() == partition_count(n));
  CHECK(partitions(6).size() == 11);
  CHECK_THROWS_AS(partitions(0), CapError);
  CHECK_THROWS_AS(partitions(13), CapError);
}

TEST_CASE("partition notation") {
  const auto p = Partition::parse("[3,1^3]");
  CHECK(p.parts() == std::vector<int>{3, 1, 1, 1});
  CHECK(p.size() == 6);
  CHECK(p.to_string() == "[3,1^3]");
  CHECK(Partition::parse("2,2,1").to_string() == "[2^2,1]");
  CHECK_THROWS_AS(Partition({1, 2}), ParameterError);
  CHECK_THROWS_AS(Partition({2, 0}), ParameterError);
  CHECK_THROWS_AS(Partition::parse("[a]"), ParameterError);
}

TEST_CASE("hook dimensions") {
  CHECK(hook_dim(Partition({6})) == 1);
  CHECK(hook_dim(Partition({1, 1, 1, 1, 1, 1})) == 1);
  CHECK(hook_dim(Partition({3, 3})) == 5);
  CHECK(hook_dim(Partition({5, 1})) == 5);
  for (int n = 1; n <= 8; ++n) {
    std::uint64_t sum = 0;
    for (const auto& p : partitions(n)) sum += hook_dim(p) * hook_dim(p);
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("content sums and lambda(K_n, rho)") {
  for (int n = 2; n <= 10; ++n) {
    CHECK(lambda_kn(Partition({n})) == 0.0);
    CHECK(lambda_kn(Partition({n - 1, 1})) == n);
    CHECK(lambda_kn(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == n * (n - 1));
  }
  CHECK(content_sum(Partition({3, 3})) == 3);
}

TEST_CASE("transposition matrices satisfy the Coxeter relations") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& shape : partitions(n)) {
      const auto& b = young_basis(shape);
      const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(b.dim(), b.dim());
      for (int k = 0; k + 1 < n; ++k) {
        const auto s = b.adjacent_matrix(k);
        CHECK((s * s - id).cwiseAbs().maxCoeff() < 1e-12);
        CHECK((s - s.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        if (k + 2 < n) {
          const auto t = b.adjacent_matrix(k + 1);
          CHECK((s * t * s - t * s * t).cwiseAbs().maxCoeff() < 1e-12);
        }
        for (int l = k + 2; l + 1 < n; ++l) {
          const auto t = b.adjacent_matrix(l);
          CHECK((s * t - t * s).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          const auto m = b.transposition_matrix(i, j);
          CHECK((m * m - id).cwiseAbs().maxCoeff() < 1e-12);
          CHECK((m - m.transpose()).cwiseAbs().maxCoeff() < 1e-12);
          CHECK((m - b.represent(Permutation::transposition(n, i, j))).cwiseAbs().maxCoeff() < 1e-12);
        }
      }
    }
  }
  CHECK(transposition_matrix(Partition({4}), 0, 3)(0, 0) == 1.0);
  CHECK(transposition_matrix(Partition({1, 1, 1, 1}), 1, 3)(0, 0) == -1.0);
}

TEST_CASE("represent is a homomorphism with characters matching class functions") {
  const int n = 4;
  const auto perms = all_permutations(n);
  for (const auto& shape : partitions(n)) {
    const auto& b = young_basis(shape);
    for (std::size_t a = 0; a < perms.size(); a += 5) {
      for (std::size_t c = 0; c < perms.size(); c += 7) {
        const auto lhs = b.represent(compose(perms[a], perms[c]));
        const Eigen::MatrixXd rhs = b.represent(perms[a]) * b.represent(perms[c]);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
      }
    }
    // Characters are constant on conjugacy classes.
    std::map<std::vector<int>, double> character;
    for (const auto& p : perms) {
      const double trace = b.represent(p).trace();
      auto [it, fresh] = character.emplace(cycle_type(p), trace);
      if (!fresh) CHECK(it->second == doctest::Approx(trace));
    }
  }
}

TEST_CASE("Delta_{K_n} acts as the scalar lambda(K_n, rho)") {
  for (int n = 2; n <= 8; ++n) {
    for (const auto& shape : partitions(n)) {
      const auto c = complete_graph_scalarity(shape);
      CHECK(c.max_off_diagonal <= 1e-9 * std::max(1.0, c.expected));
      CHECK(c.diagonal_min == doctest::Approx(c.expected).epsilon(1e-9));
      CHECK(c.diagonal_max == doctest::Approx(c.expected).epsilon(1e-9));
    }
  }
}

TEST_CASE("path(3) irrep spectra") {
  const auto w = load_graph("path:3");
  const auto std_rep = delta_on_irrep(w, Partition({2, 1}));
  REQUIRE(std_rep.eigenvalues.size() == 2);
  CHECK(std_rep.eigenvalues[0] == doctest::Approx(1.0));
  CHECK(std_rep.eigenvalues[1] == doctest::Approx(3.0));
  CHECK(delta_on_irrep(w, Partition({1, 1, 1})).lambda_1() == doctest::Approx(4.0));
  CHECK(std::abs(delta_on_irrep(w, Partition({3})).lambda_1()) < 1e-15);
  const auto cmp = comparison_constant(w);
  CHECK(cmp.a_star == doctest::Approx(1.0 / 3).epsilon(1e-9));
  CHECK(cmp.argmin == Partition({2, 1}));
  CHECK(cmp.aldous_gap == doctest::Approx(1.0));
  const auto al = aldous_check(w);
  CHECK(al.holds);
  CHECK(al.margin == doctest::Approx(3.0));
}

TEST_CASE("standard irrep carries the vertex Laplacian spectrum") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 5;
    const auto w = testing::random_weights(n, rng);
    Eigen::MatrixXd lap = -w.dense();
    for (int i = 0; i < n; ++i) lap(i, i) = w.vertex_weight(i);
    auto vertex = symmetric_eigenvalues(lap);
    vertex.erase(vertex.begin());  // constants
    const auto irrep = delta_on_irrep(w, Partition({n - 1, 1})).eigenvalues;
    REQUIRE(irrep.size() == vertex.size());
    for (std::size_t i = 0; i < vertex.size(); ++i) CHECK(irrep[i] == doctest::Approx(vertex[i]).epsilon(1e-10));
  }
}

TEST_CASE("comparison constant and Aldous on complete graphs") {
  for (int n = 2; n <= 8; ++n) {
    const auto r = comparison_constant(complete_graph(n));
    CHECK(std::abs(r.a_star - 1.0) <= 1e-12);
    CHECK(r.aldous_gap == doctest::Approx(n));
    CHECK(r.empirical_c.value() > 0.0);
    for (const auto& row : r.table) {
      if (row.partition.is_trivial()) continue;
      CHECK(row.lambda_1 >= n - 1e-9);
    }
  }
}

TEST_CASE("comparison constant is positive iff connected") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto w = testing::random_weights(5, rng, 0.6, 0.1, 2.0, false);
    if (w.entries().empty()) continue;
    const auto r = comparison_constant(w);
    CHECK((r.a_star > 1e-10) == is_connected(w));
    CHECK(r.comparison_bound.has_value() == is_connected(w));
  }
}

TEST_CASE("Aldous inequality on random weights") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 24; ++trial) {
    const auto w = testing::random_weights(4 + trial % 4, rng, 0.3, 0.05, 3.0);
    const auto r = aldous_check(w);
    CHECK(r.holds);
    CHECK(r.margin >= -1e-9);
  }
}

TEST_CASE("irrep caps") {
  CHECK_THROWS_AS(YoungBasis(Partition({11})), CapError);
  CHECK_THROWS_AS(all_irrep_spectra(complete_graph(11)), CapError);
}
