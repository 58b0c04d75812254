#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "interchange/lazy_chain.hpp"
#include "interchange/permutation.hpp"
#include "interchange/weight_function.hpp"

namespace interchange {

// Finite real combination sum_sigma c_sigma sigma of elements of S_n, acting
// on L^2(S_n) by (A f)(tau) = sum_sigma c_sigma f(sigma tau).
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n);

  static GroupAlgebraElement identity(int n);
  static GroupAlgebraElement basis(const Permutation& p, double coefficient = 1.0);

  int size() const { return n_; }
  const std::map<Permutation, double>& terms() const { return terms_; }
  double coefficient(const Permutation& p) const;
  void add(const Permutation& p, double coefficient);

  // Coefficient of sigma equals coefficient of sigma^{-1}, within `tol`.
  bool is_self_adjoint(double tol = 0.0) const;
  // Every term is the identity or a transposition.
  bool supported_on_transpositions() const;
  double max_abs_coefficient() const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator*=(double s);

  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(double s, GroupAlgebraElement a) { return a *= s; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, double s) { return a *= s; }

 private:
  int n_;
  std::map<Permutation, double> terms_;
};

// Product whose operator is A composed with B: (a * b) f = A (B f).
// In group terms this is sum a_sigma b_rho (rho o sigma).
GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// nabla_ij = 1 - (ij); i == j is rejected (see nabla_diagonal).
GroupAlgebraElement nabla(int n, int i, int j);
// The doubling argument's convention nabla_ii = 0.
GroupAlgebraElement nabla_diagonal(int n);

// Delta_w = sum_{i<j} w_ij nabla_ij
GroupAlgebraElement delta_of_weights(const WeightFunction& w);
// Same for a lifted weight; diagonal entries do not contribute.
GroupAlgebraElement delta_of_weights(const LiftedWeight& u);
GroupAlgebraElement delta_complete(int n);

inline constexpr int kMaxRegularN = 7;
inline constexpr int kMaxExactN = 5;

// n! x n! matrix of the convolution operator in the delta basis, rows and
// columns in lexicographic permutation order. Capped at n <= 7.
Eigen::MatrixXd regular_rep_matrix(const GroupAlgebraElement& a);

// Eigenvalues of a self-adjoint element on L^2(S_n), ascending, via the
// n! x n! matrix.
std::vector<double> regular_spectrum(const GroupAlgebraElement& a);
// Same multiset, assembled from irreducible blocks (n <= 10).
std::vector<double> irrep_assembled_spectrum(const GroupAlgebraElement& a);

enum class PsdRoute { automatic, regular, irreps };

inline constexpr double kPsdTolerance = 1e-9;

struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double scale = 0.0;  // max-abs entry of the operator matrix
};

// PSD iff min eigenvalue >= -tol * scale. The automatic route uses the
// regular representation up to n = 5 and irreducible blocks above that.
PsdVerdict is_psd(const GroupAlgebraElement& a, PsdRoute route = PsdRoute::automatic, double tol = kPsdTolerance);

// The star operator minus its induced complete graph on the leaves:
//   sum_i w_i nabla_{hub,i} - sum_{i<j} (w_i w_j / sum w) nabla_ij
// arm_weights lists w_i for the non-hub vertices in increasing order.
GroupAlgebraElement octopus_gap(int n, int hub, const std::vector<double>& arm_weights);
PsdVerdict octopus_check(int n, int hub, const std::vector<double>& arm_weights,
                         PsdRoute route = PsdRoute::automatic);

struct DoublingVerdict {
  PsdVerdict verdict;
  double epsilon = 0.0;  // max_i u_ii / u_i
};

// (2 + 2 eps) Delta_u - Delta_{u^(2)}
GroupAlgebraElement doubling_gap(const LiftedWeight& u, double* epsilon = nullptr);
DoublingVerdict doubling_inequality_check(const LiftedWeight& u, PsdRoute route = PsdRoute::automatic);

// Continuous-time interchange process started at the identity, through a
// symmetric eigendecomposition of the n! x n! generator (n <= 5).
class InterchangeExact {
 public:
  explicit InterchangeExact(const WeightFunction& w);

  int size() const { return n_; }
  const std::vector<Permutation>& permutations() const { return perms_; }
  // Probability of each permutation (lexicographic order) at time t.
  Eigen::VectorXd distribution(double t) const;
  double tv_to_uniform(double t) const;
  // Smallest t with TV < 1/4, bracketed by doubling and bisected to `tol`;
  // returns the upper end of the final bracket. Throws if w is disconnected.
  double tv_mix(double tol = 1e-6) const;

 private:
  int n_;
  bool connected_;
  std::vector<Permutation> perms_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
  std::size_t identity_index_ = 0;
};

inline Eigen::VectorXd interchange_exact(const WeightFunction& w, double t) {
  return InterchangeExact(w).distribution(t);
}
inline double interchange_tv_mix_exact(const WeightFunction& w, double tol = 1e-6) {
  return InterchangeExact(w).tv_mix(tol);
}

}  // namespace interchange
