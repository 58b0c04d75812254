#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "interchange/partition.hpp"
#include "interchange/permutation.hpp"
#include "interchange/weight_function.hpp"

namespace interchange {

inline constexpr int kMaxIrrepN = 10;

// Young's orthogonal form of the irrep indexed by a partition. The basis is
// the standard Young tableaux; the adjacent transposition s_k = (k k+1) acts
// on tableau T by
//   s_k e_T = (1/r) e_T + sqrt(1 - 1/r^2) e_{s_k T},   r = c(k+1) - c(k),
// where c(m) is the content of the box holding m. Each s_k therefore has at
// most two nonzeros per column, and general transpositions are obtained by
// conjugating with adjacent ones.
class YoungBasis {
 public:
  explicit YoungBasis(const Partition& shape);

  const Partition& shape() const { return shape_; }
  int dim() const { return dim_; }
  int n() const { return shape_.size(); }

  // Row of each entry 0..n-1 in tableau t.
  const std::vector<std::int8_t>& tableau_rows(int t) const { return rows_[static_cast<std::size_t>(t)]; }

  Eigen::MatrixXd adjacent_matrix(int k) const;
  Eigen::MatrixXd transposition_matrix(int i, int j) const;
  Eigen::MatrixXd represent(const Permutation& p) const;

  // sum_{i<j} c_ij M_(ij) for a symmetric coefficient matrix (diagonal ignored).
  Eigen::MatrixXd transposition_sum(const Eigen::MatrixXd& coefficients) const;
  // Delta_w restricted to the irrep: sum_{i<j} w_ij (I - M_(ij)).
  Eigen::MatrixXd laplacian(const WeightFunction& w) const;

  // In-place m <- S_k m and m <- m S_k.
  void left_multiply_adjacent(int k, Eigen::MatrixXd& m) const;
  void right_multiply_adjacent(int k, Eigen::MatrixXd& m) const;

 private:
  struct AdjacentAction {
    std::vector<double> diag;
    std::vector<int> partner;  // -1 when s_k T is not standard
    std::vector<double> off;
  };

  Partition shape_;
  int dim_ = 0;
  std::vector<std::vector<std::int8_t>> rows_;
  std::vector<AdjacentAction> adjacent_;
};

// Shared, lazily built bases (read-only after construction, thread-safe).
const YoungBasis& young_basis(const Partition& shape);

Eigen::MatrixXd transposition_matrix(const Partition& shape, int i, int j);

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m);

struct IrrepSpectrum {
  Partition partition;
  std::uint64_t dim = 0;
  std::vector<double> eigenvalues;  // ascending; lambda_1 first
  double lambda_kn = 0.0;

  double lambda_1() const { return eigenvalues.front(); }
};

IrrepSpectrum delta_on_irrep(const WeightFunction& w, const Partition& shape);
std::vector<IrrepSpectrum> all_irrep_spectra(const WeightFunction& w);

// Every eigenvalue of Delta_w on L^2(S_n), each irrep's block repeated dim
// times; sorted ascending.
std::vector<double> assembled_spectrum(const std::vector<IrrepSpectrum>& spectra);

struct ScalarityCheck {
  double max_off_diagonal = 0.0;
  double diagonal_min = 0.0;
  double diagonal_max = 0.0;
  double expected = 0.0;  // C(n,2) - content_sum
};

// Restricts Delta_{K_n} to the irrep and measures how far it is from the
// scalar lambda_kn.
ScalarityCheck complete_graph_scalarity(const Partition& shape);

struct AldousReport {
  bool holds = true;
  std::optional<Partition> worst;  // absent when n = 2 (nothing to compare)
  double margin = 0.0;             // min_{rho != [n],[n-1,1]} lambda_1(rho) - lambda_1([n-1,1])
  double spectral_gap = 0.0;       // lambda_1(w, [n-1,1])
};

AldousReport aldous_check(const WeightFunction& w, double tolerance = 1e-9);
AldousReport aldous_check(const std::vector<IrrepSpectrum>& spectra, double tolerance = 1e-9);

struct ComparisonRow {
  Partition partition;
  std::uint64_t dim = 0;
  double lambda_kn = 0.0;
  double lambda_1 = 0.0;
};

struct ComparisonReport {
  double a_star = 0.0;  // largest a with Delta_w >= a Delta_{K_n}
  Partition argmin{std::vector<int>{1}};
  double aldous_gap = 0.0;
  bool aldous_holds = true;
  std::optional<double> comparison_bound;  // b(w); absent when disconnected
  std::optional<double> empirical_c;    // a_star / b(w)
  std::vector<ComparisonRow> table;
};

ComparisonReport comparison_constant(const WeightFunction& w);

}  // namespace interchange
