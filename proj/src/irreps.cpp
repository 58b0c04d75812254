#include "interchange/irreps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "interchange/errors.hpp"
#include "interchange/lazy_chain.hpp"

namespace interchange {

namespace {

std::uint64_t encode(const std::vector<std::int8_t>& rows) {
  std::uint64_t key = 0;
  for (std::size_t m = 0; m < rows.size(); ++m) key |= static_cast<std::uint64_t>(rows[m]) << (4 * m);
  return key;
}

}  // namespace

YoungBasis::YoungBasis(const Partition& shape) : shape_(shape) {
  const int n = shape.size();
  if (n > kMaxIrrepN) throw CapError("irrep bases are capped at n <= 10; got n = " + std::to_string(n));

  // Place entries 0..n-1 one at a time; a box may start row r only while
  // row r stays shorter than row r-1.
  std::vector<int> row_length(static_cast<std::size_t>(shape.rows()), 0);
  std::vector<std::int8_t> current;
  auto place = [&](auto&& self, int entry) -> void {
    if (entry == n) {
      rows_.push_back(current);
      return;
    }
    for (int r = 0; r < shape.rows(); ++r) {
      const auto ur = static_cast<std::size_t>(r);
      if (row_length[ur] >= shape[r]) continue;
      if (r > 0 && row_length[ur] >= row_length[ur - 1]) continue;
      ++row_length[ur];
      current.push_back(static_cast<std::int8_t>(r));
      self(self, entry + 1);
      current.pop_back();
      --row_length[ur];
    }
  };
  place(place, 0);
  dim_ = static_cast<int>(rows_.size());
  if (static_cast<std::uint64_t>(dim_) != hook_dim(shape)) {
    throw ConsistencyError("tableau count disagrees with the hook length formula for " + shape.to_string());
  }

  std::unordered_map<std::uint64_t, int> index;
  index.reserve(rows_.size());
  for (int t = 0; t < dim_; ++t) index.emplace(encode(rows_[static_cast<std::size_t>(t)]), t);

  // Content of every entry of every tableau.
  std::vector<std::vector<int>> content(rows_.size(), std::vector<int>(static_cast<std::size_t>(n)));
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    std::vector<int> filled(static_cast<std::size_t>(shape.rows()), 0);
    for (int m = 0; m < n; ++m) {
      const int r = rows_[t][static_cast<std::size_t>(m)];
      content[t][static_cast<std::size_t>(m)] = filled[static_cast<std::size_t>(r)]++ - r;
    }
  }

  adjacent_.resize(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int k = 0; k + 1 < n; ++k) {
    auto& a = adjacent_[static_cast<std::size_t>(k)];
    a.diag.resize(rows_.size());
    a.partner.assign(rows_.size(), -1);
    a.off.assign(rows_.size(), 0.0);
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      const int axial = content[t][static_cast<std::size_t>(k + 1)] - content[t][static_cast<std::size_t>(k)];
      a.diag[t] = 1.0 / axial;
      if (axial == 1 || axial == -1) continue;
      auto swapped = rows_[t];
      std::swap(swapped[static_cast<std::size_t>(k)], swapped[static_cast<std::size_t>(k + 1)]);
      a.partner[t] = index.at(encode(swapped));
      a.off[t] = std::sqrt(1.0 - 1.0 / (static_cast<double>(axial) * axial));
    }
  }
}

Eigen::MatrixXd YoungBasis::adjacent_matrix(int k) const {
  if (k < 0 || k + 1 >= n()) throw ParameterError("adjacent transposition index out of range");
  const auto& a = adjacent_[static_cast<std::size_t>(k)];
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int t = 0; t < dim_; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    m(t, t) = a.diag[ut];
    if (a.partner[ut] >= 0) m(a.partner[ut], t) = a.off[ut];
  }
  return m;
}

void YoungBasis::left_multiply_adjacent(int k, Eigen::MatrixXd& m) const {
  const auto& a = adjacent_[static_cast<std::size_t>(k)];
  const Eigen::MatrixXd src = m;
  for (int t = 0; t < dim_; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    m.row(t) = a.diag[ut] * src.row(t);
    if (a.partner[ut] >= 0) m.row(t) += a.off[ut] * src.row(a.partner[ut]);
  }
}

void YoungBasis::right_multiply_adjacent(int k, Eigen::MatrixXd& m) const {
  const auto& a = adjacent_[static_cast<std::size_t>(k)];
  const Eigen::MatrixXd src = m;
  for (int t = 0; t < dim_; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    m.col(t) = a.diag[ut] * src.col(t);
    if (a.partner[ut] >= 0) m.col(t) += a.off[ut] * src.col(a.partner[ut]);
  }
}

Eigen::MatrixXd YoungBasis::transposition_matrix(int i, int j) const {
  if (i == j) throw ParameterError("transposition needs i != j");
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n()) throw ParameterError("transposition index out of range");
  // (i j) = s_{j-1} (i j-1) s_{j-1}
  Eigen::MatrixXd m = adjacent_matrix(i);
  for (int l = i + 2; l <= j; ++l) {
    left_multiply_adjacent(l - 1, m);
    right_multiply_adjacent(l - 1, m);
  }
  return m;
}

Eigen::MatrixXd YoungBasis::represent(const Permutation& p) const {
  if (p.size() != n()) throw SizeMismatchError("permutation size does not match the irrep");
  const auto word = adjacent_word(p);
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(dim_, dim_);
  for (auto it = word.rbegin(); it != word.rend(); ++it) left_multiply_adjacent(*it, m);
  return m;
}

Eigen::MatrixXd YoungBasis::transposition_sum(const Eigen::MatrixXd& c) const {
  if (c.rows() != n() || c.cols() != n()) throw SizeMismatchError("coefficient matrix must be n x n");
  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i + 1 < n(); ++i) {
    int last = -1;
    for (int j = i + 1; j < n(); ++j)
      if (c(i, j) != 0.0) last = j;
    if (last < 0) continue;
    Eigen::MatrixXd m = adjacent_matrix(i);
    for (int j = i + 1; j <= last; ++j) {
      if (j > i + 1) {
        left_multiply_adjacent(j - 1, m);
        right_multiply_adjacent(j - 1, m);
      }
      if (c(i, j) != 0.0) sum += c(i, j) * m;
    }
  }
  return sum;
}

Eigen::MatrixXd YoungBasis::laplacian(const WeightFunction& w) const {
  if (w.size() != n()) throw SizeMismatchError("weight function size does not match the irrep");
  Eigen::MatrixXd m = -transposition_sum(w.dense());
  m.diagonal().array() += w.edge_sum();
  return 0.5 * (m + m.transpose());
}

const YoungBasis& young_basis(const Partition& shape) {
  static std::mutex mutex;
  static std::map<Partition, std::unique_ptr<YoungBasis>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(shape);
  if (it == cache.end()) it = cache.emplace(shape, std::make_unique<YoungBasis>(shape)).first;
  return *it->second;
}

Eigen::MatrixXd transposition_matrix(const Partition& shape, int i, int j) {
  return young_basis(shape).transposition_matrix(i, j);
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0) return {};
  const Eigen::MatrixXd sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConsistencyError("symmetric eigensolver failed");
  const Eigen::VectorXd& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

IrrepSpectrum delta_on_irrep(const WeightFunction& w, const Partition& shape) {
  if (shape.size() != w.size()) throw SizeMismatchError("partition and weight function sizes differ");
  const YoungBasis& basis = young_basis(shape);
  IrrepSpectrum s{shape, static_cast<std::uint64_t>(basis.dim()), symmetric_eigenvalues(basis.laplacian(w)),
                  lambda_kn(shape)};
  return s;
}

std::vector<IrrepSpectrum> all_irrep_spectra(const WeightFunction& w) {
  if (w.size() > kMaxIrrepN) throw CapError("irrep spectra are capped at n <= 10");
  std::vector<IrrepSpectrum> out;
  for (const auto& p : partitions(w.size())) out.push_back(delta_on_irrep(w, p));
  return out;
}

std::vector<double> assembled_spectrum(const std::vector<IrrepSpectrum>& spectra) {
  std::vector<double> all;
  for (const auto& s : spectra)
    for (std::uint64_t copy = 0; copy < s.dim; ++copy) all.insert(all.end(), s.eigenvalues.begin(), s.eigenvalues.end());
  std::sort(all.begin(), all.end());
  return all;
}

ScalarityCheck complete_graph_scalarity(const Partition& shape) {
  const WeightFunction kn = complete_graph(shape.size());
  const Eigen::MatrixXd m = young_basis(shape).laplacian(kn);
  ScalarityCheck c;
  c.expected = lambda_kn(shape);
  c.diagonal_min = m.diagonal().minCoeff();
  c.diagonal_max = m.diagonal().maxCoeff();
  Eigen::MatrixXd off = m;
  off.diagonal().setZero();
  c.max_off_diagonal = off.cwiseAbs().maxCoeff();
  return c;
}

AldousReport aldous_check(const std::vector<IrrepSpectrum>& spectra, double tolerance) {
  AldousReport r;
  const IrrepSpectrum* standard = nullptr;
  for (const auto& s : spectra)
    if (s.partition.is_standard()) standard = &s;
  if (standard == nullptr) throw ParameterError("spectra do not include [n-1,1]");
  r.spectral_gap = standard->lambda_1();
  r.margin = std::numeric_limits<double>::infinity();
  for (const auto& s : spectra) {
    if (s.partition.is_trivial() || s.partition.is_standard()) continue;
    const double m = s.lambda_1() - r.spectral_gap;
    if (m < r.margin) {
      r.margin = m;
      r.worst = s.partition;
    }
  }
  r.holds = r.margin >= -tolerance;
  return r;
}

AldousReport aldous_check(const WeightFunction& w, double tolerance) {
  return aldous_check(all_irrep_spectra(w), tolerance);
}

ComparisonReport comparison_constant(const WeightFunction& w) {
  const auto spectra = all_irrep_spectra(w);
  ComparisonReport r;
  r.a_star = std::numeric_limits<double>::infinity();
  for (const auto& s : spectra) {
    r.table.push_back({s.partition, s.dim, s.lambda_kn, s.lambda_1()});
    if (s.partition.is_trivial()) continue;
    const double ratio = s.lambda_1() / s.lambda_kn;
    if (ratio < r.a_star) {
      r.a_star = ratio;
      r.argmin = s.partition;
    }
  }
  const AldousReport aldous = aldous_check(spectra);
  r.aldous_gap = aldous.spectral_gap;
  r.aldous_holds = aldous.holds;
  if (is_connected(w)) {
    r.comparison_bound = comparison_bound(w);
    r.empirical_c = r.a_star / *r.comparison_bound;
  }
  return r;
}

}  // namespace interchange
