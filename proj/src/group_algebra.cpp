#include "interchange/group_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "interchange/errors.hpp"
#include "interchange/irreps.hpp"

namespace interchange {

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
  if (n < 1) throw ParameterError("group algebra needs n >= 1");
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) { return basis(Permutation::identity(n)); }

GroupAlgebraElement GroupAlgebraElement::basis(const Permutation& p, double coefficient) {
  GroupAlgebraElement a(p.size());
  a.add(p, coefficient);
  return a;
}

double GroupAlgebraElement::coefficient(const Permutation& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

void GroupAlgebraElement::add(const Permutation& p, double coefficient) {
  if (p.size() != n_) throw SizeMismatchError("permutation size does not match the group algebra");
  if (coefficient == 0.0) return;
  auto [it, inserted] = terms_.emplace(p, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0.0) terms_.erase(it);
  }
}

bool GroupAlgebraElement::is_self_adjoint(double tol) const {
  for (const auto& [p, c] : terms_)
    if (std::abs(c - coefficient(invert(p))) > tol) return false;
  return true;
}

bool GroupAlgebraElement::supported_on_transpositions() const {
  for (const auto& [p, c] : terms_) {
    int moved = 0;
    for (int x = 0; x < n_; ++x)
      if (p[x] != x) ++moved;
    if (moved != 0 && moved != 2) return false;
  }
  return true;
}

double GroupAlgebraElement::max_abs_coefficient() const {
  double m = 0.0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw SizeMismatchError("cannot add elements of different group algebras");
  for (const auto& [p, c] : other.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw SizeMismatchError("cannot subtract elements of different group algebras");
  for (const auto& [p, c] : other.terms_) add(p, -c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.size() != b.size()) throw SizeMismatchError("cannot multiply elements of different group algebras");
  GroupAlgebraElement out(a.size());
  for (const auto& [sigma, ca] : a.terms())
    for (const auto& [rho, cb] : b.terms()) out.add(compose(rho, sigma), ca * cb);
  return out;
}

GroupAlgebraElement nabla(int n, int i, int j) {
  if (i == j) throw ParameterError("nabla_ij needs i != j; use nabla_diagonal for the zero convention");
  GroupAlgebraElement a = GroupAlgebraElement::identity(n);
  a.add(Permutation::transposition(n, i, j), -1.0);
  return a;
}

GroupAlgebraElement nabla_diagonal(int n) { return GroupAlgebraElement(n); }

GroupAlgebraElement delta_of_weights(const WeightFunction& w) {
  GroupAlgebraElement a(w.size());
  for (const auto& [pair, value] : w.entries()) a += value * nabla(w.size(), pair.first, pair.second);
  return a;
}

GroupAlgebraElement delta_of_weights(const LiftedWeight& u) {
  const int n = u.size();
  GroupAlgebraElement a(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(i, j) != 0.0) a += u(i, j) * nabla(n, i, j);
  return a;
}

GroupAlgebraElement delta_complete(int n) { return delta_of_weights(complete_graph(n)); }

Eigen::MatrixXd regular_rep_matrix(const GroupAlgebraElement& a) {
  const int n = a.size();
  if (n > kMaxRegularN) {
    throw CapError("regular representation is capped at n <= 7 (n! = 5040); use the per-irrep route");
  }
  const auto perms = all_permutations(n);
  const auto order = static_cast<Eigen::Index>(perms.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(order, order);
  for (Eigen::Index row = 0; row < order; ++row) {
    const Permutation& tau = perms[static_cast<std::size_t>(row)];
    for (const auto& [sigma, c] : a.terms()) {
      m(row, static_cast<Eigen::Index>(lex_rank(compose(sigma, tau)))) += c;
    }
  }
  return m;
}

namespace {

void require_self_adjoint(const GroupAlgebraElement& a) {
  const double tol = 1e-12 * std::max(1.0, a.max_abs_coefficient());
  if (!a.is_self_adjoint(tol)) throw ParameterError("element is not self-adjoint");
}

Eigen::MatrixXd irrep_block(const GroupAlgebraElement& a, const YoungBasis& basis) {
  const int n = a.size();
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(basis.dim(), basis.dim());
  if (a.supported_on_transpositions()) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    double identity = 0.0;
    for (const auto& [p, coefficient] : a.terms()) {
      if (p.is_identity()) {
        identity += coefficient;
        continue;
      }
      int i = -1, j = -1;
      for (int x = 0; x < n; ++x) {
        if (p[x] == x) continue;
        (i < 0 ? i : j) = x;
      }
      c(i, j) += coefficient;
      c(j, i) += coefficient;
    }
    block = basis.transposition_sum(c);
    block.diagonal().array() += identity;
  } else {
    for (const auto& [p, coefficient] : a.terms()) block += coefficient * basis.represent(p);
  }
  return 0.5 * (block + block.transpose());
}

}  // namespace

std::vector<double> regular_spectrum(const GroupAlgebraElement& a) {
  require_self_adjoint(a);
  return symmetric_eigenvalues(regular_rep_matrix(a));
}

std::vector<double> irrep_assembled_spectrum(const GroupAlgebraElement& a) {
  require_self_adjoint(a);
  if (a.size() > kMaxIrrepN) throw CapError("irrep route is capped at n <= 10");
  std::vector<double> all;
  for (const auto& shape : partitions(a.size())) {
    const YoungBasis& basis = young_basis(shape);
    const auto ev = symmetric_eigenvalues(irrep_block(a, basis));
    for (int copy = 0; copy < basis.dim(); ++copy) all.insert(all.end(), ev.begin(), ev.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

PsdVerdict is_psd(const GroupAlgebraElement& a, PsdRoute route, double tol) {
  require_self_adjoint(a);
  if (route == PsdRoute::automatic) route = a.size() <= kMaxExactN ? PsdRoute::regular : PsdRoute::irreps;
  PsdVerdict v;
  v.scale = a.max_abs_coefficient();
  if (route == PsdRoute::regular) {
    v.min_eigenvalue = regular_spectrum(a).front();
  } else {
    if (a.size() > kMaxIrrepN) throw CapError("irrep route is capped at n <= 10");
    v.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (const auto& shape : partitions(a.size())) {
      const auto ev = symmetric_eigenvalues(irrep_block(a, young_basis(shape)));
      v.min_eigenvalue = std::min(v.min_eigenvalue, ev.front());
    }
  }
  v.psd = v.min_eigenvalue >= -tol * v.scale;
  return v;
}

GroupAlgebraElement octopus_gap(int n, int hub, const std::vector<double>& arm_weights) {
  if (n < 2) throw ParameterError("octopus needs n >= 2");
  if (hub < 0 || hub >= n) throw ParameterError("hub out of range");
  if (static_cast<int>(arm_weights.size()) != n - 1) throw ParameterError("octopus needs exactly n - 1 arm weights");
  double total = 0.0;
  for (double x : arm_weights) {
    if (!std::isfinite(x) || x < 0.0) throw ParameterError("arm weights must be finite and nonnegative");
    total += x;
  }
  if (total <= 0.0) throw DegenerateWeightError("all arm weights are zero");
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v)
    if (v != hub) leaves.push_back(v);
  GroupAlgebraElement gap(n);
  for (std::size_t a = 0; a < leaves.size(); ++a) {
    if (arm_weights[a] != 0.0) gap += arm_weights[a] * nabla(n, hub, leaves[a]);
    for (std::size_t b = a + 1; b < leaves.size(); ++b) {
      const double induced = arm_weights[a] * arm_weights[b] / total;
      if (induced != 0.0) gap -= induced * nabla(n, leaves[a], leaves[b]);
    }
  }
  return gap;
}

PsdVerdict octopus_check(int n, int hub, const std::vector<double>& arm_weights, PsdRoute route) {
  return is_psd(octopus_gap(n, hub, arm_weights), route);
}

GroupAlgebraElement doubling_gap(const LiftedWeight& u, double* epsilon) {
  const double eps = u.holding_ratio();  // throws on a zero row
  if (epsilon != nullptr) *epsilon = eps;
  const LiftedWeight doubled = double_weight(u);
  return (2.0 + 2.0 * eps) * delta_of_weights(u) - delta_of_weights(doubled);
}

DoublingVerdict doubling_inequality_check(const LiftedWeight& u, PsdRoute route) {
  DoublingVerdict d;
  const GroupAlgebraElement gap = doubling_gap(u, &d.epsilon);
  d.verdict = is_psd(gap, route);
  return d;
}

InterchangeExact::InterchangeExact(const WeightFunction& w) : n_(w.size()), connected_(is_connected(w)) {
  if (n_ > kMaxExactN) throw CapError("exact interchange distribution is capped at n <= 5");
  perms_ = all_permutations(n_);
  identity_index_ = lex_rank(Permutation::identity(n_));
  const Eigen::MatrixXd generator = regular_rep_matrix(delta_of_weights(w));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(0.5 * (generator + generator.transpose()));
  if (solver.info() != Eigen::Success) throw ConsistencyError("eigendecomposition of the generator failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

Eigen::VectorXd InterchangeExact::distribution(double t) const {
  if (!(t >= 0.0)) throw ParameterError("time must be nonnegative");
  if (t == 0.0) return Eigen::VectorXd::Unit(static_cast<Eigen::Index>(perms_.size()), static_cast<Eigen::Index>(identity_index_));
  const Eigen::VectorXd decay = (-t * eigenvalues_.array()).exp().matrix();
  const auto id = static_cast<Eigen::Index>(identity_index_);
  const Eigen::VectorXd weights = eigenvectors_.row(id).transpose().cwiseProduct(decay);
  return eigenvectors_ * weights;
}

double InterchangeExact::tv_to_uniform(double t) const {
  const double uniform = 1.0 / static_cast<double>(perms_.size());
  return 0.5 * (distribution(t).array() - uniform).abs().sum();
}

double InterchangeExact::tv_mix(double tol) const {
  if (!connected_) throw DisconnectedError("interchange mixing time is infinite for disconnected weights");
  if (!(tol > 0.0)) throw ParameterError("bisection tolerance must be positive");
  double lo = 0.0;
  double hi = 1e-3;
  while (!(tv_to_uniform(hi) < 0.25)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e12) throw ConsistencyError("interchange mixing time did not converge");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (tv_to_uniform(mid) < 0.25) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

}  // namespace interchange
