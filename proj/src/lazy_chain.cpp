#include "interchange/lazy_chain.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "interchange/errors.hpp"

namespace interchange {

namespace {

constexpr int kMaxDyadic = 62;

int floor_log2(std::int64_t t) { return 63 - std::countl_zero(static_cast<std::uint64_t>(t)); }

}  // namespace

LazyChain::LazyChain(const WeightFunction& w, double tie_guard) : tie_guard_(tie_guard) {
  if (!(tie_guard > 0.0)) throw ParameterError("tie guard must be positive");
  const int n = w.size();
  for (int i = 0; i < n; ++i) {
    if (w.vertex_weight(i) <= 0.0) {
      throw DegenerateWeightError("vertex " + std::to_string(i) + " has zero total weight");
    }
  }
  transition_ = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) transition_(i, i) = 0.5;
  for (const auto& [pair, value] : w.entries()) {
    transition_(pair.first, pair.second) = value / (2.0 * w.vertex_weight(pair.first));
    transition_(pair.second, pair.first) = value / (2.0 * w.vertex_weight(pair.second));
  }
  stationary_.resize(n);
  const double total = w.total();
  for (int j = 0; j < n; ++j) stationary_(j) = w.vertex_weight(j) / total;
  connected_ = is_connected(w);
  dyadic_.push_back(transition_);
  if (connected_) {
    compute_lmix();
    compute_tv_mix();
  }
}

Eigen::MatrixXd LazyChain::dyadic_power(int k) const {
  if (k < 0) throw ParameterError("dyadic index must be nonnegative");
  if (k < cached_dyadic_count()) return dyadic_[static_cast<std::size_t>(k)];
  Eigen::MatrixXd p = dyadic_.back();
  for (int j = cached_dyadic_count(); j <= k; ++j) p = p * p;
  return p;
}

Eigen::MatrixXd LazyChain::power(std::int64_t t) const {
  if (t < 0) throw ParameterError("step count must be nonnegative");
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(size(), size());
  Eigen::MatrixXd square;
  for (int k = 0; t != 0; ++k, t >>= 1) {
    if (k < cached_dyadic_count()) {
      square = dyadic_[static_cast<std::size_t>(k)];
    } else {
      square = square * square;
    }
    if (t & 1) result = result * square;
  }
  return result;
}

double LazyChain::min_ratio(const Eigen::MatrixXd& p) const {
  double r = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) r = std::min(r, p(i, j) / stationary_(j));
  return r;
}

double LazyChain::tv_distance(const Eigen::MatrixXd& p) const {
  double worst = 0.0;
  for (int i = 0; i < size(); ++i) {
    worst = std::max(worst, 0.5 * (p.row(i).transpose() - stationary_).cwiseAbs().sum());
  }
  return worst;
}

bool LazyChain::lower_bound_holds(const Eigen::MatrixXd& p) const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (!(p(i, j) - 0.75 * stationary_(j) > tie_guard_)) return false;
  return true;
}

bool LazyChain::tv_below_quarter(const Eigen::MatrixXd& p) const { return tv_distance(p) < 0.25 - tie_guard_; }

void LazyChain::compute_lmix() {
  // Bracket with dyadic times, then binary search inside (2^(k-1), 2^k].
  int k = 0;
  while (!lower_bound_holds(dyadic_.back())) {
    if (k >= kMaxDyadic) throw ConsistencyError("lmix exceeds 2^62 steps");
    dyadic_.push_back(dyadic_.back() * dyadic_.back());
    ++k;
  }
  if (k == 0) {
    lmix_ = 1;
    return;
  }
  std::int64_t lo = std::int64_t{1} << (k - 1);  // fails
  std::int64_t hi = std::int64_t{1} << k;        // holds
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (lower_bound_holds(power(mid))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  lmix_ = hi;
}

void LazyChain::compute_tv_mix() {
  std::int64_t hi = *lmix_;
  while (!tv_below_quarter(power(hi))) {
    if (hi > (std::int64_t{1} << kMaxDyadic)) throw ConsistencyError("TV mixing time did not converge");
    hi *= 2;
  }
  std::int64_t lo = 0;  // p_0 = I has TV distance 1 - pi(i) >= 1/2
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (tv_below_quarter(power(mid))) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  tv_mix_ = hi;
}

DeltaFactor delta_factor(const LazyChain& chain) {
  if (!chain.lmix()) throw DisconnectedError("delta is undefined for disconnected weights (lmix = inf)");
  const int last = floor_log2(*chain.lmix());
  DeltaFactor out;
  double inverse = 1.0;
  for (int k = 0; k <= last; ++k) {
    const double eps = chain.dyadic_power(k).diagonal().maxCoeff();
    out.epsilon.push_back(eps);
    inverse *= 1.0 + eps;
  }
  out.delta = 1.0 / inverse;
  return out;
}

ClauseDiagnostics delta_clause_diagnostics(const WeightFunction& w, const LazyChain& chain) {
  if (!chain.lmix()) throw DisconnectedError("clause diagnostics need a finite lmix");
  const DegreeStats s = degree_stats(w);
  ClauseDiagnostics d;
  const double r = s.min_positive_weight / s.max_vertex_weight;
  d.min_weight_ratio_sq = r * r;
  d.regular = s.regular;
  d.inverse_two_lmix = 1.0 / (2.0 * static_cast<double>(*chain.lmix()));
  return d;
}

double comparison_bound(const WeightFunction& w, const LazyChain& chain) {
  if (!chain.lmix()) throw DisconnectedError("comparison bound needs a finite lmix");
  const DegreeStats s = degree_stats(w);
  const double delta = delta_factor(chain).delta;
  return delta / static_cast<double>(*chain.lmix()) * s.min_vertex_weight * s.min_vertex_weight / s.total;
}

double comparison_bound(const WeightFunction& w) { return comparison_bound(w, LazyChain(w)); }

MixingReport mixing_report(const WeightFunction& w, double tie_guard) {
  const LazyChain chain(w, tie_guard);
  MixingReport r;
  r.lmix = chain.lmix();
  r.mix = chain.tv_mix();
  if (chain.lmix()) {
    r.delta = delta_factor(chain);
    r.clauses = delta_clause_diagnostics(w, chain);
    r.comparison_bound = comparison_bound(w, chain);
  }
  return r;
}

LiftedWeight::LiftedWeight(Eigen::MatrixXd u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols() || u_.rows() < 1) throw ParameterError("lifted weight must be a square matrix");
  if ((u_ - u_.transpose()).cwiseAbs().maxCoeff() > 0.0) {
    // Symmetrize exact round-off only; genuine asymmetry is an error.
    const double scale = std::max(1.0, u_.cwiseAbs().maxCoeff());
    if ((u_ - u_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
      throw ParameterError("lifted weight must be symmetric");
    }
    u_ = 0.5 * (u_ + u_.transpose());
  }
  if ((u_.array() < 0.0).any() || !u_.allFinite()) throw ParameterError("lifted weights must be finite and nonnegative");
}

Eigen::MatrixXd LiftedWeight::transition() const {
  const Eigen::VectorXd sums = row_sums();
  if ((sums.array() <= 0.0).any()) throw DegenerateWeightError("lifted weight has a zero row");
  return sums.cwiseInverse().asDiagonal() * u_;
}

double LiftedWeight::holding_ratio() const {
  const Eigen::VectorXd sums = row_sums();
  if ((sums.array() <= 0.0).any()) throw DegenerateWeightError("lifted weight has a zero row");
  return u_.diagonal().cwiseQuotient(sums).maxCoeff();
}

LiftedWeight lift_lazy(const WeightFunction& w) {
  Eigen::MatrixXd u = w.dense();
  for (int i = 0; i < w.size(); ++i) {
    if (w.vertex_weight(i) <= 0.0) throw DegenerateWeightError("vertex " + std::to_string(i) + " is isolated");
    u(i, i) = w.vertex_weight(i);
  }
  return LiftedWeight(std::move(u));
}

LiftedWeight double_weight(const LiftedWeight& u) {
  const Eigen::VectorXd sums = u.row_sums();
  if ((sums.array() <= 0.0).any()) throw DegenerateWeightError("lifted weight has a zero row");
  const Eigen::MatrixXd& m = u.matrix();
  Eigen::MatrixXd doubled = m * sums.cwiseInverse().asDiagonal() * m;
  return LiftedWeight(0.5 * (doubled + doubled.transpose()));
}

DeltaFactor delta_by_doubling(const WeightFunction& w, std::int64_t lmix) {
  if (lmix < 1) throw ParameterError("lmix must be positive");
  LiftedWeight u = lift_lazy(w);
  DeltaFactor out;
  double inverse = 1.0;
  const int last = floor_log2(lmix);
  for (int k = 0; k <= last; ++k) {
    const double eps = u.holding_ratio();
    out.epsilon.push_back(eps);
    inverse *= 1.0 + eps;
    if (k < last) u = double_weight(u);
  }
  out.delta = 1.0 / inverse;
  return out;
}

ProbabilityBoundReport verify_probability_bounds(const LazyChain& chain, const WeightFunction& w) {
  if (!chain.lmix()) throw DisconnectedError("probability bounds need a connected weight function");
  const DegreeStats s = degree_stats(w);
  ProbabilityBoundReport r;
  r.regular = s.regular;
  r.connectivity_slack = std::numeric_limits<double>::infinity();
  if (r.regular) r.regular_slack = std::numeric_limits<double>::infinity();
  const int n = chain.size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  for (std::int64_t t = 1; t <= *chain.lmix(); ++t) {
    p = p * chain.transition();
    const double root = std::sqrt(static_cast<double>(t));
    const double regular_bound = kProbabilityBoundConstant / std::sqrt(root);
    for (int i = 0; i < n; ++i) {
      const double bound = kProbabilityBoundConstant / root * s.vertex_weights[static_cast<std::size_t>(i)] /
                           s.min_positive_weight;
      const double row_max = p.row(i).maxCoeff();
      r.connectivity_slack = std::min(r.connectivity_slack, bound - row_max);
      if (r.regular) r.regular_slack = std::min(*r.regular_slack, regular_bound - row_max);
    }
    ++r.steps_checked;
  }
  r.connectivity_holds = r.connectivity_slack >= 0.0;
  r.regular_holds = !r.regular || *r.regular_slack >= 0.0;
  return r;
}

MonotonicityReport verify_monotonicity(const LazyChain& chain, std::int64_t t_max, double tolerance) {
  MonotonicityReport r;
  const int n = chain.size();
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(n, n);
  double prev_ratio = chain.min_ratio(p);
  double prev_tv = chain.tv_distance(p);
  for (std::int64_t t = 1; t <= t_max; ++t) {
    p = p * chain.transition();
    const double ratio = chain.min_ratio(p);
    const double tv = chain.tv_distance(p);
    r.worst_ratio_drop = std::max(r.worst_ratio_drop, prev_ratio - ratio);
    r.worst_tv_rise = std::max(r.worst_tv_rise, tv - prev_tv);
    prev_ratio = ratio;
    prev_tv = tv;
    ++r.steps_checked;
  }
  r.min_ratio_nondecreasing = r.worst_ratio_drop <= tolerance;
  r.tv_nonincreasing = r.worst_tv_rise <= tolerance;
  return r;
}

}  // namespace interchange
