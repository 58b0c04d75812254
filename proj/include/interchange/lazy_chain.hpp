#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "interchange/weight_function.hpp"

namespace interchange {

// Step count, or nullopt for "never" (disconnected weights).
using MixingSteps = std::optional<std::int64_t>;

inline constexpr double kDefaultTieGuard = 1e-12;

// Discrete lazy walk on the vertices: hold with probability 1/2, otherwise
// jump to j with probability w_ij / w_i. Dyadic powers P^(2^k) are computed
// at construction far enough to bracket lmix; the object is immutable after
// that and safe to share across threads.
class LazyChain {
 public:
  explicit LazyChain(const WeightFunction& w, double tie_guard = kDefaultTieGuard);

  int size() const { return static_cast<int>(transition_.rows()); }
  const Eigen::MatrixXd& transition() const { return transition_; }
  const Eigen::VectorXd& stationary() const { return stationary_; }
  bool connected() const { return connected_; }
  double tie_guard() const { return tie_guard_; }

  // p_t as a product of dyadic powers picked by the bits of t.
  Eigen::MatrixXd power(std::int64_t t) const;
  // P^(2^k); cached for k <= ceil(log2 lmix), squared on demand beyond.
  Eigen::MatrixXd dyadic_power(int k) const;
  int cached_dyadic_count() const { return static_cast<int>(dyadic_.size()); }

  // min t with p_t(i,j) > (3/4) pi(j) for all i, j (strict, tie-guarded).
  MixingSteps lmix() const { return lmix_; }
  // min t with max_i ||p_t(i,.) - pi||_TV < 1/4 (strict, tie-guarded).
  MixingSteps tv_mix() const { return tv_mix_; }

  // min_{i,j} p(i,j) / pi(j) and max_i ||p(i,.) - pi||_TV for a given p_t.
  double min_ratio(const Eigen::MatrixXd& p) const;
  double tv_distance(const Eigen::MatrixXd& p) const;

 private:
  Eigen::MatrixXd transition_;
  Eigen::VectorXd stationary_;
  std::vector<Eigen::MatrixXd> dyadic_;
  bool connected_ = false;
  double tie_guard_ = kDefaultTieGuard;
  MixingSteps lmix_;
  MixingSteps tv_mix_;

  bool lower_bound_holds(const Eigen::MatrixXd& p) const;
  bool tv_below_quarter(const Eigen::MatrixXd& p) const;
  void compute_lmix();
  void compute_tv_mix();
};

inline LazyChain lazy_chain(const WeightFunction& w, double tie_guard = kDefaultTieGuard) {
  return LazyChain(w, tie_guard);
}

inline Eigen::MatrixXd transition_power(const LazyChain& chain, std::int64_t t) { return chain.power(t); }

struct DeltaFactor {
  double delta = 0.0;
  std::vector<double> epsilon;  // eps_k = max_i p_{2^k}(i,i), k = 0..floor(log2 lmix)
};

// 1/delta = prod_{k=0}^{floor(log2 lmix)} max_i (1 + p_{2^k}(i,i)).
// Throws DisconnectedError when lmix is infinite.
DeltaFactor delta_factor(const LazyChain& chain);

struct ClauseDiagnostics {
  double min_weight_ratio_sq = 0.0;  // (min* w_ij / max w_i)^2
  bool regular = false;
  double inverse_two_lmix = 0.0;  // 1 / (2 lmix)
};

// Lower-bound shapes for delta; the universal constants are deliberately
// left out, so these are compared with delta only up to a constant factor.
ClauseDiagnostics delta_clause_diagnostics(const WeightFunction& w, const LazyChain& chain);

// b(w) = (delta / lmix) * min_i w_i^2 / w_tot, the comparison lower bound
// without its universal constant.
double comparison_bound(const WeightFunction& w, const LazyChain& chain);
double comparison_bound(const WeightFunction& w);

struct MixingReport {
  MixingSteps lmix;
  MixingSteps mix;
  std::optional<DeltaFactor> delta;
  std::optional<ClauseDiagnostics> clauses;
  std::optional<double> comparison_bound;
};

MixingReport mixing_report(const WeightFunction& w, double tie_guard = kDefaultTieGuard);

// Weight function that also carries diagonal entries u_ii. u_i = sum_j u_ij
// includes the diagonal, so u_ij / u_i is a transition matrix that may hold.
class LiftedWeight {
 public:
  explicit LiftedWeight(Eigen::MatrixXd u);

  int size() const { return static_cast<int>(u_.rows()); }
  const Eigen::MatrixXd& matrix() const { return u_; }
  double operator()(int i, int j) const { return u_(i, j); }
  Eigen::VectorXd row_sums() const { return u_.rowwise().sum(); }
  Eigen::MatrixXd transition() const;
  // max_i u_ii / u_i
  double holding_ratio() const;

 private:
  Eigen::MatrixXd u_;
};

// u_ij = w_ij off the diagonal and u_ii = w_i: the lazy chain of w.
LiftedWeight lift_lazy(const WeightFunction& w);

// u2_ij = sum_k u_ik u_kj / u_k. Keeps row sums and gives the two-step chain.
LiftedWeight double_weight(const LiftedWeight& u);

// delta from the holding ratios of repeated doublings of lift_lazy(w);
// independent of LazyChain's dyadic powers.
DeltaFactor delta_by_doubling(const WeightFunction& w, std::int64_t lmix);

struct ProbabilityBoundReport {
  std::int64_t steps_checked = 0;
  // min over t <= lmix, i, j of 30/sqrt(t) * w_i / min* w_ij - p_t(i,j)
  double connectivity_slack = 0.0;
  bool connectivity_holds = true;
  bool regular = false;
  // min over t, i, j of 30 / t^(1/4) - p_t(i,j); only for regular graphs
  std::optional<double> regular_slack;
  bool regular_holds = true;
};

inline constexpr double kProbabilityBoundConstant = 30.0;

ProbabilityBoundReport verify_probability_bounds(const LazyChain& chain, const WeightFunction& w);

struct MonotonicityReport {
  std::int64_t steps_checked = 0;
  bool min_ratio_nondecreasing = true;
  bool tv_nonincreasing = true;
  double worst_ratio_drop = 0.0;  // largest decrease of min p_t/pi seen
  double worst_tv_rise = 0.0;     // largest increase of the TV distance seen
};

// Evaluates every t in [0, t_max] and checks both monotonicity properties
// with an absolute slack of `tolerance`.
MonotonicityReport verify_monotonicity(const LazyChain& chain, std::int64_t t_max, double tolerance = 1e-12);

}  // namespace interchange
