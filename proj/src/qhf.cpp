#include "interchange/qhf.hpp"

#include <algorithm>
#include <cmath>

#include "interchange/cycles.hpp"
#include "interchange/errors.hpp"
#include "interchange/group_algebra.hpp"

namespace interchange {

namespace {

struct QhfBatch {
  double weight_sum = 0.0;     // sum 2^alpha
  double numerator_sum = 0.0;  // sum (sum_k k^2 alpha_k) 2^alpha
  std::size_t count = 0;
  long long max_square_weighted = 0;
};

double standard_error(const std::vector<double>& values) {
  const auto b = static_cast<double>(values.size());
  if (values.size() < 2) return 0.0;
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= b;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (b - 1.0) / b);
}

QhfExact accumulate(const std::vector<Permutation>& perms, const Eigen::VectorXd& p) {
  QhfExact out;
  double numerator = 0.0;
  for (std::size_t s = 0; s < perms.size(); ++s) {
    const auto counts = cycle_counts(perms[s]);
    int alpha = 0;
    double square_weighted = 0.0;
    for (std::size_t k = 1; k < counts.size(); ++k) {
      alpha += counts[k];
      square_weighted += static_cast<double>(k * k) * counts[k];
    }
    const double weight = p(static_cast<Eigen::Index>(s)) * std::ldexp(1.0, alpha);
    out.z += weight;
    numerator += weight * square_weighted;
  }
  out.m_sq = numerator / out.z;
  return out;
}

}  // namespace

QhfEstimate qhf_mc(const WeightFunction& w, double t, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ParameterError("need at least one sample");
  const InterchangeSimulator sim(w);
  const long long cap = static_cast<long long>(w.size()) * w.size();
  const auto batches =
      sim.run_batches<QhfBatch>(t, samples, seed, kQhfBatches, [cap](QhfBatch& b, const Trajectory& tr) {
        const long long sq = tr.square_weighted_cycles();
        if (sq > cap) throw ConsistencyError("sum_k k^2 alpha_k exceeds n^2 on a trajectory");
        const double weight = std::ldexp(1.0, tr.total_cycles());
        b.weight_sum += weight;
        b.numerator_sum += weight * static_cast<double>(sq);
        b.max_square_weighted = std::max(b.max_square_weighted, sq);
        ++b.count;
      });
  QhfEstimate e;
  e.t = t;
  e.samples = samples;
  e.seed = seed;
  double weight_total = 0.0;
  double numerator_total = 0.0;
  std::vector<double> z_batches;
  std::vector<double> m_batches;
  for (const auto& b : batches) {
    weight_total += b.weight_sum;
    numerator_total += b.numerator_sum;
    e.max_square_weighted = std::max(e.max_square_weighted, b.max_square_weighted);
    z_batches.push_back(b.weight_sum / static_cast<double>(b.count));
    m_batches.push_back(b.numerator_sum / b.weight_sum);
  }
  e.z = weight_total / static_cast<double>(samples);
  e.m_sq = numerator_total / weight_total;
  e.z_std_error = standard_error(z_batches);
  e.m_sq_std_error = standard_error(m_batches);
  return e;
}

QhfExact qhf_exact(const WeightFunction& w, double t) {
  const InterchangeExact exact(w);
  return accumulate(exact.permutations(), exact.distribution(t));
}

QhfExact qhf_uniform_limit(int n) {
  const auto perms = all_permutations(n);
  const Eigen::VectorXd p = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(perms.size()),
                                                      1.0 / static_cast<double>(perms.size()));
  return accumulate(perms, p);
}

}  // namespace interchange
