#pragma once

#include <cstddef>
#include <cstdint>

#include "interchange/weight_function.hpp"

namespace interchange {

// Heisenberg ferromagnet observables through the cycle structure of the
// interchange process at time t (t plays the role of inverse temperature):
//   Z(t)   = E(2^alpha(t)),           alpha = total number of cycles
//   m^2(t) = E((sum_k k^2 alpha_k) 2^alpha) / Z(t).
//
// The spectral expansion of these quantities needs coefficients d_{rho,k}
// that are not available in closed form here; what is known about them:
//   1. d_{rho,k} = 0 unless rho has at most three rows plus one column;
//   2. d_{[a,b],k} = 2(a-b+1)/k for a+b = n and 0 <= b <= floor((n-k)/2);
//   3. |d_{rho,k}| <= 2n+2;
//   4. for k in [n/2, 3n/4], every other rho with d_{rho,k} != 0 has
//      lambda(K_n, rho) > c n^2.
// Only the Monte Carlo estimator and a brute-force oracle are implemented.
struct QhfEstimate {
  double t = 0.0;
  double z = 0.0;
  double z_std_error = 0.0;
  double m_sq = 0.0;
  double m_sq_std_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  // Largest sum_k k^2 alpha_k seen over all trajectories; never exceeds n^2.
  long long max_square_weighted = 0;
};

inline constexpr std::size_t kQhfBatches = 32;

// Ratio estimator sharing trajectories between numerator and Z; standard
// errors from batch means over 32 batches (fewer if samples < 32).
QhfEstimate qhf_mc(const WeightFunction& w, double t, std::size_t samples, std::uint64_t seed);

struct QhfExact {
  double z = 0.0;
  double m_sq = 0.0;
};

// Enumerates S_n with the exact interchange distribution (n <= 5).
QhfExact qhf_exact(const WeightFunction& w, double t);
// t -> infinity limit for connected w: the uniform distribution on S_n.
QhfExact qhf_uniform_limit(int n);

}  // namespace interchange
