#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "interchange/irreps.hpp"
#include "interchange/parallel.hpp"
#include "interchange/partition.hpp"
#include "interchange/permutation.hpp"
#include "interchange/weight_function.hpp"

namespace interchange {

struct CycleTerm {
  Partition partition;
  int coefficient = 0;  // a_rho in {-1, +1}; zero terms are not listed
};

// E(s_k(t)) = (1/k) sum_rho a_rho sum_j exp(-t lambda_j(w, rho)).
// Nonzero a_rho:
//   [n]                                  +1
//   [k-i-1, n-k+1, 1^i], i = 0..2k-n-2   (-1)^(i+1)
//   [n-k, k-i, 1^i],     i = max(2k-n,0)..k-1   (-1)^i
struct CycleFormula {
  int n = 0;
  int k = 0;
  std::vector<CycleTerm> terms;
};

// Index ranges are taken literally; a candidate that is not a valid
// partition raises ConsistencyError instead of being dropped.
CycleFormula cycle_coefficients(int n, int k);

double expected_cycles_spectral(const std::vector<IrrepSpectrum>& spectra, int k, double t);
double expected_cycles_spectral(const WeightFunction& w, int k, double t);

enum class CycleFamily { first, second };

// Inclusive index range of the family; first > second when it is empty.
std::pair<int, int> family_index_range(int n, int k, CycleFamily family);
Partition family_partition(int n, int k, int i, CycleFamily family);

struct FamilyValues {
  Partition partition;
  double lambda_kn = 0.0;
  std::uint64_t dim = 0;
};

// lambda = C(n,2) + ik + k - ((n-k)^2 + k^2 - n)/2 and the closed-form
// dimensions of the two families, evaluated without going through
// contents or hooks.
FamilyValues family_lambda_dim(int n, int k, int i, CycleFamily family);

struct Trajectory {
  std::uint64_t seed = 0;
  double t = 0.0;
  std::vector<int> final_state;  // marble at each position
  std::uint64_t events = 0;
  std::vector<int> cycle_counts;  // alpha_k, k = 0..n

  int total_cycles() const;
  long long square_weighted_cycles() const;  // sum_k k^2 alpha_k
  int longest_cycle() const;
};

// Event-driven interchange process: one Poisson clock of rate w_ij per pair,
// marbles at i and j swapped at each ring. Edges are drawn from a cumulative
// weight table by binary search.
class InterchangeSimulator {
 public:
  explicit InterchangeSimulator(const WeightFunction& w);

  int size() const { return n_; }
  double total_rate() const { return total_rate_; }
  Trajectory run(double t, std::uint64_t seed) const;

  // Runs `samples` trajectories with seeds stream_seed(master, index), split
  // into `batches` contiguous index ranges. fn(acc, trajectory) folds one
  // trajectory into its batch accumulator. Batches run in parallel; the
  // result does not depend on the thread count.
  template <class Acc, class Fn>
  std::vector<Acc> run_batches(double t, std::size_t samples, std::uint64_t master, std::size_t batches,
                               Fn&& fn) const {
    batches = std::max<std::size_t>(1, std::min(batches, samples));
    std::vector<Acc> acc(batches);
    parallel_for(batches, [&](std::size_t b) {
      const std::size_t begin = samples * b / batches;
      const std::size_t end = samples * (b + 1) / batches;
      for (std::size_t index = begin; index < end; ++index) fn(acc[b], run(t, stream_seed(master, index)));
    });
    return acc;
  }

 private:
  int n_;
  double total_rate_ = 0.0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<double> cumulative_;
};

Trajectory simulate_interchange(const WeightFunction& w, double t, std::uint64_t seed);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

McEstimate expected_cycles_mc(const WeightFunction& w, int k, double t, std::size_t samples, std::uint64_t seed);
// P(some cycle is longer than n/2)
McEstimate large_cycle_probability(const WeightFunction& w, double t, std::size_t samples, std::uint64_t seed);

// sum_sigma p_t(id -> sigma) * (number of k-cycles of sigma), n <= 5.
double exact_cycles_bruteforce(const WeightFunction& w, int k, double t);

}  // namespace interchange
