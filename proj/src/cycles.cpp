#include "interchange/cycles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "interchange/errors.hpp"
#include "interchange/group_algebra.hpp"

namespace interchange {

namespace {

std::vector<int> candidate_parts(std::initializer_list<int> head, int ones) {
  std::vector<int> parts(head);
  parts.insert(parts.end(), static_cast<std::size_t>(std::max(ones, 0)), 1);
  return parts;
}

Partition checked_partition(std::vector<int> parts, int n, int k, int i) {
  bool valid = !parts.empty();
  int sum = 0;
  for (std::size_t r = 0; r < parts.size() && valid; ++r) {
    valid = parts[r] > 0 && (r == 0 || parts[r] <= parts[r - 1]);
    sum += parts[r];
  }
  if (!valid || sum != n) {
    throw ConsistencyError("cycle coefficient table produced an invalid partition at n = " + std::to_string(n) +
                           ", k = " + std::to_string(k) + ", i = " + std::to_string(i));
  }
  return Partition(std::move(parts));
}

std::uint64_t factorial64(int m) {
  std::uint64_t f = 1;
  for (int x = 2; x <= m; ++x) f *= static_cast<std::uint64_t>(x);
  return f;
}

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;
  std::size_t count = 0;
};

McEstimate finish(const std::vector<Moments>& batches) {
  Moments total;
  for (const auto& b : batches) {
    total.sum += b.sum;
    total.sum_sq += b.sum_sq;
    total.count += b.count;
  }
  McEstimate e;
  e.samples = total.count;
  const auto n = static_cast<double>(total.count);
  e.estimate = total.sum / n;
  if (total.count > 1) {
    const double var = std::max(0.0, (total.sum_sq - n * e.estimate * e.estimate) / (n - 1.0));
    e.std_error = std::sqrt(var / n);
  }
  return e;
}

constexpr std::size_t kTrajectoriesPerBatch = 4096;

}  // namespace

std::pair<int, int> family_index_range(int n, int k, CycleFamily family) {
  if (family == CycleFamily::first) return {0, 2 * k - n - 2};
  return {std::max(2 * k - n, 0), k - 1};
}

Partition family_partition(int n, int k, int i, CycleFamily family) {
  if (family == CycleFamily::first) return checked_partition(candidate_parts({k - i - 1, n - k + 1}, i), n, k, i);
  return checked_partition(candidate_parts({n - k, k - i}, i), n, k, i);
}

CycleFormula cycle_coefficients(int n, int k) {
  if (n < 1 || n > kMaxPartitionN) throw CapError("cycle coefficients support 1 <= n <= 12");
  if (k < 1 || k > n) throw ParameterError("cycle length k must satisfy 1 <= k <= n");
  CycleFormula f{n, k, {}};
  f.terms.push_back({Partition({n}), 1});
  const auto [first_lo, first_hi] = family_index_range(n, k, CycleFamily::first);
  for (int i = first_lo; i <= first_hi; ++i) {
    f.terms.push_back({family_partition(n, k, i, CycleFamily::first), i % 2 == 0 ? -1 : 1});
  }
  const auto [second_lo, second_hi] = family_index_range(n, k, CycleFamily::second);
  for (int i = second_lo; i <= second_hi; ++i) {
    f.terms.push_back({family_partition(n, k, i, CycleFamily::second), i % 2 == 0 ? 1 : -1});
  }
  // A partition listed twice would silently double-count.
  for (std::size_t a = 0; a < f.terms.size(); ++a)
    for (std::size_t b = a + 1; b < f.terms.size(); ++b)
      if (f.terms[a].partition == f.terms[b].partition) {
        throw ConsistencyError("cycle coefficient table lists " + f.terms[a].partition.to_string() + " twice");
      }
  return f;
}

double expected_cycles_spectral(const std::vector<IrrepSpectrum>& spectra, int k, double t) {
  if (spectra.empty()) throw ParameterError("no spectra given");
  if (!(t >= 0.0)) throw ParameterError("time must be nonnegative");
  const int n = spectra.front().partition.size();
  std::map<Partition, const IrrepSpectrum*> by_shape;
  for (const auto& s : spectra) by_shape.emplace(s.partition, &s);
  double total = 0.0;
  for (const auto& term : cycle_coefficients(n, k).terms) {
    auto it = by_shape.find(term.partition);
    if (it == by_shape.end()) throw ParameterError("missing spectrum for " + term.partition.to_string());
    double trace = 0.0;
    for (double lambda : it->second->eigenvalues) trace += std::exp(-t * lambda);
    total += term.coefficient * trace;
  }
  return total / k;
}

double expected_cycles_spectral(const WeightFunction& w, int k, double t) {
  if (w.size() > kMaxIrrepN) throw CapError("spectral cycle counts are capped at n <= 10");
  std::vector<IrrepSpectrum> spectra;
  for (const auto& term : cycle_coefficients(w.size(), k).terms) spectra.push_back(delta_on_irrep(w, term.partition));
  return expected_cycles_spectral(spectra, k, t);
}

FamilyValues family_lambda_dim(int n, int k, int i, CycleFamily family) {
  if (n < 1 || n > kMaxPartitionN) throw CapError("family formulas support 1 <= n <= 12");
  if (k < 1 || k > n) throw ParameterError("cycle length k must satisfy 1 <= k <= n");
  const auto [lo, hi] = family_index_range(n, k, family);
  if (i < lo || i > hi) throw ParameterError("family index i = " + std::to_string(i) + " is out of range");
  FamilyValues v{family_partition(n, k, i, family), 0.0, 0};
  v.lambda_kn = n * (n - 1) / 2.0 + i * k + k - 0.5 * ((n - k) * (n - k) + k * k - n);
  const long long factor = family == CycleFamily::first ? 2 * k - n - i - 1 : n - 2 * k + i + 1;
  const std::uint64_t numerator = factorial64(n) * static_cast<std::uint64_t>(factor);
  const std::uint64_t denominator = factorial64(i) * static_cast<std::uint64_t>(k) * factorial64(n - k) *
                                    factorial64(k - i - 1) * static_cast<std::uint64_t>(n - k + i + 1);
  if (factor <= 0 || numerator % denominator != 0) {
    throw ConsistencyError("family dimension formula is not a positive integer");
  }
  v.dim = numerator / denominator;
  return v;
}

int Trajectory::total_cycles() const {
  int s = 0;
  for (int c : cycle_counts) s += c;
  return s;
}

long long Trajectory::square_weighted_cycles() const {
  long long s = 0;
  for (std::size_t k = 0; k < cycle_counts.size(); ++k) s += static_cast<long long>(k * k) * cycle_counts[k];
  return s;
}

int Trajectory::longest_cycle() const {
  for (std::size_t k = cycle_counts.size(); k-- > 1;)
    if (cycle_counts[k] > 0) return static_cast<int>(k);
  return 0;
}

InterchangeSimulator::InterchangeSimulator(const WeightFunction& w) : n_(w.size()) {
  for (const auto& [pair, value] : w.entries()) {
    total_rate_ += value;
    edges_.push_back(pair);
    cumulative_.push_back(total_rate_);
  }
}

Trajectory InterchangeSimulator::run(double t, std::uint64_t seed) const {
  if (!(t >= 0.0)) throw ParameterError("time must be nonnegative");
  Trajectory tr;
  tr.seed = seed;
  tr.t = t;
  tr.final_state.resize(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) tr.final_state[static_cast<std::size_t>(i)] = i;
  if (total_rate_ > 0.0 && t > 0.0) {
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> wait(total_rate_);
    std::uniform_real_distribution<double> pick(0.0, total_rate_);
    for (double clock = wait(rng); clock <= t; clock += wait(rng)) {
      auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), pick(rng));
      if (it == cumulative_.end()) --it;
      const auto& [i, j] = edges_[static_cast<std::size_t>(it - cumulative_.begin())];
      std::swap(tr.final_state[static_cast<std::size_t>(i)], tr.final_state[static_cast<std::size_t>(j)]);
      ++tr.events;
    }
  }
  tr.cycle_counts = cycle_counts(tr.final_state);
  return tr;
}

Trajectory simulate_interchange(const WeightFunction& w, double t, std::uint64_t seed) {
  return InterchangeSimulator(w).run(t, seed);
}

McEstimate expected_cycles_mc(const WeightFunction& w, int k, double t, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ParameterError("need at least one sample");
  if (k < 1 || k > w.size()) throw ParameterError("cycle length k must satisfy 1 <= k <= n");
  const InterchangeSimulator sim(w);
  const auto batches = sim.run_batches<Moments>(
      t, samples, seed, (samples + kTrajectoriesPerBatch - 1) / kTrajectoriesPerBatch,
      [k](Moments& m, const Trajectory& tr) {
        const double x = tr.cycle_counts[static_cast<std::size_t>(k)];
        m.sum += x;
        m.sum_sq += x * x;
        ++m.count;
      });
  return finish(batches);
}

McEstimate large_cycle_probability(const WeightFunction& w, double t, std::size_t samples, std::uint64_t seed) {
  if (samples < 1) throw ParameterError("need at least one sample");
  const InterchangeSimulator sim(w);
  const int n = w.size();
  const auto batches = sim.run_batches<Moments>(
      t, samples, seed, (samples + kTrajectoriesPerBatch - 1) / kTrajectoriesPerBatch,
      [n](Moments& m, const Trajectory& tr) {
        const double x = 2 * tr.longest_cycle() > n ? 1.0 : 0.0;
        m.sum += x;
        m.sum_sq += x;
        ++m.count;
      });
  return finish(batches);
}

double exact_cycles_bruteforce(const WeightFunction& w, int k, double t) {
  if (k < 1 || k > w.size()) throw ParameterError("cycle length k must satisfy 1 <= k <= n");
  const InterchangeExact exact(w);
  const Eigen::VectorXd p = exact.distribution(t);
  double total = 0.0;
  for (std::size_t s = 0; s < exact.permutations().size(); ++s) {
    total += p(static_cast<Eigen::Index>(s)) * cycle_counts(exact.permutations()[s])[static_cast<std::size_t>(k)];
  }
  return total;
}

}  // namespace interchange
