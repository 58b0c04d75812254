#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace interchange {

enum class SuiteLevel { desk, extended };

struct SuiteConfig {
  SuiteLevel level = SuiteLevel::desk;
  std::uint64_t seed = 0;
  double psd_tol = 1e-9;
  double tie_guard = 1e-12;

  std::size_t mc_samples = 100000;
  int scalarity_max_n = 8;
  int aldous_max_n = 7;

  static SuiteConfig for_level(SuiteLevel level, std::uint64_t seed = 0);
};

// measured <relation> threshold
enum class Relation { at_most, at_least, above };

std::string relation_symbol(Relation r);

struct SubCheck {
  std::string name;
  double measured = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::at_most;
  bool passed = false;
};

struct CheckRecord {
  int id = 0;
  std::string name;
  std::string inputs;         // canonical description of what was evaluated
  std::string inputs_digest;  // FNV-1a of `inputs`, hex
  bool passed = false;
  // The first failing sub-check, or the first sub-check when all pass.
  double measured = 0.0;
  double threshold = 0.0;
  Relation relation = Relation::at_most;
  std::vector<SubCheck> details;
  double runtime_seconds = 0.0;
  std::string error;  // set when the check threw
};

struct SuiteReport {
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  double runtime_seconds = 0.0;

  bool passed() const;
};

inline constexpr int kCriterionCount = 11;

std::string fnv1a_hex(const std::string& text);

// Runs one criterion (1..11).
CheckRecord run_criterion(int id, const SuiteConfig& config);

// Runs every criterion on a worker pool; records come back in id order.
SuiteReport run_suite(const SuiteConfig& config);

// Suite graphs used by the mixing, bound and QHF criteria.
std::vector<std::string> suite_graph_specs();

struct EmpiricalRow {
  std::string graph;
  int n = 0;
  double a_star = 0.0;
  double comparison_bound = 0.0;  // b(w)
  double empirical_c = 0.0;    // a* / b(w)
  double a_star_times_m = 0.0; // hamming2 rows only, else 0
  bool connected = false;
};

// One row per graph spec; every graph must fit the irrep caps.
std::vector<EmpiricalRow> empirical_constant_table(const std::vector<std::string>& specs);
std::vector<std::string> default_empirical_graphs();

}  // namespace interchange
