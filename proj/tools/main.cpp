#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "interchange/acceptance.hpp"
#include "interchange/cycles.hpp"
#include "interchange/errors.hpp"
#include "interchange/group_algebra.hpp"
#include "interchange/irreps.hpp"
#include "interchange/lazy_chain.hpp"
#include "interchange/qhf.hpp"
#include "interchange/weight_function.hpp"
#include "reports.hpp"

namespace {

using namespace interchange;
using cli::Json;
using cli::number;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string graph;
  double t = 1.0;
  int k = 1;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  double psd_tol = kPsdTolerance;
  double tie_guard = kDefaultTieGuard;
  std::string out;
  std::string csv;

  int octopus_n = 0;
  int hub = 0;
  std::vector<double> arms;
  int levels = 3;
  bool mc = false;
  std::string level = "desk";
  bool omit_timing = false;
  std::vector<std::string> graphs;
};

struct Output {
  Output() = default;
  Output(Json j, int exit_status = 0, std::optional<std::string> table = std::nullopt)
      : json(std::move(j)), status(exit_status), csv(std::move(table)) {}

  Json json;
  int status = 0;
  std::optional<std::string> csv;  // set by commands that produce a table
};

Json header(const std::string& command, const RunConfig& cfg, const WeightFunction* w) {
  Json j;
  j["command"] = command;
  if (w) {
    j["graph"] = cfg.graph;
    j["n"] = w->size();
  }
  return j;
}

Output run_mix(const RunConfig& cfg) {
  const auto w = load_graph(cfg.graph);
  Json j = header("mix", cfg, &w);
  j["tie_guard"] = cfg.tie_guard;
  j.update(cli::to_json(mixing_report(w, cfg.tie_guard)));
  return {std::move(j)};
}

Output run_octopus(const RunConfig& cfg) {
  const auto gap = octopus_gap(cfg.octopus_n, cfg.hub, cfg.arms);
  const auto verdict = is_psd(gap, PsdRoute::automatic, cfg.psd_tol);
  Json j = header("octopus", cfg, nullptr);
  j["n"] = cfg.octopus_n;
  j["hub"] = cfg.hub;
  j["arms"] = cfg.arms;
  j["tol"] = cfg.psd_tol;
  j["psd"] = verdict.psd;
  j["min_eigenvalue"] = number(verdict.min_eigenvalue);
  j["scale"] = number(verdict.scale);
  if (cfg.octopus_n <= 5) j["spectrum"] = regular_spectrum(gap);
  return {std::move(j), verdict.psd ? 0 : kExitCheckFailed};
}

Output run_doubling(const RunConfig& cfg) {
  const auto w = load_graph(cfg.graph);
  Json j = header("verify-doubling", cfg, &w);
  j["tol"] = cfg.psd_tol;
  Json levels = Json::array();
  bool all = true;
  auto u = lift_lazy(w);
  for (int level = 0; level < cfg.levels; ++level) {
    double eps = 0.0;
    const auto verdict = is_psd(doubling_gap(u, &eps), PsdRoute::automatic, cfg.psd_tol);
    all = all && verdict.psd;
    levels.push_back({{"level", level},
                      {"epsilon", number(eps)},
                      {"psd", verdict.psd},
                      {"min_eigenvalue", number(verdict.min_eigenvalue)},
                      {"scale", number(verdict.scale)}});
    u = double_weight(u);
  }
  j["levels"] = std::move(levels);
  j["psd"] = all;
  return {std::move(j), all ? 0 : kExitCheckFailed};
}

Output run_compare(const RunConfig& cfg) {
  const auto w = load_graph(cfg.graph);
  const auto r = comparison_constant(w);
  Json j = header("compare", cfg, &w);
  j.update(cli::to_json(r));
  return {std::move(j), r.aldous_holds ? 0 : kExitCheckFailed, cli::comparison_csv(r)};
}

Output run_cycles(const RunConfig& cfg) {
  const auto w = load_graph(cfg.graph);
  Json j = header("cycles", cfg, &w);
  j["k"] = cfg.k;
  j["t"] = cfg.t;
  const double spectral = expected_cycles_spectral(w, cfg.k, cfg.t);
  j["spectral"] = number(spectral);
  j["terms"] = cli::to_json(cycle_coefficients(w.size(), cfg.k));
  j["bruteforce"] = w.size() <= kMaxExactN ? number(exact_cycles_bruteforce(w, cfg.k, cfg.t)) : Json(nullptr);
  if (cfg.mc) {
    const auto mc = expected_cycles_mc(w, cfg.k, cfg.t, cfg.samples, cfg.seed);
    Json m = cli::to_json(mc);
    m["seed"] = cfg.seed;
    m["z_score"] = mc.std_error > 0.0 ? number((mc.estimate - spectral) / mc.std_error) : Json(nullptr);
    j["monte_carlo"] = std::move(m);
  } else {
    j["monte_carlo"] = nullptr;
  }
  return {std::move(j)};
}

Output run_large_cycles(const RunConfig& cfg) {
  const auto w = load_graph(cfg.graph);
  Json j = header("large-cycles", cfg, &w);
  j["t"] = cfg.t;
  j["seed"] = cfg.seed;
  j["probability"] = cli::to_json(large_cycle_probability(w, cfg.t, cfg.samples, cfg.seed));
  return {std::move(j)};
}

Output run_qhf(const RunConfig& cfg) {
  const auto w = load_graph(cfg.graph);
  Json j = header("qhf", cfg, &w);
  j["t"] = cfg.t;
  j["seed"] = cfg.seed;
  j["monte_carlo"] = cli::to_json(qhf_mc(w, cfg.t, cfg.samples, cfg.seed));
  if (w.size() <= kMaxExactN) {
    const auto ex = qhf_exact(w, cfg.t);
    j["exact"] = {{"z", number(ex.z)}, {"m_sq", number(ex.m_sq)}};
  } else {
    j["exact"] = nullptr;
  }
  return {std::move(j)};
}

Output run_suite_command(const RunConfig& cfg) {
  if (cfg.level != "desk" && cfg.level != "extended") throw UsageError("--level must be desk or extended");
  auto suite = SuiteConfig::for_level(cfg.level == "desk" ? SuiteLevel::desk : SuiteLevel::extended, cfg.seed);
  suite.psd_tol = cfg.psd_tol;
  suite.tie_guard = cfg.tie_guard;
  const auto report = run_suite(suite);
  Json j = header("suite", cfg, nullptr);
  j.update(cli::to_json(report, !cfg.omit_timing));
  return {std::move(j), report.passed() ? 0 : kExitCheckFailed, cli::suite_csv(report, !cfg.omit_timing)};
}

Output run_constants(const RunConfig& cfg) {
  const auto specs = cfg.graphs.empty() ? default_empirical_graphs() : cfg.graphs;
  const auto rows = empirical_constant_table(specs);
  bool positive = true;
  for (const auto& r : rows)
    if (r.connected && !(r.a_star > 0 && r.comparison_bound > 0 && r.empirical_c > 0 && std::isfinite(r.empirical_c)))
      positive = false;
  Json j = header("constants", cfg, nullptr);
  j["rows"] = cli::to_json(rows);
  j["all_positive"] = positive;
  return {std::move(j), positive ? 0 : kExitCheckFailed, cli::empirical_csv(rows)};
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open " + path + " for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"Interchange process toolkit: mixing, operator inequalities, cycles, QHF"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", cfg.seed, "master seed")->capture_default_str();
  app.add_option("--tol", cfg.psd_tol, "PSD tolerance, relative to the operator scale")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--tie-guard", cfg.tie_guard, "strict-inequality guard for mixing times")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", cfg.out, "write the JSON report here instead of stdout");
  app.add_option("--csv", cfg.csv, "also write the table as CSV (compare, constants, suite)");

  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", cfg.graph, "family:params or file:path")->required(); };
  auto mc_opts = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Monte Carlo trajectories")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* mix = app.add_subcommand("mix", "lazy-chain mixing numbers and delta");
  graph_opt(mix);

  auto* octopus = app.add_subcommand("octopus", "check the octopus inequality for one star");
  octopus->add_option("--n", cfg.octopus_n, "number of vertices")->required()->check(CLI::Range(2, kMaxIrrepN));
  octopus->add_option("--arms", cfg.arms, "n-1 arm weights, in increasing order of the non-hub vertices")
      ->required()
      ->delimiter(',');
  octopus->add_option("--hub", cfg.hub, "hub vertex")->capture_default_str();

  auto* doubling = app.add_subcommand("verify-doubling", "doubling inequality along repeated doublings of the lazy lift");
  graph_opt(doubling);
  doubling->add_option("--levels", cfg.levels, "number of doublings to check")->check(CLI::Range(1, 30))->capture_default_str();

  auto* compare = app.add_subcommand("compare", "comparison constant a*, Aldous check, per-irrep table");
  graph_opt(compare);

  auto* cycles = app.add_subcommand("cycles", "expected number of k-cycles at time t");
  graph_opt(cycles);
  cycles->add_option("--k", cfg.k, "cycle length")->required();
  cycles->add_option("--t", cfg.t, "time")->required()->check(CLI::NonNegativeNumber);
  cycles->add_flag("--mc", cfg.mc, "also run the Monte Carlo estimator");
  mc_opts(cycles);

  auto* large = app.add_subcommand("large-cycles", "probability of a cycle longer than n/2");
  graph_opt(large);
  large->add_option("--t", cfg.t, "time")->required()->check(CLI::NonNegativeNumber);
  mc_opts(large);

  auto* qhf = app.add_subcommand("qhf", "Z and m^2 of the ferromagnet at inverse temperature t");
  graph_opt(qhf);
  qhf->add_option("--t", cfg.t, "time")->required()->check(CLI::NonNegativeNumber);
  mc_opts(qhf);

  auto* suite = app.add_subcommand("suite", "run every acceptance criterion");
  suite->add_option("--level", cfg.level, "desk or extended")->check(CLI::IsMember({"desk", "extended"}))->capture_default_str();
  suite->add_flag("--omit-timing", cfg.omit_timing, "write null runtimes so reports are byte-identical");

  auto* constants = app.add_subcommand("constants", "empirical comparison-constant table");
  constants->add_option("--graphs", cfg.graphs, "graph specs (default: built-in list)")->delimiter(';');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    Output out;
    if (command == "mix") out = run_mix(cfg);
    else if (command == "octopus") out = run_octopus(cfg);
    else if (command == "verify-doubling") out = run_doubling(cfg);
    else if (command == "compare") out = run_compare(cfg);
    else if (command == "cycles") out = run_cycles(cfg);
    else if (command == "large-cycles") out = run_large_cycles(cfg);
    else if (command == "qhf") out = run_qhf(cfg);
    else if (command == "suite") out = run_suite_command(cfg);
    else out = run_constants(cfg);

    if (!cfg.csv.empty()) {
      if (!out.csv) throw UsageError("--csv is only available for compare, constants and suite");
      write_file(cfg.csv, *out.csv);
    }
    const std::string text = out.json.dump(2) + "\n";
    if (cfg.out.empty()) std::cout << text;
    else write_file(cfg.out, text);
    return out.status;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const interchange::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
