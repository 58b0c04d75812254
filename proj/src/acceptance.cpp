#include "interchange/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "interchange/cycles.hpp"
#include "interchange/errors.hpp"
#include "interchange/group_algebra.hpp"
#include "interchange/irreps.hpp"
#include "interchange/lazy_chain.hpp"
#include "interchange/parallel.hpp"
#include "interchange/partition.hpp"
#include "interchange/qhf.hpp"
#include "interchange/weight_function.hpp"

namespace interchange {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool holds(double measured, double threshold, Relation r) {
  if (std::isnan(measured)) return false;
  switch (r) {
    case Relation::at_most: return measured <= threshold;
    case Relation::at_least: return measured >= threshold;
    case Relation::above: return measured > threshold;
  }
  return false;
}

// Collects sub-checks and the canonical input description of one criterion.
class Recorder {
 public:
  void input(const std::string& text) {
    if (!inputs_.empty()) inputs_ += "; ";
    inputs_ += text;
  }
  void check(std::string name, double measured, Relation r, double threshold) {
    details_.push_back({std::move(name), measured, threshold, r, holds(measured, threshold, r)});
  }
  void finish(CheckRecord& rec) {
    rec.inputs = inputs_;
    rec.inputs_digest = fnv1a_hex(inputs_);
    rec.details = std::move(details_);
    rec.passed = !rec.details.empty();
    const SubCheck* shown = rec.details.empty() ? nullptr : &rec.details.front();
    for (const auto& d : rec.details) {
      if (!d.passed) {
        rec.passed = false;
        shown = &d;
        break;
      }
    }
    if (shown) {
      rec.measured = shown->measured;
      rec.threshold = shown->threshold;
      rec.relation = shown->relation;
    }
  }

 private:
  std::string inputs_;
  std::vector<SubCheck> details_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return kInf;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// |estimate - exact| in units of the standard error. A batch with no
// variance (e.g. an event never observed) gets the resolution 1/samples
// as its error floor.
double z_score(double estimate, double std_error, std::size_t samples, double exact) {
  const double floor = 1.0 / static_cast<double>(samples);
  return std::abs(estimate - exact) / std::max(std_error, floor);
}

std::vector<double> random_arms(int count, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> value(0.0, 5.0);
  std::vector<double> arms(static_cast<std::size_t>(count));
  for (;;) {
    for (auto& a : arms) a = u(rng) < 0.2 ? 0.0 : value(rng);
    if (std::any_of(arms.begin(), arms.end(), [](double a) { return a > 0.0; })) return arms;
  }
}

LiftedWeight random_lifted(int n, std::mt19937_64& rng) {
  Eigen::MatrixXd m = random_weights(n, rng, 0.3, 0.0, 2.0, false).dense();
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::uniform_real_distribution<double> diag(0.0, 3.0);
  for (int i = 0; i < n; ++i) {
    m(i, i) = u(rng) < 0.25 ? 0.0 : diag(rng);
    if (m.row(i).sum() == 0.0) m(i, i) = 1.0;
  }
  return LiftedWeight(m);
}

// Connected suite graphs plus seeded random weighted graphs.
std::vector<std::pair<std::string, WeightFunction>> mixing_graphs(std::uint64_t seed) {
  std::vector<std::pair<std::string, WeightFunction>> out;
  for (const auto& spec : suite_graph_specs()) out.emplace_back(spec, load_graph(spec));
  std::mt19937_64 rng(stream_seed(seed, 5));
  for (int g = 0; g < 10; ++g) {
    const int n = 4 + g % 5;
    out.emplace_back("random:" + std::to_string(n) + "#" + std::to_string(g), random_weights(n, rng));
  }
  return out;
}

// 1. Octopus PSD.
void octopus_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const std::vector<double> star = regular_spectrum(octopus_gap(3, 0, {1.0, 1.0}));
  rec.input("star n=3 unit arms");
  rec.check("star3 spectrum vs {0,0,0,3,3,3}", max_abs_diff(star, {0, 0, 0, 3, 3, 3}), Relation::at_most, 1e-9);

  const int draws = 200;
  rec.input("n=3,4,5 draws=" + std::to_string(draws) + " arms U[0,5) with P(0)=0.2 seed=" + std::to_string(cfg.seed));
  for (int n : {3, 4, 5}) {
    std::mt19937_64 rng(stream_seed(cfg.seed, 100 + static_cast<std::uint64_t>(n)));
    double worst = kInf;
    for (int d = 0; d < draws; ++d) {
      const int hub = d % n;
      const auto v = octopus_check(n, hub, random_arms(n - 1, rng), PsdRoute::regular);
      worst = std::min(worst, v.min_eigenvalue / v.scale);
    }
    rec.check("n=" + std::to_string(n) + " min eigenvalue / scale", worst, Relation::at_least, -cfg.psd_tol);
  }
}

// 2. Doubling inequality.
void doubling_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const int draws = 100;
  rec.input("n=3,4 draws=" + std::to_string(draws) + " lifted weights seed=" + std::to_string(cfg.seed));
  for (int n : {3, 4}) {
    std::mt19937_64 rng(stream_seed(cfg.seed, 200 + static_cast<std::uint64_t>(n)));
    double worst = kInf;
    for (int d = 0; d < draws; ++d) {
      const auto v = doubling_inequality_check(random_lifted(n, rng), PsdRoute::regular);
      worst = std::min(worst, v.verdict.min_eigenvalue / v.verdict.scale);
    }
    rec.check("n=" + std::to_string(n) + " min eigenvalue / scale", worst, Relation::at_least, -cfg.psd_tol);
  }
}

// 3. Scalarity of Delta_{K_n} and the family closed forms.
void scalarity_criterion(const SuiteConfig& cfg, Recorder& rec) {
  rec.input("scalarity n=2.." + std::to_string(cfg.scalarity_max_n) + "; families n=2..10");
  double off = 0.0, value = 0.0;
  for (int n = 2; n <= cfg.scalarity_max_n; ++n) {
    for (const auto& shape : partitions(n)) {
      const auto s = complete_graph_scalarity(shape);
      off = std::max(off, s.max_off_diagonal / std::max(1.0, s.diagonal_min));
      const double scale = std::max(1.0, std::abs(s.expected));
      value = std::max({value, std::abs(s.diagonal_min - s.expected) / scale,
                        std::abs(s.diagonal_max - s.expected) / scale});
    }
  }
  rec.check("max off-diagonal / diagonal", off, Relation::at_most, 1e-9);
  rec.check("max relative |diagonal - (C(n,2) - content sum)|", value, Relation::at_most, 1e-9);

  double lambda_err = 0.0;
  std::uint64_t dim_mismatch = 0, cases = 0;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (auto family : {CycleFamily::first, CycleFamily::second}) {
        const auto [lo, hi] = family_index_range(n, k, family);
        for (int i = lo; i <= hi; ++i) {
          const auto v = family_lambda_dim(n, k, i, family);
          lambda_err = std::max(lambda_err, std::abs(v.lambda_kn - lambda_kn(v.partition)));
          dim_mismatch += v.dim != hook_dim(v.partition);
          ++cases;
        }
      }
    }
  }
  rec.check("family lambda vs content route, max abs (" + std::to_string(cases) + " cases)", lambda_err,
            Relation::at_most, 1e-9);
  rec.check("family dim vs hook route, mismatches", static_cast<double>(dim_mismatch), Relation::at_most, 0.0);
}

// 4. Regular spectrum vs irrep assembly.
void assembly_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const int graphs = 20;
  rec.input("graphs=" + std::to_string(graphs) + " n=3..5 seed=" + std::to_string(cfg.seed));
  std::mt19937_64 rng(stream_seed(cfg.seed, 400));
  double worst = 0.0;
  for (int g = 0; g < graphs; ++g) {
    const auto w = random_weights(3 + g % 3, rng, 0.3, 0.1, 2.0, g % 4 != 3);
    worst = std::max(worst, max_abs_diff(regular_spectrum(delta_of_weights(w)),
                                         assembled_spectrum(all_irrep_spectra(w))));
  }
  rec.check("max sorted eigenvalue difference", worst, Relation::at_most, 1e-8);
}

// 5. Mixing numbers.
void mixing_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const LazyChain k3(complete_graph(3), cfg.tie_guard);
  rec.input("complete:3");
  rec.check("complete:3 lmix", static_cast<double>(k3.lmix().value_or(-1)), Relation::at_most, 2.0);
  rec.check("complete:3 lmix", static_cast<double>(k3.lmix().value_or(-1)), Relation::at_least, 2.0);
  rec.check("complete:3 tv_mix", static_cast<double>(k3.tv_mix().value_or(-1)), Relation::at_most, 1.0);
  rec.check("complete:3 tv_mix", static_cast<double>(k3.tv_mix().value_or(-1)), Relation::at_least, 1.0);
  rec.check("complete:3 |delta - 16/33|", std::abs(delta_factor(k3).delta - 16.0 / 33.0), Relation::at_most, 1e-12);

  double sandwich_low = kInf, sandwich_high = -kInf, delta_slack = kInf, route_gap = 0.0;
  double ratio_drop = 0.0, tv_rise = 0.0;
  std::string names;
  for (const auto& [name, w] : mixing_graphs(cfg.seed)) {
    names += name + ",";
    const LazyChain chain(w, cfg.tie_guard);
    const double lmix = static_cast<double>(*chain.lmix());
    const double mix = static_cast<double>(*chain.tv_mix());
    sandwich_low = std::min(sandwich_low, mix - lmix / 8);
    sandwich_high = std::max(sandwich_high, mix - lmix);
    const double delta = delta_factor(chain).delta;
    delta_slack = std::min(delta_slack, delta - 1.0 / (2 * lmix));
    route_gap = std::max(route_gap, std::abs(delta - delta_by_doubling(w, *chain.lmix()).delta) / delta);
    const auto mono = verify_monotonicity(chain, 2 * *chain.lmix());
    ratio_drop = std::max(ratio_drop, mono.worst_ratio_drop);
    tv_rise = std::max(tv_rise, mono.worst_tv_rise);
  }
  rec.input("graphs=" + names + " seed=" + std::to_string(cfg.seed) + " tie_guard=" + fmt(cfg.tie_guard));
  rec.check("min tv_mix - lmix/8", sandwich_low, Relation::at_least, 0.0);
  rec.check("max tv_mix - lmix", sandwich_high, Relation::at_most, 0.0);
  rec.check("min delta - 1/(2 lmix)", delta_slack, Relation::at_least, 0.0);
  rec.check("max relative gap between delta routes", route_gap, Relation::at_most, 1e-9);
  rec.check("largest drop of min p_t/pi over t <= 2 lmix", ratio_drop, Relation::at_most, 1e-12);
  rec.check("largest rise of TV over t <= 2 lmix", tv_rise, Relation::at_most, 1e-12);
}

// 6. Heat-kernel upper bounds.
void bounds_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const std::vector<std::string> must_be_regular{"cycle:4",     "cycle:6",    "cycle:8",    "hypercube:3",
                                                 "hypercube:4", "hamming2:2", "hamming2:3", "complete:3",
                                                 "complete:8"};
  double conn = kInf, reg = kInf;
  int regular_seen = 0, regular_missing = 0;
  std::string names;
  for (const auto& [name, w] : mixing_graphs(cfg.seed)) {
    names += name + ",";
    const LazyChain chain(w, cfg.tie_guard);
    const auto r = verify_probability_bounds(chain, w);
    conn = std::min(conn, r.connectivity_slack);
    if (r.regular_slack) {
      reg = std::min(reg, *r.regular_slack);
      ++regular_seen;
    }
    if (std::find(must_be_regular.begin(), must_be_regular.end(), name) != must_be_regular.end() && !r.regular)
      ++regular_missing;
  }
  rec.input("graphs=" + names + " t=1..lmix constant=30");
  rec.check("min 30/sqrt(t) w_i/min* w_ij - p_t(i,j)", conn, Relation::at_least, 0.0);
  rec.check("min 30/t^(1/4) - p_t(i,j) on " + std::to_string(regular_seen) + " regular graphs", reg,
            Relation::at_least, 0.0);
  rec.check("required regular graphs not detected as regular", regular_missing, Relation::at_most, 0.0);
}

// 7. Cycle formula, three routes.
void cycles_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const std::vector<double> grid{0.0, 0.1, 0.3, 0.7, 1.5, 3.0};
  std::vector<std::pair<std::string, WeightFunction>> small;
  for (const char* spec : {"complete:2", "complete:3", "complete:4", "complete:5", "path:4", "star:5", "cycle:5"})
    small.emplace_back(spec, load_graph(spec));
  std::mt19937_64 rng(stream_seed(cfg.seed, 700));
  for (int g = 0; g < 4; ++g)
    small.emplace_back("random#" + std::to_string(g), random_weights(3 + g % 3, rng, 0.3, 0.1, 2.0, g != 3));
  double brute = 0.0;
  for (const auto& [name, w] : small) {
    const auto spectra = all_irrep_spectra(w);
    for (double t : grid)
      for (int k = 1; k <= w.size(); ++k)
        brute = std::max(brute, std::abs(expected_cycles_spectral(spectra, k, t) - exact_cycles_bruteforce(w, k, t)));
  }
  rec.input("brute force: complete:2..5,path:4,star:5,cycle:5,4 random; t=0,0.1,0.3,0.7,1.5,3; all k");
  rec.check("spectral vs brute force, max abs", brute, Relation::at_most, 1e-8);

  const auto k3 = all_irrep_spectra(complete_graph(3));
  double closed = 0.0;
  for (double t : grid) {
    closed = std::max(closed, std::abs(expected_cycles_spectral(k3, 2, t) - 0.5 * (1 - std::exp(-6 * t))));
    closed = std::max(closed, std::abs(expected_cycles_spectral(k3, 3, t) - std::pow(1 - std::exp(-3 * t), 2) / 3));
  }
  rec.check("complete:3 closed forms, max abs", closed, Relation::at_most, 1e-10);

  double zero_sum = 0.0;
  for (int n = 2; n <= 10; ++n) {
    for (int k = 2; k <= n; ++k) {
      long long s = 0;
      for (const auto& term : cycle_coefficients(n, k).terms)
        s += term.coefficient * static_cast<long long>(hook_dim(term.partition));
      zero_sum = std::max(zero_sum, std::abs(static_cast<double>(s)));
    }
  }
  rec.check("max |sum a_rho dim rho|, k >= 2, n <= 10", zero_sum, Relation::at_most, 0.0);

  // hamming2 only has m^2 vertices, so n = 6 and 8 use complete graphs and
  // hamming2 uses m = 2, 3.
  const std::vector<std::string> mc_graphs{"complete:6", "complete:8", "hamming2:2", "hamming2:3"};
  const std::vector<double> mc_times{0.1, 0.5};
  double worst_z = 0.0;
  std::uint64_t stream = 0;
  for (const auto& spec : mc_graphs) {
    const auto w = load_graph(spec);
    const auto spectra = all_irrep_spectra(w);
    for (double t : mc_times) {
      for (int k = 1; k <= w.size(); ++k) {
        const auto mc = expected_cycles_mc(w, k, t, cfg.mc_samples, stream_seed(cfg.seed, 7000 + stream++));
        worst_z = std::max(worst_z, z_score(mc.estimate, mc.std_error, mc.samples,
                                            expected_cycles_spectral(spectra, k, t)));
      }
    }
  }
  rec.input("monte carlo: complete:6,complete:8,hamming2:2,hamming2:3; t=0.1,0.5; all k; samples=" +
            std::to_string(cfg.mc_samples) + " seed=" + std::to_string(cfg.seed));
  rec.check("spectral vs Monte Carlo, max |z|", worst_z, Relation::at_most, 4.0);
}

// 8. Aldous inequality.
void aldous_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const int graphs = 100;
  rec.input("graphs=" + std::to_string(graphs) + " n=4.." + std::to_string(cfg.aldous_max_n) +
            " seed=" + std::to_string(cfg.seed));
  const int span = cfg.aldous_max_n - 3;
  std::vector<double> margins(graphs);
  std::vector<WeightFunction> ws;
  std::mt19937_64 rng(stream_seed(cfg.seed, 800));
  for (int g = 0; g < graphs; ++g) ws.push_back(random_weights(4 + g % span, rng));
  parallel_for(ws.size(), [&](std::size_t g) { margins[g] = aldous_check(ws[g]).margin; });
  rec.check("min lambda_1(rho) - lambda_1([n-1,1])", *std::min_element(margins.begin(), margins.end()),
            Relation::at_least, -1e-9);
}

// 9. Interchange mixing comparison.
void imix_criterion(const SuiteConfig& cfg, Recorder& rec) {
  const int graphs = 20;
  rec.input("n=4 graphs=" + std::to_string(graphs) + " seed=" + std::to_string(cfg.seed) + " bisection tol=1e-6");
  const double kn = interchange_tv_mix_exact(complete_graph(4));
  std::mt19937_64 rng(stream_seed(cfg.seed, 900));
  double worst = -kInf;
  for (int g = 0; g < graphs; ++g) {
    const auto w = random_weights(4, rng);
    worst = std::max(worst, interchange_tv_mix_exact(w) - 4.0 / comparison_constant(w).a_star * kn);
  }
  rec.check("max imix(w) - (4/a*) imix(K_4)", worst, Relation::at_most, 1e-6);
}

// 10. Comparison constants.
void comparison_criterion(const SuiteConfig&, Recorder& rec) {
  double complete_err = 0.0;
  for (int n = 2; n <= 8; ++n) complete_err = std::max(complete_err, std::abs(comparison_constant(complete_graph(n)).a_star - 1));
  rec.input("complete:2..8; path:3");
  rec.check("max |a*(complete:n) - 1|, n <= 8", complete_err, Relation::at_most, 1e-12);
  rec.check("|a*(path:3) - 1/3|", std::abs(comparison_constant(load_graph("path:3")).a_star - 1.0 / 3), Relation::at_most,
            1e-9);

  const auto specs = default_empirical_graphs();
  std::string names;
  for (const auto& s : specs) names += s + ",";
  rec.input("empirical table: " + names);
  double smallest = kInf;
  for (const auto& row : empirical_constant_table(specs)) {
    if (!row.connected) continue;
    for (double v : {row.a_star, row.comparison_bound, row.empirical_c})
      smallest = std::min(smallest, std::isfinite(v) ? v : -kInf);
  }
  rec.check("smallest entry of the empirical table (connected rows)", smallest, Relation::above, 0.0);
}

// 11. QHF.
void qhf_criterion(const SuiteConfig& cfg, Recorder& rec) {
  double z0 = 0.0, m0 = 0.0, square_excess = -kInf;
  std::string names;
  for (const auto& spec : suite_graph_specs()) {
    names += spec + ",";
    const auto w = load_graph(spec);
    const int n = w.size();
    const auto mc = qhf_mc(w, 0.0, 64, cfg.seed);
    z0 = std::max(z0, std::abs(mc.z - std::ldexp(1.0, n)));
    m0 = std::max(m0, std::abs(mc.m_sq - n));
    if (n <= kMaxExactN) {
      const auto ex = qhf_exact(w, 0.0);
      z0 = std::max(z0, std::abs(ex.z - std::ldexp(1.0, n)));
      m0 = std::max(m0, std::abs(ex.m_sq - n));
    }
    const auto late = qhf_mc(w, 1.0, 2000, stream_seed(cfg.seed, 1100));
    square_excess = std::max(square_excess, static_cast<double>(late.max_square_weighted - n * n));
  }
  rec.input("t=0 on graphs=" + names);
  rec.check("max |Z(0) - 2^n|", z0, Relation::at_most, 0.0);
  rec.check("max |m^2(0) - n|", m0, Relation::at_most, 0.0);

  std::vector<std::pair<std::string, WeightFunction>> small;
  for (const char* spec : {"complete:4", "path:5", "star:5"}) small.emplace_back(spec, load_graph(spec));
  std::mt19937_64 rng(stream_seed(cfg.seed, 1101));
  small.emplace_back("random:4", random_weights(4, rng));
  small.emplace_back("random:5", random_weights(5, rng));
  double worst_z = 0.0;
  std::uint64_t stream = 0;
  for (const auto& [name, w] : small) {
    for (double t : {0.3, 1.0}) {
      const auto ex = qhf_exact(w, t);
      const auto mc = qhf_mc(w, t, cfg.mc_samples, stream_seed(cfg.seed, 11000 + stream++));
      worst_z = std::max({worst_z, z_score(mc.z, mc.z_std_error, mc.samples, ex.z),
                          z_score(mc.m_sq, mc.m_sq_std_error, mc.samples, ex.m_sq)});
      square_excess = std::max(square_excess, static_cast<double>(mc.max_square_weighted - w.size() * w.size()));
    }
  }
  rec.input("monte carlo: complete:4,path:5,star:5,random:4,random:5; t=0.3,1.0; samples=" +
            std::to_string(cfg.mc_samples) + " seed=" + std::to_string(cfg.seed));
  rec.check("Monte Carlo vs exact, max |z| over Z and m^2", worst_z, Relation::at_most, 4.0);
  rec.check("max over trajectories of sum k^2 alpha_k - n^2", square_excess, Relation::at_most, 0.0);
}

struct Criterion {
  const char* name;
  void (*run)(const SuiteConfig&, Recorder&);
};

constexpr Criterion kCriteria[kCriterionCount] = {
    {"octopus-psd", octopus_criterion},
    {"doubling-inequality", doubling_criterion},
    {"complete-graph-scalarity", scalarity_criterion},
    {"spectrum-assembly", assembly_criterion},
    {"mixing-numbers", mixing_criterion},
    {"probability-bounds", bounds_criterion},
    {"cycle-formula-routes", cycles_criterion},
    {"aldous-inequality", aldous_criterion},
    {"interchange-mixing-comparison", imix_criterion},
    {"comparison-constants", comparison_criterion},
    {"qhf", qhf_criterion},
};

}  // namespace

std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::at_most: return "<=";
    case Relation::at_least: return ">=";
    case Relation::above: return ">";
  }
  return "?";
}

SuiteConfig SuiteConfig::for_level(SuiteLevel level, std::uint64_t seed) {
  SuiteConfig c;
  c.level = level;
  c.seed = seed;
  if (level == SuiteLevel::extended) {
    c.mc_samples = 1000000;
    c.scalarity_max_n = 10;
    c.aldous_max_n = 9;
  }
  return c;
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string> suite_graph_specs() {
  return {"complete:2", "complete:3",  "complete:4",  "complete:5", "complete:6", "complete:8",
          "cycle:4",    "cycle:6",     "cycle:8",     "path:3",     "path:5",     "path:8",
          "star:4",     "star:7",      "hypercube:3", "hypercube:4", "hamming2:2", "hamming2:3",
          "regular-tree:3,2"};
}

std::vector<std::string> default_empirical_graphs() {
  return {"complete:4", "complete:6",  "complete:8", "cycle:6",    "cycle:8",         "path:4",  "path:6",
          "star:5",     "star:8",      "hypercube:2", "hypercube:3", "hamming2:2",   "hamming2:3",
          "regular-tree:3,2"};
}

std::vector<EmpiricalRow> empirical_constant_table(const std::vector<std::string>& specs) {
  std::vector<EmpiricalRow> rows(specs.size());
  parallel_for(specs.size(), [&](std::size_t i) {
    const auto family = parse_graph_spec(specs[i]);
    const auto w = build_family(family);
    if (w.size() > kMaxIrrepN) throw CapError(specs[i] + " exceeds the irrep cap n <= 10");
    const auto r = comparison_constant(w);
    EmpiricalRow& row = rows[i];
    row.graph = specs[i];
    row.n = w.size();
    row.a_star = r.a_star;
    row.connected = is_connected(w);
    row.comparison_bound = r.comparison_bound.value_or(0.0);
    row.empirical_c = r.empirical_c.value_or(0.0);
    if (family.kind == FamilyKind::hamming2) row.a_star_times_m = r.a_star * family.size;
  });
  return rows;
}

CheckRecord run_criterion(int id, const SuiteConfig& config) {
  if (id < 1 || id > kCriterionCount) throw ParameterError("criterion id must be in 1..11");
  const auto& c = kCriteria[id - 1];
  CheckRecord rec;
  rec.id = id;
  rec.name = c.name;
  const auto start = std::chrono::steady_clock::now();
  Recorder r;
  try {
    c.run(config, r);
    r.finish(rec);
  } catch (const std::exception& e) {
    r.finish(rec);
    rec.passed = false;
    rec.error = e.what();
  }
  rec.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

SuiteReport run_suite(const SuiteConfig& config) {
  SuiteReport report;
  report.config = config;
  report.checks.resize(kCriterionCount);
  const auto start = std::chrono::steady_clock::now();
  parallel_for(kCriterionCount, [&](std::size_t i) { report.checks[i] = run_criterion(static_cast<int>(i) + 1, config); });
  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace interchange
