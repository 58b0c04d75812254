#include "reports.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace interchange::cli {

namespace {

std::string csv_number(double x) {
  if (!std::isfinite(x)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

}  // namespace

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json to_json(const MixingReport& r) {
  Json j;
  j["lmix"] = optional_number(r.lmix);
  j["mix"] = optional_number(r.mix);
  j["delta"] = r.delta ? number(r.delta->delta) : Json(nullptr);
  j["epsilon"] = r.delta ? Json(r.delta->epsilon) : Json(nullptr);
  if (r.clauses) {
    j["clauses"] = {{"min_weight_ratio_sq", number(r.clauses->min_weight_ratio_sq)},
                    {"regular", r.clauses->regular},
                    {"inverse_two_lmix", number(r.clauses->inverse_two_lmix)}};
  } else {
    j["clauses"] = nullptr;
  }
  j["comparison_bound"] = optional_number(r.comparison_bound);
  return j;
}

Json to_json(const ComparisonReport& r) {
  Json j;
  j["a_star"] = number(r.a_star);
  j["argmin"] = r.argmin.to_string();
  j["aldous"] = r.aldous_holds;
  j["aldous_gap"] = number(r.aldous_gap);
  j["comparison_bound"] = optional_number(r.comparison_bound);
  j["empirical_c"] = optional_number(r.empirical_c);
  Json table = Json::array();
  for (const auto& row : r.table)
    table.push_back({{"partition", row.partition.to_string()},
                     {"dim", row.dim},
                     {"lambda_kn", number(row.lambda_kn)},
                     {"lambda_1", number(row.lambda_1)}});
  j["table"] = std::move(table);
  return j;
}

Json to_json(const McEstimate& e) {
  return {{"estimate", number(e.estimate)}, {"std_error", number(e.std_error)}, {"samples", e.samples}};
}

Json to_json(const QhfEstimate& e) {
  return {{"z", number(e.z)},
          {"z_std_error", number(e.z_std_error)},
          {"m_sq", number(e.m_sq)},
          {"m_sq_std_error", number(e.m_sq_std_error)},
          {"samples", e.samples},
          {"max_square_weighted", e.max_square_weighted}};
}

Json to_json(const CycleFormula& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms) terms.push_back({{"partition", t.partition.to_string()}, {"coefficient", t.coefficient}});
  return terms;
}

Json to_json(const SuiteReport& r, bool timing) {
  Json j;
  j["level"] = r.config.level == SuiteLevel::desk ? "desk" : "extended";
  j["seed"] = r.config.seed;
  j["passed"] = r.passed();
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json details = Json::array();
    for (const auto& d : c.details)
      details.push_back({{"name", d.name},
                         {"measured", number(d.measured)},
                         {"relation", relation_symbol(d.relation)},
                         {"threshold", number(d.threshold)},
                         {"passed", d.passed}});
    Json item;
    item["id"] = c.id;
    item["name"] = c.name;
    item["inputs"] = c.inputs;
    item["inputs_digest"] = c.inputs_digest;
    item["verdict"] = c.passed ? "pass" : "fail";
    item["measured"] = number(c.measured);
    item["relation"] = relation_symbol(c.relation);
    item["threshold"] = number(c.threshold);
    item["runtime_seconds"] = timing ? number(c.runtime_seconds) : Json(nullptr);
    item["error"] = c.error.empty() ? Json(nullptr) : Json(c.error);
    item["details"] = std::move(details);
    checks.push_back(std::move(item));
  }
  j["checks"] = std::move(checks);
  j["runtime_seconds"] = timing ? number(r.runtime_seconds) : Json(nullptr);
  return j;
}

Json to_json(const std::vector<EmpiricalRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row{{"graph", r.graph},
             {"n", r.n},
             {"connected", r.connected},
             {"a_star", number(r.a_star)},
             {"comparison_bound", number(r.comparison_bound)},
             {"empirical_c", number(r.empirical_c)}};
    row["a_star_times_m"] = r.a_star_times_m > 0.0 ? number(r.a_star_times_m) : Json(nullptr);
    out.push_back(std::move(row));
  }
  return out;
}

std::string comparison_csv(const ComparisonReport& r) {
  std::ostringstream out;
  out << "partition,dim,lambda_kn,lambda_1\n";
  for (const auto& row : r.table)
    out << csv_quote(row.partition.to_string()) << ',' << row.dim << ',' << csv_number(row.lambda_kn) << ','
        << csv_number(row.lambda_1) << '\n';
  return out.str();
}

std::string suite_csv(const SuiteReport& r, bool timing) {
  std::ostringstream out;
  out << "id,name,verdict,measured,relation,threshold,inputs_digest,runtime_seconds\n";
  for (const auto& c : r.checks)
    out << c.id << ',' << c.name << ',' << (c.passed ? "pass" : "fail") << ',' << csv_number(c.measured) << ','
        << relation_symbol(c.relation) << ',' << csv_number(c.threshold) << ',' << c.inputs_digest << ','
        << (timing ? csv_number(c.runtime_seconds) : "") << '\n';
  return out.str();
}

std::string empirical_csv(const std::vector<EmpiricalRow>& rows) {
  std::ostringstream out;
  out << "graph,n,connected,a_star,comparison_bound,empirical_c,a_star_times_m\n";
  for (const auto& r : rows)
    out << csv_quote(r.graph) << ',' << r.n << ',' << (r.connected ? "true" : "false") << ',' << csv_number(r.a_star)
        << ',' << csv_number(r.comparison_bound) << ',' << csv_number(r.empirical_c) << ','
        << (r.a_star_times_m > 0.0 ? csv_number(r.a_star_times_m) : "") << '\n';
  return out.str();
}

}  // namespace interchange::cli
