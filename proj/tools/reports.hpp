#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include <nlohmann/json.hpp>

#include "interchange/acceptance.hpp"
#include "interchange/cycles.hpp"
#include "interchange/irreps.hpp"
#include "interchange/lazy_chain.hpp"
#include "interchange/qhf.hpp"

namespace interchange::cli {

using Json = nlohmann::ordered_json;

// Non-finite doubles become null.
Json number(double x);
template <class T>
Json optional_number(const std::optional<T>& x) {
  if (!x) return Json(nullptr);
  if constexpr (std::is_integral_v<T>) return Json(*x);
  else return number(static_cast<double>(*x));
}

Json to_json(const MixingReport& r);
Json to_json(const ComparisonReport& r);
Json to_json(const McEstimate& e);
Json to_json(const QhfEstimate& e);
Json to_json(const CycleFormula& f);
Json to_json(const SuiteReport& r, bool timing);
Json to_json(const std::vector<EmpiricalRow>& rows);

std::string comparison_csv(const ComparisonReport& r);
std::string suite_csv(const SuiteReport& r, bool timing);
std::string empirical_csv(const std::vector<EmpiricalRow>& rows);

}  // namespace interchange::cli
