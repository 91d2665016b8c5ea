#pragma once

// JSON forms of the value types, built from their canonical strings.

#include "qcwreath/finite_oracle.hpp"
#include "qcwreath/wreath.hpp"

#include <json.hpp>

namespace qcwreath {

inline nlohmann::json to_json(const PruferElement& a) { return a.to_string(); }

/// [{"exponent": ..., "coefficient": ...}, ...] in ascending exponent order.
inline nlohmann::json to_json(const BaseFunction& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [b, a] : f.terms()) {
    terms.push_back({{"exponent", b.to_string()}, {"coefficient", a.to_string()}});
  }
  return terms;
}

inline nlohmann::json to_json(const WreathElement& a) {
  return {{"base", to_json(a.base())}, {"top", to_json(a.top())}};
}

inline nlohmann::json to_json(const FiniteWreathElement& a) {
  return {{"base", a.base()}, {"shift", a.shift()}};
}

}  // namespace qcwreath
