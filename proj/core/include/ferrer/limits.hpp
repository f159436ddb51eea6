#pragma once

#include <cstddef>

#include <nlohmann/json.hpp>

namespace ferrer {

/// Size limits that keep every computation desk-scale. The defaults can be
/// overridden with a JSON object in the FERRER_LIMITS environment variable,
/// e.g. FERRER_LIMITS='{"oracle_max_variables": 14}'.
struct Limits {
  int max_depth = 6;
  std::size_t max_boxes = 10000;
  int max_prime_variables = 30;
  int oracle_max_variables = 16;
  std::size_t oracle_max_generators = 60;
  std::size_t inclusion_exclusion_max_generators = 20;
  std::size_t splitting_max_generators = 4000;
  int max_hilbert_degree = 20;

  static Limits defaults() { return {}; }
  /// Defaults patched with FERRER_LIMITS; throws Error(MalformedInput) on bad JSON.
  static Limits from_env();
  static Limits from_json(const nlohmann::json& overrides);
  static Limits from_json(const nlohmann::json& overrides, Limits base);

  nlohmann::json to_json() const;
};

}  // namespace ferrer
