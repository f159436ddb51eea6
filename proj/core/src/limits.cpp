#include "ferrer/limits.hpp"

#include <cstdlib>
#include <string>

#include "ferrer/error.hpp"

namespace ferrer {

namespace {

template <typename T>
void patch(const nlohmann::json& j, const char* key, T& field) {
  auto it = j.find(key);
  if (it == j.end()) return;
  if (!it->is_number_integer() || it->template get<long long>() < 0) {
    throw Error(ErrorCode::MalformedInput,
                std::string("limit '") + key + "' must be a nonnegative integer");
  }
  field = it->template get<T>();
}

}  // namespace

Limits Limits::from_json(const nlohmann::json& overrides) { return from_json(overrides, Limits{}); }

Limits Limits::from_json(const nlohmann::json& overrides, Limits base) {
  if (!overrides.is_object()) {
    throw Error(ErrorCode::MalformedInput, "limits must be a JSON object");
  }
  static const char* const known[] = {
      "max_depth", "max_boxes", "max_prime_variables", "oracle_max_variables",
      "oracle_max_generators", "inclusion_exclusion_max_generators",
      "splitting_max_generators", "max_hilbert_degree"};
  for (const auto& [key, value] : overrides.items()) {
    bool found = false;
    for (const char* k : known) found = found || key == k;
    if (!found) throw Error(ErrorCode::MalformedInput, "unknown limit '" + key + "'");
  }
  patch(overrides, "max_depth", base.max_depth);
  patch(overrides, "max_boxes", base.max_boxes);
  patch(overrides, "max_prime_variables", base.max_prime_variables);
  patch(overrides, "oracle_max_variables", base.oracle_max_variables);
  patch(overrides, "oracle_max_generators", base.oracle_max_generators);
  patch(overrides, "inclusion_exclusion_max_generators",
        base.inclusion_exclusion_max_generators);
  patch(overrides, "splitting_max_generators", base.splitting_max_generators);
  patch(overrides, "max_hilbert_degree", base.max_hilbert_degree);
  if (base.max_prime_variables > 64) {
    throw Error(ErrorCode::MalformedInput, "max_prime_variables cannot exceed 64");
  }
  if (base.oracle_max_variables > 24) {
    throw Error(ErrorCode::MalformedInput, "oracle_max_variables cannot exceed 24");
  }
  return base;
}

Limits Limits::from_env() {
  const char* raw = std::getenv("FERRER_LIMITS");
  if (raw == nullptr || *raw == '\0') return {};
  nlohmann::json parsed = nlohmann::json::parse(raw, nullptr, false);
  if (parsed.is_discarded()) {
    throw Error(ErrorCode::MalformedInput, "FERRER_LIMITS is not valid JSON");
  }
  return from_json(parsed);
}

nlohmann::json Limits::to_json() const {
  return {{"max_depth", max_depth},
          {"max_boxes", max_boxes},
          {"max_prime_variables", max_prime_variables},
          {"oracle_max_variables", oracle_max_variables},
          {"oracle_max_generators", oracle_max_generators},
          {"inclusion_exclusion_max_generators", inclusion_exclusion_max_generators},
          {"splitting_max_generators", splitting_max_generators},
          {"max_hilbert_degree", max_hilbert_degree}};
}

}  // namespace ferrer
