#pragma once

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ferrer/diagram.hpp"
#include "ferrer/ideal.hpp"

namespace ferrer::testing {

std::string fixture_path(std::string_view name);
nlohmann::json load_fixture(std::string_view name);
Partition load_partition(std::string_view name);

/// Reads products written with letter alphabets, e.g. "s_2t_1u_1v_1" or "c*e",
/// mapping each letter to a variable group and, for bare letters, index 1.
Monomial parse_lettered(std::string_view text, const std::map<char, Variable>& letters);

/// Letter -> group map for "s_i t_j ..." style names.
std::map<char, Variable> letter_groups(const nlohmann::json& groups);

}  // namespace ferrer::testing
