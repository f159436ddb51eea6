#include "fixtures.hpp"

#include <cctype>
#include <fstream>
#include <stdexcept>

namespace ferrer::testing {

std::string fixture_path(std::string_view name) {
  return std::string(FERRER_FIXTURES_DIR) + "/" + std::string(name);
}

nlohmann::json load_fixture(std::string_view name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + std::string(name));
  return nlohmann::json::parse(in);
}

Partition load_partition(std::string_view name) { return Partition::from_json(load_fixture(name)); }

Monomial parse_lettered(std::string_view text, const std::map<char, Variable>& letters) {
  std::vector<Monomial::Factor> factors;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto it = letters.find(c);
    if (it == letters.end()) throw std::runtime_error("unknown letter in " + std::string(text));
    Variable v = it->second;
    ++i;
    if (i < text.size() && text[i] == '_') {
      std::size_t j = ++i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      v.index = std::stoi(std::string(text.substr(i, j - i)));
      i = j;
    }
    factors.emplace_back(v, 1);
  }
  return Monomial(std::move(factors));
}

std::map<char, Variable> letter_groups(const nlohmann::json& groups) {
  std::map<char, Variable> out;
  for (const auto& [letter, group] : groups.items()) out[letter[0]] = Variable{group.get<int>(), 1};
  return out;
}

}  // namespace ferrer::testing
