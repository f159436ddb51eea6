#include "ferrer/ideal.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdint>
#include <map>

#include "ferrer/error.hpp"

namespace ferrer {

std::string to_string(const Variable& v) {
  return "x" + std::to_string(v.group) + "_" + std::to_string(v.index);
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorCode::MalformedInput, "bad integer in '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Variable parse_variable(std::string_view text) {
  const auto underscore = text.find('_');
  if (text.size() < 4 || text.front() != 'x' || underscore == std::string_view::npos) {
    throw Error(ErrorCode::MalformedInput, "bad variable '" + std::string(text) + "'");
  }
  Variable v{parse_int(text.substr(1, underscore - 1), text),
             parse_int(text.substr(underscore + 1), text)};
  if (v.group < 1 || v.index < 1) {
    throw Error(ErrorCode::MalformedInput, "bad variable '" + std::string(text) + "'");
  }
  return v;
}

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (const auto& [var, exp] : factors) {
    if (exp < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    if (exp == 0) continue;
    if (!factors_.empty() && factors_.back().first == var) {
      factors_.back().second += exp;
    } else {
      factors_.emplace_back(var, exp);
    }
  }
}

Monomial Monomial::product_of(std::span<const Variable> variables) {
  std::vector<Factor> factors;
  factors.reserve(variables.size());
  for (const auto& v : variables) factors.emplace_back(v, 1);
  return Monomial(std::move(factors));
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::is_squarefree() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.second == 1; });
}

int Monomial::exponent(const Variable& v) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                             [](const Factor& f, const Variable& x) { return f.first < x; });
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

std::vector<Variable> Monomial::support() const {
  std::vector<Variable> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) out.push_back(f.first);
  return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  auto it = other.factors_.begin();
  for (const auto& [var, exp] : factors_) {
    while (it != other.factors_.end() && it->first < var) ++it;
    if (it == other.factors_.end() || !(it->first == var) || it->second < exp) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw Error(ErrorCode::InvalidArgument,
                to_string(divisor) + " does not divide " + to_string(*this));
  }
  std::vector<Factor> out;
  for (const auto& [var, exp] : factors_) out.emplace_back(var, exp - divisor.exponent(var));
  return Monomial(std::move(out));
}

namespace {

template <typename Combine>
Monomial merge(const Monomial& a, const Monomial& b, Combine combine) {
  std::vector<Monomial::Factor> out;
  auto ia = a.factors().begin(), ea = a.factors().end();
  auto ib = b.factors().begin(), eb = b.factors().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      out.emplace_back(ia->first, combine(ia->second, 0));
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      out.emplace_back(ib->first, combine(0, ib->second));
      ++ib;
    } else {
      out.emplace_back(ia->first, combine(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return Monomial(std::move(out));
}

}  // namespace

Monomial lcm(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int x, int y) { return std::max(x, y); });
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int x, int y) { return std::min(x, y); });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  return merge(a, b, [](int x, int y) { return x + y; });
}

std::string to_string(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& [var, exp] : m.factors()) {
    if (!out.empty()) out += '*';
    out += to_string(var);
    if (exp != 1) out += "^" + std::to_string(exp);
  }
  return out;
}

Monomial parse_monomial(std::string_view text) {
  if (text == "1") return {};
  std::vector<Monomial::Factor> factors;
  while (!text.empty()) {
    const auto star = text.find('*');
    std::string_view token = text.substr(0, star);
    int exp = 1;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      exp = parse_int(token.substr(caret + 1), token);
      token = token.substr(0, caret);
    }
    factors.emplace_back(parse_variable(token), exp);
    if (star == std::string_view::npos) break;
    text.remove_prefix(star + 1);
    if (text.empty()) throw Error(ErrorCode::MalformedInput, "trailing '*' in monomial");
  }
  if (factors.empty()) throw Error(ErrorCode::MalformedInput, "empty monomial");
  return Monomial(std::move(factors));
}

MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators, std::vector<Variable> extra) {
  std::sort(generators.begin(), generators.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Lower degree first, so a divisor is always kept before its multiples.
  for (auto& g : generators) {
    const bool redundant = std::any_of(generators_.begin(), generators_.end(),
                                       [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) generators_.push_back(std::move(g));
  }
  std::sort(generators_.begin(), generators_.end());
  for (const auto& g : generators_) {
    for (const auto& f : g.factors()) extra.push_back(f.first);
  }
  std::sort(extra.begin(), extra.end());
  extra.erase(std::unique(extra.begin(), extra.end()), extra.end());
  ambient_ = std::move(extra);
}

MonomialIdeal MonomialIdeal::linear(std::span<const Variable> variables) {
  std::vector<Monomial> gens;
  gens.reserve(variables.size());
  for (const auto& v : variables) gens.push_back(Monomial({{v, 1}}));
  return MonomialIdeal(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const noexcept {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

nlohmann::json MonomialIdeal::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : generators_) out.push_back(to_string(g));
  return out;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  std::vector<Variable> ambient = a.ambient();
  ambient.insert(ambient.end(), b.ambient().begin(), b.ambient().end());
  return MonomialIdeal(std::move(gens), std::move(ambient));
}

nlohmann::json PrimeComponent::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& v : variables) out.push_back(to_string(v));
  return out;
}

Monomial box_monomial(const Box& box) {
  std::vector<Monomial::Factor> factors;
  factors.reserve(box.coords.size());
  for (std::size_t k = 0; k < box.coords.size(); ++k) {
    factors.push_back({Variable{static_cast<int>(k) + 1, box.coords[k]}, 1});
  }
  return Monomial(std::move(factors));
}

MonomialIdeal ferrer_ideal(const Partition& partition) {
  std::vector<Monomial> gens;
  for (const Box& b : boxes(partition)) gens.push_back(box_monomial(b));
  return MonomialIdeal(std::move(gens));
}

std::vector<DecompositionComponent> intersection_decomposition(const Partition& partition) {
  if (partition.is_leaf()) {
    throw Error(ErrorCode::DepthOne, "a linear ideal has no run decomposition");
  }
  const int p = partition.depth();
  const auto& kids = partition.children();
  const int m = static_cast<int>(kids.size());

  auto outer = [p](int count) {
    std::vector<Variable> vars;
    for (int i = 1; i <= count; ++i) vars.push_back(Variable{p, i});
    return vars;
  };

  std::vector<int> run_starts;  // 1-based index of the first child of each run
  for (int i = 1; i <= m; ++i) {
    if (i == 1 || !(kids[static_cast<std::size_t>(i - 1)] == kids[static_cast<std::size_t>(i - 2)])) {
      run_starts.push_back(i);
    }
  }

  std::vector<DecompositionComponent> out;
  out.push_back({outer(m), MonomialIdeal()});
  for (auto it = run_starts.rbegin(); it != run_starts.rend(); ++it) {
    const int start = *it;
    out.push_back({outer(start - 1), ferrer_ideal(kids[static_cast<std::size_t>(start - 1)])});
  }
  return out;
}

namespace {

using Mask = std::uint64_t;

void minimalize(std::vector<Mask>& sets) {
  std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Mask> kept;
  for (Mask s : sets) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [s](Mask k) { return (k & s) == k; });
    if (!redundant) kept.push_back(s);
  }
  sets = std::move(kept);
}

// All minimal transversals of `edges` (already minimalized, none empty).
// Branches on the vertices of a smallest edge; memoized on the residual edge set.
class TransversalSearch {
 public:
  const std::vector<Mask>& solve(const std::vector<Mask>& edges) {
    if (auto it = memo_.find(edges); it != memo_.end()) return it->second;
    std::vector<Mask> result;
    if (edges.empty()) {
      result.push_back(0);
    } else {
      const Mask pivot = *std::min_element(edges.begin(), edges.end(), [](Mask a, Mask b) {
        return std::popcount(a) < std::popcount(b);
      });
      for (Mask rest_bits = pivot; rest_bits != 0; rest_bits &= rest_bits - 1) {
        const Mask v = rest_bits & (~rest_bits + 1);
        std::vector<Mask> remaining;
        for (Mask e : edges) {
          if ((e & v) == 0) remaining.push_back(e);
        }
        for (Mask t : solve(remaining)) result.push_back(t | v);
      }
      minimalize(result);
    }
    return memo_.emplace(edges, std::move(result)).first->second;
  }

 private:
  std::map<std::vector<Mask>, std::vector<Mask>> memo_;
};

}  // namespace

std::vector<PrimeComponent> minimal_primes(const MonomialIdeal& ideal, const Limits& limits) {
  if (!ideal.is_squarefree()) {
    throw Error(ErrorCode::NotSquarefree, "minimal primes need a squarefree ideal");
  }
  std::vector<Variable> vars;
  for (const auto& g : ideal.generators()) {
    for (const auto& f : g.factors()) vars.push_back(f.first);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (static_cast<int>(vars.size()) > limits.max_prime_variables) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(vars.size()) + " variables exceed the prime-search limit " +
                    std::to_string(limits.max_prime_variables));
  }
  auto bit_of = [&](const Variable& v) {
    return Mask{1} << (std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };

  std::vector<Mask> edges;
  for (const auto& g : ideal.generators()) {
    Mask e = 0;
    for (const auto& f : g.factors()) e |= bit_of(f.first);
    if (e == 0) return {};  // unit ideal: no primes
    edges.push_back(e);
  }
  minimalize(edges);
  std::sort(edges.begin(), edges.end());

  TransversalSearch search;
  std::vector<PrimeComponent> out;
  for (Mask t : search.solve(edges)) {
    PrimeComponent prime;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if ((t >> i) & 1U) prime.variables.push_back(vars[i]);
    }
    out.push_back(std::move(prime));
  }
  std::sort(out.begin(), out.end());
  return out;
}

int height(const MonomialIdeal& ideal, const Limits& limits) {
  const auto primes = minimal_primes(ideal, limits);
  if (primes.empty()) return 0;
  std::size_t best = primes.front().variables.size();
  for (const auto& q : primes) best = std::min(best, q.variables.size());
  return static_cast<int>(best);
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(g.divided_by(gcd(g, m)));
  return MonomialIdeal(std::move(gens), ideal.ambient());
}

MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const Limits& limits) {
  std::vector<Monomial> gens;
  for (const auto& prime : minimal_primes(ideal, limits)) {
    gens.push_back(Monomial::product_of(prime.variables));
  }
  return MonomialIdeal(std::move(gens), ideal.ambient());
}

}  // namespace ferrer
