#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ferrer/diagram.hpp"
#include "ferrer/limits.hpp"

namespace ferrer {

/// The variable x^(group)_index. Ordered by group descending, then index
/// ascending, which is the canonical printing order.
struct Variable {
  int group = 1;
  int index = 1;

  friend bool operator==(const Variable&, const Variable&) = default;
  friend std::strong_ordering operator<=>(const Variable& a, const Variable& b) {
    if (a.group != b.group) return b.group <=> a.group;
    return a.index <=> b.index;
  }
};

/// "x<group>_<index>", e.g. x3_2.
std::string to_string(const Variable& v);
Variable parse_variable(std::string_view text);

class Monomial {
 public:
  using Factor = std::pair<Variable, int>;

  /// The unit monomial 1.
  Monomial() = default;
  /// Merges repeated variables and drops zero exponents; negative exponents throw.
  explicit Monomial(std::vector<Factor> factors);
  static Monomial product_of(std::span<const Variable> variables);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  int degree() const noexcept;
  bool is_unit() const noexcept { return factors_.empty(); }
  bool is_squarefree() const noexcept;
  int exponent(const Variable& v) const noexcept;
  std::vector<Variable> support() const;

  bool divides(const Monomial& other) const noexcept;
  /// this / divisor; throws InvalidArgument unless divisor divides this.
  Monomial divided_by(const Monomial& divisor) const;

  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend Monomial gcd(const Monomial& a, const Monomial& b);
  friend Monomial operator*(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;  // sorted by Variable, exponents > 0
};

/// Canonical factor string, e.g. "x3_2*x2_1*x1_4"; exponents as "^k"; "1" for the unit.
std::string to_string(const Monomial& m);
Monomial parse_monomial(std::string_view text);

/// A monomial ideal held by its minimal generators in canonical order.
class MonomialIdeal {
 public:
  /// The zero ideal.
  MonomialIdeal() = default;
  /// Minimalizes `generators`; the ambient set is their support plus `extra`.
  explicit MonomialIdeal(std::vector<Monomial> generators, std::vector<Variable> extra = {});
  static MonomialIdeal linear(std::span<const Variable> variables);

  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  const std::vector<Variable>& ambient() const noexcept { return ambient_; }
  std::size_t size() const noexcept { return generators_.size(); }
  bool is_zero() const noexcept { return generators_.empty(); }
  bool is_squarefree() const noexcept;
  bool contains(const Monomial& m) const noexcept;

  nlohmann::json to_json() const;

  /// Ideal equality: same minimal generators. The ambient set is ignored.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.generators_ == b.generators_;
  }

 private:
  std::vector<Monomial> generators_;
  std::vector<Variable> ambient_;
};

/// I + J.
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);

struct PrimeComponent {
  std::vector<Variable> variables;  // sorted

  MonomialIdeal ideal() const { return MonomialIdeal::linear(variables); }
  nlohmann::json to_json() const;

  friend bool operator==(const PrimeComponent&, const PrimeComponent&) = default;
  friend auto operator<=>(const PrimeComponent&, const PrimeComponent&) = default;
};

/// x^(1)_{a_1} ... x^(p)_{a_p}.
Monomial box_monomial(const Box& box);

/// One squarefree degree-p generator per box.
MonomialIdeal ferrer_ideal(const Partition& partition);

/// A component (linear part, tail) standing for the ideal (linear, tail).
struct DecompositionComponent {
  std::vector<Variable> linear;
  MonomialIdeal tail;

  MonomialIdeal ideal() const { return sum(MonomialIdeal::linear(linear), tail); }
};

/// Q_1, ..., Q_l built from the maximal runs of equal consecutive children:
/// Q_1 is generated by all outer variables x^(p)_1..x^(p)_m, and the run
/// starting at child r contributes (x^(p)_1, ..., x^(p)_{r-1}, I_{lambda_r}).
/// The intersection of the components is ferrer_ideal(partition). DepthOne for p = 1.
std::vector<DecompositionComponent> intersection_decomposition(const Partition& partition);

/// Inclusion-minimal variable sets meeting every generator, in canonical order.
/// Throws NotSquarefree, or SizeLimitExceeded past limits.max_prime_variables.
std::vector<PrimeComponent> minimal_primes(const MonomialIdeal& ideal, const Limits& limits = {});

/// Smallest size of a minimal prime (the height). Zero for the zero ideal.
int height(const MonomialIdeal& ideal, const Limits& limits = {});

/// I : m, generated by g / gcd(g, m).
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& m);

/// Squarefree Alexander dual: one generator per minimal prime.
MonomialIdeal alexander_dual(const MonomialIdeal& ideal, const Limits& limits = {});

}  // namespace ferrer
