#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ferrer/diagram.hpp"
#include "ferrer/ideal.hpp"
#include "ferrer/limits.hpp"

namespace ferrer {

/// Exponent vector of a monomial in x_1..x_n.
using Exponents = std::vector<int>;

/// (a_i, a_{i-1}, ..., a_j) with value = C(a_i, i) + C(a_{i-1}, i-1) + ... + C(a_j, j)
/// and a_i > a_{i-1} > ... > a_j >= j >= 1. Empty for value 0.
std::vector<std::int64_t> macaulay_representation(std::int64_t value, int i);

/// value^<i> = sum C(a_k + 1, k + 1) over the i-th representation.
std::int64_t macaulay_bound(std::int64_t value, int i);

struct MacaulayViolation {
  int index = 0;           // the first k with h_k above the bound
  std::int64_t value = 0;  // h_k
  std::int64_t bound = 0;  // h_{k-1}^<k-1>

  /// "h_2 ≤ 3".
  std::string describe() const;
};

/// nullopt when h is an M-vector. Throws InvalidArgument unless h_0 = 1 and
/// every entry is nonnegative.
std::optional<MacaulayViolation> macaulay_violation(std::span<const std::int64_t> h);
inline bool is_m_vector(std::span<const std::int64_t> h) { return !macaulay_violation(h); }

/// a before b iff the last nonzero entry of a - b is negative (x_1 > ... > x_n).
bool revlex_precedes(const Exponents& a, const Exponents& b);

/// The first `count` monomials of the given degree in revlex order.
/// CountOutOfRange when count exceeds C(nvars + degree - 1, degree).
std::vector<Exponents> revlex_segment(int nvars, int degree, std::int64_t count);

struct Multicomplex {
  int nvars = 1;
  std::vector<Exponents> monomials;  // by degree, revlex within a degree

  /// Number of monomials of each degree 0..max.
  std::vector<std::int64_t> census() const;
  /// Every divisor of a member is a member.
  bool is_closed() const;
};

/// The union of revlex segments of sizes h_i in max(h_1, 1) variables.
/// Throws NotClosedUnderDivision if the union is not a multicomplex.
Multicomplex multicomplex_from_mvector(std::span<const std::int64_t> h);

/// Boxes (e_1 + 1, ..., e_n + 1) for the members of the multicomplex.
Partition diagram_from_multicomplex(const Multicomplex& gamma);

struct Realization {
  std::vector<std::int64_t> h;
  Partition diagram;
  MonomialIdeal ideal;
  MonomialIdeal dual;
  std::vector<mpz_class> dual_h_vector;
  bool verified = false;  // dual h-vector equals h
};

Realization realize_mvector(std::span<const std::int64_t> h, const Limits& limits = {});

}  // namespace ferrer
