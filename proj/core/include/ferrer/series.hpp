#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "ferrer/ideal.hpp"
#include "ferrer/limits.hpp"

namespace ferrer {

/// Exact integer polynomial in t; coefficient i multiplies t^i. Trailing
/// zeros are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  /// (1 - t)^k.
  static IntPolynomial one_minus_t_pow(int k);
  /// c * t^k.
  static IntPolynomial term(const mpz_class& c, int k);

  const std::vector<mpz_class>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  mpz_class coefficient(int i) const;
  mpz_class at_one() const;

  /// t^k * P(t).
  IntPolynomial shifted(int k) const;
  /// P(1 - t).
  IntPolynomial compose_one_minus_t() const;
  /// P / (1 - t); throws InvalidArgument unless P(1) = 0.
  IntPolynomial divided_by_one_minus_t() const;
  /// P / t^k when t^k divides P.
  std::optional<IntPolynomial> divided_by_t_pow(int k) const;

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& c, const IntPolynomial& a);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// "1+2t−t²" with U+2212 minus signs and superscript exponents.
  std::string pretty() const;
  nlohmann::json to_json() const;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

/// numerator / (1 - t)^d, kept canonical: (1 - t) never divides a nonzero
/// numerator when d > 0. Equality of values is equality of representations.
class RationalSeries {
 public:
  RationalSeries() = default;
  RationalSeries(IntPolynomial numerator, int denom_exponent);

  const IntPolynomial& numerator() const noexcept { return numerator_; }
  int denom_exponent() const noexcept { return denom_exponent_; }

  /// The numerator over (1 - t)^exponent; exponent must not be below denom_exponent().
  IntPolynomial numerator_at(int exponent) const;
  /// Taylor coefficients of degrees 0..max_degree.
  std::vector<mpz_class> expand(int max_degree) const;

  /// "(1+2t−t²)/(1−t)²".
  std::string pretty() const;
  nlohmann::json to_json() const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;

 private:
  IntPolynomial numerator_;
  int denom_exponent_ = 0;
};

/// h(c,p)(t) = sum_{i<p} C(c+i-1, i) t^i.
IntPolynomial h_poly(int c, int p);

/// 1 - h(c,p)(1-t) t^c == h(p,c)(t) (1-t)^p, and h(c,p)(t)(1-t)^c == 1 mod t^p.
bool duality_identity_check(int c, int p);

/// [h(c,p) - t^p sum_i sigma_i (1-t)^{i-1}] / (1-t)^d, where sigma_i counts
/// the diagonal c + i. Requires sigma_i >= 0 and d >= |sigma|.
RationalSeries hilbert_series_linear(int c, int p, std::span<const std::int64_t> sigma, int d);

/// Series of S/I over the ambient variables of I: inclusion-exclusion over
/// generator subsets, or pivot splitting on a variable when there are too
/// many generators. Throws TooManyGenerators past both limits.
RationalSeries hilbert_series_monomial(const MonomialIdeal& ideal, const Limits& limits = {});

/// Recovers sigma from a series of the linear shape. `d` is the denominator
/// exponent of that shape and defaults to the canonical exponent of `series`.
/// Throws NotPLinearShape when t^p does not divide h(c,p) - numerator or a
/// coefficient comes out negative.
std::vector<std::int64_t> extract_s_vector(const RationalSeries& series, int c, int p,
                                           std::optional<int> d = std::nullopt);

struct DualSeries {
  RationalSeries quotient;  // S/I
  RationalSeries dual;      // S/I*
};

/// Both series for an ideal with p-linear resolution of height c in n variables.
DualSeries dual_series(int c, int p, std::span<const std::int64_t> sigma, int n);

/// Coefficients of the canonical numerator.
std::vector<mpz_class> h_vector(const RationalSeries& series);

/// B(t) = 1 - numerator at exponent n, so that H = (1 - B(t)) / (1 - t)^n.
IntPolynomial betti_polynomial(const RationalSeries& series, int n);

/// Integer for JSON: a number when it fits in 64 bits, a decimal string otherwise.
nlohmann::json json_integer(const mpz_class& value);

}  // namespace ferrer
