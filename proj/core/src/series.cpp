#include "ferrer/series.hpp"

#include <algorithm>
#include <climits>

#include "ferrer/binomial.hpp"
#include "ferrer/error.hpp"

namespace ferrer {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients) {
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::one_minus_t_pow(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative power of (1-t)");
  std::vector<mpz_class> c(static_cast<std::size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    c[static_cast<std::size_t>(i)] = binomial_big(k, i);
    if (i % 2 == 1) c[static_cast<std::size_t>(i)] = -c[static_cast<std::size_t>(i)];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::term(const mpz_class& c, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative power of t");
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(k) + 1);
  coeffs.back() = c;
  return IntPolynomial(std::move(coeffs));
}

mpz_class IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPolynomial::at_one() const {
  mpz_class sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<mpz_class> c(static_cast<std::size_t>(k), 0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::compose_one_minus_t() const {
  // Horner in u = 1 - t.
  IntPolynomial result;
  const IntPolynomial u{1, -1};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    result = result * u;
    result += IntPolynomial({*it});
  }
  return result;
}

IntPolynomial IntPolynomial::divided_by_one_minus_t() const {
  if (at_one() != 0) {
    throw Error(ErrorCode::InvalidArgument, "(1-t) does not divide " + pretty());
  }
  if (is_zero()) return {};
  // P = (1 - t) Q  <=>  q_i = sum_{k <= i} p_k.
  std::vector<mpz_class> q(coeffs_.size() - 1);
  mpz_class running = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    running += coeffs_[i];
    q[i] = running;
  }
  return IntPolynomial(std::move(q));
}

std::optional<IntPolynomial> IntPolynomial::divided_by_t_pow(int k) const {
  for (int i = 0; i < k && i <= degree(); ++i) {
    if (coeffs_[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  }
  if (k > degree()) return IntPolynomial();
  return IntPolynomial(std::vector<mpz_class>(coeffs_.begin() + k, coeffs_.end()));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a) {
  std::vector<mpz_class> c = a.coeffs_;
  for (auto& x : c) x *= s;
  return IntPolynomial(std::move(c));
}

namespace {

std::string superscript(int n) {
  static const char* const digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s = std::to_string(n), out;
  for (char ch : s) out += digits[ch - '0'];
  return out;
}

constexpr const char* kMinus = "−";

}  // namespace

std::string IntPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class magnitude = abs(c);
    if (negative) {
      out += kMinus;
    } else if (!out.empty()) {
      out += "+";
    }
    if (i == 0 || magnitude != 1) out += magnitude.get_str();
    if (i >= 1) out += "t";
    if (i >= 2) out += superscript(i);
  }
  return out;
}

nlohmann::json json_integer(const mpz_class& value) {
  if (value.fits_slong_p()) return static_cast<long long>(value.get_si());
  return value.get_str();
}

nlohmann::json IntPolynomial::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : coeffs_) out.push_back(json_integer(c));
  return out;
}

RationalSeries::RationalSeries(IntPolynomial numerator, int denom_exponent)
    : numerator_(std::move(numerator)), denom_exponent_(denom_exponent) {
  if (denom_exponent_ < 0) {
    throw Error(ErrorCode::InvalidArgument, "negative denominator exponent");
  }
  if (numerator_.is_zero()) {
    denom_exponent_ = 0;
    return;
  }
  while (denom_exponent_ > 0 && numerator_.at_one() == 0) {
    numerator_ = numerator_.divided_by_one_minus_t();
    --denom_exponent_;
  }
}

IntPolynomial RationalSeries::numerator_at(int exponent) const {
  if (exponent < denom_exponent_) {
    throw Error(ErrorCode::InvalidArgument,
                "series has denominator exponent " + std::to_string(denom_exponent_) +
                    ", cannot rewrite at " + std::to_string(exponent));
  }
  return numerator_ * IntPolynomial::one_minus_t_pow(exponent - denom_exponent_);
}

std::vector<mpz_class> RationalSeries::expand(int max_degree) const {
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)), 0);
  const int d = denom_exponent_;
  for (int k = 0; k <= max_degree; ++k) {
    mpz_class sum = 0;
    for (int i = 0; i <= std::min(k, numerator_.degree()); ++i) {
      // Coefficient of t^(k-i) in (1-t)^{-d} is C(k-i+d-1, d-1), or [k == i] when d = 0.
      const mpz_class weight = d == 0 ? mpz_class(k == i ? 1 : 0) : binomial_big(k - i + d - 1, d - 1);
      sum += numerator_.coefficient(i) * weight;
    }
    out[static_cast<std::size_t>(k)] = sum;
  }
  return out;
}

std::string RationalSeries::pretty() const {
  const std::string num = numerator_.pretty();
  if (denom_exponent_ == 0) return num;
  int terms = 0;
  for (const auto& c : numerator_.coefficients()) terms += c != 0;
  std::string out = terms > 1 ? "(" + num + ")" : num;
  out += "/(1";
  out += kMinus;
  out += "t)";
  if (denom_exponent_ > 1) out += superscript(denom_exponent_);
  return out;
}

nlohmann::json RationalSeries::to_json() const {
  return {{"numerator", numerator_.to_json()}, {"denom_exponent", denom_exponent_}};
}

IntPolynomial h_poly(int c, int p) {
  if (c < 1 || p < 1) throw Error(ErrorCode::InvalidArgument, "h(c,p) needs c, p >= 1");
  std::vector<mpz_class> coeffs;
  for (int i = 0; i < p; ++i) coeffs.push_back(binomial_big(c + i - 1, i));
  return IntPolynomial(std::move(coeffs));
}

bool duality_identity_check(int c, int p) {
  const IntPolynomial lhs =
      IntPolynomial{1} - h_poly(c, p).compose_one_minus_t().shifted(c);
  const IntPolynomial rhs = h_poly(p, c) * IntPolynomial::one_minus_t_pow(p);
  if (!(lhs == rhs)) return false;
  const IntPolynomial congruence = h_poly(c, p) * IntPolynomial::one_minus_t_pow(c);
  if (congruence.coefficient(0) != 1) return false;
  for (int i = 1; i < p; ++i) {
    if (congruence.coefficient(i) != 0) return false;
  }
  return true;
}

namespace {

IntPolynomial sigma_in_one_minus_t(std::span<const std::int64_t> sigma) {
  IntPolynomial out;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative diagonal count");
    out += mpz_class(static_cast<long>(sigma[i])) *
           IntPolynomial::one_minus_t_pow(static_cast<int>(i));
  }
  return out;
}

IntPolynomial sigma_in_t(std::span<const std::int64_t> sigma) {
  std::vector<mpz_class> coeffs;
  for (auto s : sigma) {
    if (s < 0) throw Error(ErrorCode::InvalidArgument, "negative diagonal count");
    coeffs.emplace_back(static_cast<long>(s));
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace

RationalSeries hilbert_series_linear(int c, int p, std::span<const std::int64_t> sigma, int d) {
  if (d < static_cast<int>(sigma.size())) {
    throw Error(ErrorCode::InvalidArgument, "denominator exponent shorter than sigma");
  }
  return RationalSeries(h_poly(c, p) - sigma_in_one_minus_t(sigma).shifted(p), d);
}

namespace {

using Exponents = std::vector<int>;

// Dense exponent vectors over the ambient variables of `ideal`.
std::vector<Exponents> dense_generators(const MonomialIdeal& ideal) {
  const auto& vars = ideal.ambient();
  std::vector<Exponents> out;
  for (const auto& g : ideal.generators()) {
    Exponents e(vars.size(), 0);
    for (const auto& [v, exp] : g.factors()) {
      e[static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin())] = exp;
    }
    out.push_back(std::move(e));
  }
  return out;
}

class InclusionExclusion {
 public:
  explicit InclusionExclusion(const std::vector<Exponents>& gens) : gens_(gens) {
    std::size_t n = gens.empty() ? 0 : gens.front().size();
    current_.assign(n, 0);
  }

  IntPolynomial run() {
    coeffs_.assign(1, 0);
    coeffs_[0] = 1;  // the empty subset
    visit(0, 0, -1);
    std::vector<mpz_class> c;
    for (auto v : coeffs_) c.emplace_back(static_cast<long>(v));
    return IntPolynomial(std::move(c));
  }

 private:
  void visit(std::size_t first, int degree, int sign) {
    for (std::size_t j = first; j < gens_.size(); ++j) {
      std::vector<std::pair<std::size_t, int>> undo;
      int next = degree;
      for (std::size_t v = 0; v < current_.size(); ++v) {
        if (gens_[j][v] > current_[v]) {
          undo.emplace_back(v, current_[v]);
          next += gens_[j][v] - current_[v];
          current_[v] = gens_[j][v];
        }
      }
      if (static_cast<std::size_t>(next) >= coeffs_.size()) coeffs_.resize(static_cast<std::size_t>(next) + 1, 0);
      coeffs_[static_cast<std::size_t>(next)] += sign;
      visit(j + 1, next, -sign);
      for (const auto& [v, old] : undo) current_[v] = old;
    }
  }

  const std::vector<Exponents>& gens_;
  Exponents current_;
  std::vector<long long> coeffs_;
};

void minimalize(std::vector<Exponents>& gens) {
  auto divides = [](const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] > b[i]) return false;
    }
    return true;
  };
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Exponents> kept;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
      redundant = j != i && divides(gens[j], gens[i]) && !(gens[j] == gens[i]);
    }
    if (!redundant) kept.push_back(gens[i]);
  }
  gens = std::move(kept);
}

// K(I) with H(S/I) = K(I) / (1-t)^n, via K(I) = K(I + (x)) + t K(I : x).
IntPolynomial split_numerator(std::vector<Exponents> gens) {
  minimalize(gens);
  if (gens.empty()) return IntPolynomial{1};
  const std::size_t n = gens.front().size();
  for (const auto& g : gens) {
    if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) return {};
  }
  std::size_t pivot = n;
  int best = 1;
  for (std::size_t v = 0; v < n; ++v) {
    int uses = 0;
    for (const auto& g : gens) uses += g[v] > 0;
    if (uses > best) {
      best = uses;
      pivot = v;
    }
  }
  if (pivot == n) {
    // Pairwise coprime generators form a regular sequence.
    IntPolynomial out{1};
    for (const auto& g : gens) {
      int deg = 0;
      for (int e : g) deg += e;
      out = out * (IntPolynomial{1} - IntPolynomial::term(1, deg));
    }
    return out;
  }

  std::vector<Exponents> with_pivot;
  Exponents x(n, 0);
  x[pivot] = 1;
  with_pivot.push_back(x);
  for (const auto& g : gens) {
    if (g[pivot] == 0) with_pivot.push_back(g);
  }
  std::vector<Exponents> colon = gens;
  for (auto& g : colon) {
    if (g[pivot] > 0) --g[pivot];
  }
  return split_numerator(std::move(with_pivot)) + split_numerator(std::move(colon)).shifted(1);
}

}  // namespace

RationalSeries hilbert_series_monomial(const MonomialIdeal& ideal, const Limits& limits) {
  const int n = static_cast<int>(ideal.ambient().size());
  const auto gens = dense_generators(ideal);
  if (gens.size() <= limits.inclusion_exclusion_max_generators) {
    return RationalSeries(InclusionExclusion(gens).run(), n);
  }
  if (gens.size() <= limits.splitting_max_generators) {
    return RationalSeries(split_numerator(gens), n);
  }
  throw Error(ErrorCode::TooManyGenerators,
              std::to_string(gens.size()) + " generators exceed both series strategies");
}

std::vector<std::int64_t> extract_s_vector(const RationalSeries& series, int c, int p,
                                           std::optional<int> d) {
  const int exponent = d.value_or(series.denom_exponent());
  if (exponent < series.denom_exponent()) {
    throw Error(ErrorCode::NotPLinearShape,
                "series cannot be written over (1-t)^" + std::to_string(exponent));
  }
  const IntPolynomial gap = h_poly(c, p) - series.numerator_at(exponent);
  const auto quotient = gap.divided_by_t_pow(p);
  if (!quotient) {
    throw Error(ErrorCode::NotPLinearShape, "t^" + std::to_string(p) + " does not divide " +
                                                gap.pretty());
  }
  // sum_i sigma_i (1-t)^{i-1} = Q(t)  <=>  sum_i sigma_i u^{i-1} = Q(1-u).
  const IntPolynomial in_u = quotient->compose_one_minus_t();
  if (in_u.degree() + 1 > exponent) {
    throw Error(ErrorCode::NotPLinearShape, "more diagonal counts than the dimension allows");
  }
  std::vector<std::int64_t> sigma;
  for (const auto& coeff : in_u.coefficients()) {
    if (coeff < 0) throw Error(ErrorCode::NotPLinearShape, "negative diagonal count");
    if (!coeff.fits_slong_p()) throw Error(ErrorCode::SizeLimitExceeded, "diagonal count overflow");
    sigma.push_back(coeff.get_si());
  }
  return sigma;
}

DualSeries dual_series(int c, int p, std::span<const std::int64_t> sigma, int n) {
  if (n < c || n < p) throw Error(ErrorCode::InvalidArgument, "n must be at least c and p");
  DualSeries out;
  out.quotient = hilbert_series_linear(c, p, sigma, n - c);
  out.dual = RationalSeries(h_poly(p, c) + sigma_in_t(sigma).shifted(c), n - p);
  return out;
}

std::vector<mpz_class> h_vector(const RationalSeries& series) {
  return series.numerator().coefficients();
}

IntPolynomial betti_polynomial(const RationalSeries& series, int n) {
  return IntPolynomial{1} - series.numerator_at(n);
}

}  // namespace ferrer
