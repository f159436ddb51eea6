#include "ferrer/macaulay.hpp"

#include <algorithm>
#include <set>

#include "ferrer/binomial.hpp"
#include "ferrer/error.hpp"
#include "ferrer/series.hpp"

namespace ferrer {

namespace {

constexpr std::int64_t kMaxEnumerated = 2'000'000;

// All exponent vectors of the given degree in n variables.
void enumerate(int n, int degree, Exponents& current, int var, std::vector<Exponents>& out) {
  if (var == n - 1) {
    current[static_cast<std::size_t>(var)] = degree;
    out.push_back(current);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current[static_cast<std::size_t>(var)] = e;
    enumerate(n, degree - e, current, var + 1, out);
  }
  current[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

std::vector<std::int64_t> macaulay_representation(std::int64_t value, int i) {
  if (value < 0 || i < 1) throw Error(ErrorCode::InvalidArgument, "need value >= 0 and i >= 1");
  std::vector<std::int64_t> rep;
  for (int k = i; k >= 1 && value > 0; --k) {
    std::int64_t a = k;
    while (binomial(a + 1, k) <= value) ++a;
    rep.push_back(a);
    value -= binomial(a, k);
  }
  return rep;
}

std::int64_t macaulay_bound(std::int64_t value, int i) {
  const auto rep = macaulay_representation(value, i);
  std::int64_t bound = 0;
  for (std::size_t t = 0; t < rep.size(); ++t) {
    const int k = i - static_cast<int>(t);
    bound += binomial(rep[t] + 1, k + 1);
  }
  return bound;
}

std::string MacaulayViolation::describe() const {
  return "h_" + std::to_string(index) + " ≤ " + std::to_string(bound);
}

std::optional<MacaulayViolation> macaulay_violation(std::span<const std::int64_t> h) {
  if (h.empty() || h[0] != 1) throw Error(ErrorCode::InvalidArgument, "h must start with 1");
  for (std::int64_t v : h) {
    if (v < 0) throw Error(ErrorCode::InvalidArgument, "h entries must be nonnegative");
  }
  for (std::size_t i = 1; i + 1 < h.size(); ++i) {
    const std::int64_t bound = macaulay_bound(h[i], static_cast<int>(i));
    if (h[i + 1] > bound) {
      return MacaulayViolation{static_cast<int>(i + 1), h[i + 1], bound};
    }
  }
  return std::nullopt;
}

bool revlex_precedes(const Exponents& a, const Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::vector<Exponents> revlex_segment(int nvars, int degree, std::int64_t count) {
  if (nvars < 1 || degree < 0) throw Error(ErrorCode::InvalidArgument, "need nvars >= 1, degree >= 0");
  const std::int64_t total = binomial(nvars + degree - 1, degree);
  if (count < 0 || count > total) {
    throw Error(ErrorCode::CountOutOfRange,
                std::to_string(count) + " monomials requested, " + std::to_string(total) +
                    " exist in degree " + std::to_string(degree));
  }
  if (total > kMaxEnumerated) {
    throw Error(ErrorCode::SizeLimitExceeded, "too many monomials to enumerate");
  }
  std::vector<Exponents> all;
  all.reserve(static_cast<std::size_t>(total));
  Exponents current(static_cast<std::size_t>(nvars), 0);
  enumerate(nvars, degree, current, 0, all);
  std::partial_sort(all.begin(), all.begin() + count, all.end(), revlex_precedes);
  all.resize(static_cast<std::size_t>(count));
  return all;
}

std::vector<std::int64_t> Multicomplex::census() const {
  std::vector<std::int64_t> out;
  for (const Exponents& m : monomials) {
    int degree = 0;
    for (int e : m) degree += e;
    if (static_cast<std::size_t>(degree) >= out.size()) out.resize(static_cast<std::size_t>(degree) + 1, 0);
    ++out[static_cast<std::size_t>(degree)];
  }
  return out;
}

bool Multicomplex::is_closed() const {
  const std::set<Exponents> members(monomials.begin(), monomials.end());
  if (!members.contains(Exponents(static_cast<std::size_t>(nvars), 0))) return false;
  for (const Exponents& m : monomials) {
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      Exponents lower = m;
      --lower[v];
      if (!members.contains(lower)) return false;
    }
  }
  return true;
}

Multicomplex multicomplex_from_mvector(std::span<const std::int64_t> h) {
  if (h.empty() || h[0] != 1) throw Error(ErrorCode::InvalidArgument, "h must start with 1");
  Multicomplex gamma;
  gamma.nvars = static_cast<int>(std::max<std::int64_t>(h.size() > 1 ? h[1] : 0, 1));
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto segment = revlex_segment(gamma.nvars, static_cast<int>(i), h[i]);
    gamma.monomials.insert(gamma.monomials.end(), segment.begin(), segment.end());
  }
  if (!gamma.is_closed()) {
    throw Error(ErrorCode::NotClosedUnderDivision, "revlex segments are not closed under division");
  }
  return gamma;
}

Partition diagram_from_multicomplex(const Multicomplex& gamma) {
  std::vector<Box> out;
  out.reserve(gamma.monomials.size());
  for (const Exponents& m : gamma.monomials) {
    Box box;
    for (int e : m) box.coords.push_back(e + 1);
    out.push_back(std::move(box));
  }
  return Partition::from_boxes(out, gamma.nvars);
}

Realization realize_mvector(std::span<const std::int64_t> h, const Limits& limits) {
  if (const auto violation = macaulay_violation(h)) {
    throw Error(ErrorCode::InvalidArgument, "not an M-vector: " + violation->describe());
  }
  const Multicomplex gamma = multicomplex_from_mvector(h);
  Partition diagram = diagram_from_multicomplex(gamma);
  MonomialIdeal ideal = ferrer_ideal(diagram);
  MonomialIdeal dual = alexander_dual(ideal, limits);
  std::vector<mpz_class> dual_h = h_vector(hilbert_series_monomial(dual, limits));

  std::vector<std::int64_t> trimmed(h.begin(), h.end());
  while (trimmed.size() > 1 && trimmed.back() == 0) trimmed.pop_back();
  bool verified = dual_h.size() == trimmed.size();
  for (std::size_t i = 0; verified && i < trimmed.size(); ++i) {
    verified = dual_h[i] == trimmed[i];
  }
  return Realization{std::vector<std::int64_t>(h.begin(), h.end()), std::move(diagram),
                     std::move(ideal), std::move(dual), std::move(dual_h), verified};
}

}  // namespace ferrer
