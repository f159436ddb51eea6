#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <set>

#include "ferrer/binomial.hpp"
#include "ferrer/error.hpp"
#include "ferrer/macaulay.hpp"
#include "ferrer/series.hpp"

using namespace ferrer;
using nlohmann::json;

namespace {

using V = std::vector<std::int64_t>;

// All degree-d exponent vectors in n variables, sorted with a plain
// comparison written out against the revlex definition.
std::vector<Exponents> all_monomials(int n, int d) {
  std::vector<Exponents> out;
  Exponents e(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int var, int left) -> void {
    if (var == n - 1) {
      e[static_cast<std::size_t>(var)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(var)] = k;
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  return out;
}

std::int64_t representation_value(const V& rep, int i) {
  std::int64_t sum = 0;
  for (std::size_t k = 0; k < rep.size(); ++k) sum += binomial(rep[k], i - static_cast<int>(k));
  return sum;
}

ErrorCode code_of_multicomplex(const V& h) {
  try {
    multicomplex_from_mvector(h);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("Macaulay representations") {
  CHECK(macaulay_representation(5, 2) == V{3, 2});
  CHECK(macaulay_representation(0, 3).empty());
  CHECK(macaulay_representation(1, 1) == V{1});
  CHECK(macaulay_bound(5, 2) == 7);
  CHECK(macaulay_bound(2, 1) == 3);
  CHECK(macaulay_bound(0, 4) == 0);
  for (int i = 1; i <= 6; ++i) {
    for (std::int64_t v = 1; v <= 300; ++v) {
      const V rep = macaulay_representation(v, i);
      CHECK(representation_value(rep, i) == v);
      for (std::size_t k = 0; k + 1 < rep.size(); ++k) CHECK(rep[k] > rep[k + 1]);
      CHECK(rep.back() >= i - static_cast<int>(rep.size()) + 1);
    }
  }
}

TEST_CASE("M-vector checks") {
  CHECK(is_m_vector(V{1, 4, 3, 4, 1}));
  CHECK(is_m_vector(V{1}));
  CHECK(is_m_vector(V{1, 3, 6, 10}));
  const auto v = macaulay_violation(V{1, 2, 4});
  REQUIRE(v);
  CHECK(v->index == 2);
  CHECK(v->value == 4);
  CHECK(v->bound == 3);
  CHECK(v->describe() == "h_2 ≤ 3");
  CHECK_FALSE(is_m_vector(V{1, 0, 1}));
  CHECK_THROWS_AS((macaulay_violation(V{2, 1})), Error);
  CHECK_THROWS_AS((macaulay_violation(V{1, -1})), Error);
}

TEST_CASE("revlex order and segments") {
  CHECK(revlex_precedes({2, 0, 0}, {1, 1, 0}));
  CHECK(revlex_precedes({0, 2, 0}, {1, 0, 1}));
  CHECK_FALSE(revlex_precedes({1, 1}, {1, 1}));
  CHECK(revlex_segment(4, 2, 3) ==
        std::vector<Exponents>{{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 2, 0, 0}});
  CHECK(revlex_segment(2, 3, 4) == std::vector<Exponents>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
  CHECK(revlex_segment(3, 0, 1) == std::vector<Exponents>{{0, 0, 0}});
  CHECK_THROWS_AS(revlex_segment(2, 3, 5), Error);

  for (int n = 1; n <= 4; ++n) {
    for (int d = 0; d <= 4; ++d) {
      const auto all = all_monomials(n, d);
      CHECK(static_cast<std::int64_t>(all.size()) == binomial(n + d - 1, d));
      for (std::size_t count = 0; count <= all.size(); ++count) {
        const auto seg = revlex_segment(n, d, static_cast<std::int64_t>(count));
        CHECK(seg == std::vector<Exponents>(all.begin(), all.begin() + static_cast<long>(count)));
      }
    }
  }
}

TEST_CASE("multicomplexes from M-vectors") {
  const Multicomplex g = multicomplex_from_mvector(V{1, 4, 3, 4, 1});
  CHECK(g.nvars == 4);
  CHECK(g.census() == V{1, 4, 3, 4, 1});
  CHECK(g.is_closed());
  const std::set<Exponents> members(g.monomials.begin(), g.monomials.end());
  CHECK(members.contains(Exponents{0, 3, 0, 0}));
  CHECK(members.contains(Exponents{4, 0, 0, 0}));
  CHECK_FALSE(members.contains(Exponents{0, 0, 2, 0}));

  CHECK(multicomplex_from_mvector(V{1}).nvars == 1);
  CHECK(code_of_multicomplex(V{1, 3, 1, 2}) == ErrorCode::NotClosedUnderDivision);
  CHECK(code_of_multicomplex(V{1, 2, 4}) == ErrorCode::CountOutOfRange);
  CHECK(code_of_multicomplex(V{1, 1, 2}) == ErrorCode::CountOutOfRange);
}

TEST_CASE("diagrams from multicomplexes") {
  const Multicomplex g = multicomplex_from_mvector(V{1, 4, 3, 4, 1});
  const Partition p = diagram_from_multicomplex(g);
  CHECK(p.depth() == 4);
  CHECK(p.box_count() == 13);
  CHECK(p.to_json() == json::parse("[[[5,3,2,1],[1]],[[1]]]"));
  CHECK(diagram_from_multicomplex(multicomplex_from_mvector(V{1})).to_json() == json(1));
  CHECK(diagram_from_multicomplex(multicomplex_from_mvector(V{1, 1})).to_json() == json(2));
}

TEST_CASE("realizations") {
  const Realization r = realize_mvector(V{1, 4, 3, 4, 1});
  CHECK(r.verified);
  CHECK(r.ideal.size() == 13);
  CHECK(r.dual.size() == 12);
  CHECK(r.dual_h_vector == std::vector<mpz_class>{1, 4, 3, 4, 1});

  const Realization one = realize_mvector(V{1, 1});
  CHECK(one.verified);
  CHECK(one.dual_h_vector == std::vector<mpz_class>{1, 1});

  const Realization full = realize_mvector(V{1, 3, 6});
  CHECK(full.verified);
  CHECK(full.diagram.box_count() == 10);
  CHECK_THROWS_AS((realize_mvector(V{1, 2, 4})), Error);
}

TEST_CASE("M-vector grid: closure succeeds exactly for M-vectors, realizations verify") {
  const auto start = std::chrono::steady_clock::now();
  int realized = 0, checked = 0;
  for (std::int64_t h1 = 0; h1 <= 5; ++h1) {
    for (std::int64_t h2 = 0; h2 <= 20; ++h2) {
      for (std::int64_t h3 = 0; h3 <= 20; ++h3) {
        V h{1, h1, h2, h3};
        while (h.size() > 1 && h.back() == 0) h.pop_back();
        const int n = static_cast<int>(std::max<std::int64_t>(h1, 1));
        bool fits = true;
        for (std::size_t i = 0; i < h.size(); ++i) {
          if (h[i] > binomial(n + static_cast<int>(i) - 1, static_cast<int>(i))) fits = false;
        }
        ++checked;
        if (!fits) continue;
        bool closed = true;
        try {
          multicomplex_from_mvector(h);
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::NotClosedUnderDivision);
          closed = false;
        }
        CHECK(closed == is_m_vector(h));
        if (closed && (h1 + h2 + h3) % 5 == 0) {
          const Realization r = realize_mvector(h);
          CHECK(r.verified);
          ++realized;
        }
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  MESSAGE("grid: " << checked << " vectors, " << realized << " realized in " << seconds << " s");
  CHECK(realized > 0);
}
