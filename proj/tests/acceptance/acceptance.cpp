// One line per acceptance criterion; exit status 1 on any unexpected failure.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "ferrer/binomial.hpp"
#include "ferrer/diagram.hpp"
#include "ferrer/error.hpp"
#include "ferrer/ideal.hpp"
#include "ferrer/invariants.hpp"
#include "ferrer/oracle.hpp"
#include "ferrer/series.hpp"
#include "fixtures.hpp"
#include "random_diagram.hpp"

using namespace ferrer;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  // Set when the criterion cannot hold as written; the reason is printed.
  std::string known_failure;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Fixture {
  std::string name;
  Partition diagram;
  GradedBettiTable oracle;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::set<std::string> canonical_set(const json& list, const std::map<char, Variable>& letters) {
  std::set<std::string> out;
  for (const auto& item : list) out.insert(to_string(testing::parse_lettered(item.get<std::string>(), letters)));
  return out;
}

std::set<std::string> prime_set(const json& list, const std::map<char, Variable>& letters) {
  std::set<std::string> out;
  for (const auto& prime : list) {
    std::vector<Variable> vars;
    for (const auto& v : prime) {
      vars.push_back(testing::parse_lettered(v.get<std::string>(), letters).factors().front().first);
    }
    std::sort(vars.begin(), vars.end());
    std::string text;
    for (const auto& v : vars) text += (text.empty() ? "" : ",") + to_string(v);
    out.insert(text);
  }
  return out;
}

std::set<std::string> prime_set_cli(const json& list) {
  std::set<std::string> out;
  for (const auto& prime : list) {
    std::string text;
    for (const auto& v : prime) text += (text.empty() ? "" : ",") + v.get<std::string>();
    out.insert(text);
  }
  return out;
}

std::set<std::string> string_set(const json& list) {
  std::set<std::string> out;
  for (const auto& s : list) out.insert(s.get<std::string>());
  return out;
}

std::set<std::string> set_union(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Outcome criterion1() {
  Outcome o;
  const json fx = testing::load_fixture("hvector_14341.json");
  const auto letters = testing::letter_groups(fx["groups"]);

  const auto start = Clock::now();
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run({"macaulay", "--h", "1,4,3,4,1"}, in, out, err);
  const double elapsed = seconds_since(start);
  if (code != 0) {
    o.fail("macaulay exited " + std::to_string(code) + ": " + err.str());
    return o;
  }
  const json doc = json::parse(out.str());

  if (string_set(doc["generators"]) != canonical_set(fx["generators"], letters) ||
      doc["generators"].size() != 13) {
    o.fail("generators differ from the 13 printed");
  }
  if (doc["dual_h_vector"] != fx["dual_h_vector"]) o.fail("dual h-vector " + doc["dual_h_vector"].dump());
  if (doc["verified"] != true) o.fail("realization not verified");
  if (elapsed >= 1.0) o.fail("runtime " + std::to_string(elapsed) + " s");

  const auto printed_primes = prime_set(fx["printed_minimal_primes"], letters);
  const auto all_primes = set_union(printed_primes, prime_set(fx["unprinted_minimal_primes"], letters));
  const auto printed_dual = canonical_set(fx["printed_dual_generators"], letters);
  const auto all_dual = set_union(printed_dual, canonical_set(fx["unprinted_dual_generators"], letters));
  const auto got_primes = prime_set_cli(doc["minimal_primes"]);
  const auto got_dual = string_set(doc["dual_generators"]);

  if (got_primes != all_primes) o.fail("minimal primes differ from printed plus unprinted");
  if (got_dual != all_dual) o.fail("dual generators differ from printed plus unprinted");
  if (!o.pass) return o;

  std::ostringstream d;
  d << "13 generators exact, dual h-vector (1,4,3,4,1), " << std::fixed << std::setprecision(3) << elapsed
    << " s; minimal primes " << got_primes.size() << " vs " << printed_primes.size()
    << " printed, dual generators " << got_dual.size() << " vs " << printed_dual.size()
    << " printed";
  o.detail = d.str();
  if (got_primes != printed_primes || got_dual != printed_dual) {
    o.pass = false;
    o.known_failure =
        "the printed lists omit the component (t_1,s_1,s_2,s_3) and its dual generator t_1s_1s_2s_3; "
        "the printed 11 dual generators alone give dual h-vector (1,4,3,4,2,1)";
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const json fx = testing::load_fixture("nested_decomposition.json");
  std::map<std::string, Variable> names;
  int index = 1;
  for (const auto& v : fx["variables"]) names[v.get<std::string>()] = Variable{1, index++};
  auto linear = [&](const json& list) {
    std::vector<Variable> vars;
    for (const auto& v : list) vars.push_back(names.at(v.get<std::string>()));
    return MonomialIdeal::linear(vars);
  };
  MonomialIdeal ideal;
  bool first = true;
  for (const auto& component : fx["components"]) {
    MonomialIdeal inner;
    bool start = true;
    if (component.contains("intersection")) {
      for (const auto& prime : component["intersection"]) {
        inner = start ? linear(prime) : intersect_monomial(inner, linear(prime));
        start = false;
      }
    }
    if (component.contains("linear")) inner = sum(linear(component["linear"]), inner);
    ideal = first ? inner : intersect_monomial(ideal, inner);
    first = false;
  }
  std::vector<PrimeComponent> expected;
  for (const auto& prime : fx["minimal_primes"]) {
    PrimeComponent p;
    for (const auto& v : prime) p.variables.push_back(names.at(v.get<std::string>()));
    std::sort(p.variables.begin(), p.variables.end());
    expected.push_back(std::move(p));
  }
  std::sort(expected.begin(), expected.end());
  auto got = minimal_primes(ideal);
  std::sort(got.begin(), got.end());
  if (got != expected) o.fail("got " + std::to_string(got.size()) + " primes");
  else o.detail = "{(a,b),(a,e),(c,d),(c,e),(e,f)}";
  return o;
}

std::vector<Fixture> criterion3_fixtures() {
  std::vector<Fixture> out;
  out.push_back({"example-4322", testing::load_partition("example_4322.json"), {}});
  out.push_back({"example-54432", testing::load_partition("example_54432.json"), {}});
  for (int p = 1; p <= 3; ++p) {
    for (int c = 1; c <= 3; ++c) {
      out.push_back({"full(" + std::to_string(p) + "," + std::to_string(c) + ")", full_diagram(p, c), {}});
    }
  }
  for (const Partition& s : testing::all_staircases(12)) out.push_back({"staircase " + s.to_json().dump(), s, {}});
  std::mt19937_64 rng(20240611);
  const Limits limits;
  int made = 0;
  while (made < 50) {
    const int depth = 2 + made % 3;
    const Partition p = testing::random_diagram(rng, depth, 3 + made % 14, 4);
    if (ambient_size(p) > limits.oracle_max_variables) continue;
    out.push_back({"random " + p.to_json().dump(), p, {}});
    ++made;
  }
  return out;
}

Outcome criterion3(std::vector<Fixture>& fixtures) {
  Outcome o;
  const auto start = Clock::now();
  for (Fixture& f : fixtures) {
    f.oracle = graded_betti_brute(ferrer_ideal(f.diagram));
    const BettiTable formula = betti_table(f.diagram);
    const auto totals = f.oracle.totals();
    if (static_cast<int>(totals.size()) != formula.projdim() + 1) {
      o.fail(f.name + ": projdim differs");
      continue;
    }
    for (int j = 1; j <= formula.projdim(); ++j) {
      if (totals[static_cast<std::size_t>(j)] != formula.at(j)) o.fail(f.name + ": beta_" + std::to_string(j));
    }
    if (!f.oracle.is_linear(f.diagram.depth())) o.fail(f.name + ": entry outside degree j+p-1");
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300) o.fail("runtime " + std::to_string(elapsed) + " s");
  if (o.pass) {
    std::ostringstream d;
    d << fixtures.size() << " diagrams, linear strands, " << std::fixed << std::setprecision(2) << elapsed << " s";
    o.detail = d.str();
  }
  return o;
}

Outcome criterion4(const std::vector<Fixture>& fixtures) {
  Outcome o;
  for (const Fixture& f : fixtures) {
    const DiagonalProfile prof = diagonal_profile(f.diagram);
    std::size_t smallest = SIZE_MAX;
    for (const auto& prime : minimal_primes(ferrer_ideal(f.diagram))) smallest = std::min(smallest, prime.variables.size());
    if (static_cast<int>(smallest) != prof.full) o.fail(f.name + ": height " + std::to_string(smallest));
    if (f.oracle.projdim() != prof.last) o.fail(f.name + ": projdim " + std::to_string(f.oracle.projdim()));
  }
  if (o.pass) o.detail = std::to_string(fixtures.size()) + " diagrams";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::mt19937_64 rng(5);
  int steps = 0;
  while (steps < 200) {
    const Partition p = testing::random_diagram(rng, 1 + steps % 4, 1 + steps % 25, 6);
    const MappingConeStep step = mapping_cone_step(p);
    const BettiTable before = betti_table(p);
    const BettiTable after = betti_table(step.rest);
    const int delta = diagonal_profile(p).last;
    for (int j = 1; j <= std::max(before.projdim(), after.projdim()); ++j) {
      if (before.at(j) != after.at(j) + binomial(delta - 1, j - 1)) {
        o.fail(p.to_json().dump() + ": beta_" + std::to_string(j));
      }
    }
    if (!step.holds) o.fail(p.to_json().dump() + ": step reports failure");
    ++steps;
  }
  if (o.pass) o.detail = "200 seeded removal steps";
  return o;
}

Outcome criterion6(const std::vector<Fixture>& fixtures) {
  Outcome o;
  for (int c = 1; c <= 8; ++c) {
    for (int p = 1; p <= 8; ++p) {
      if (!duality_identity_check(c, p)) o.fail("duality identity at " + std::to_string(c) + "," + std::to_string(p));
    }
  }
  for (const Fixture& f : fixtures) {
    const DiagonalProfile prof = diagonal_profile(f.diagram);
    const std::vector<std::int64_t> sigma(prof.counts.begin() + prof.full, prof.counts.end());
    const MonomialIdeal ideal = ferrer_ideal(f.diagram);
    const RationalSeries formula =
        hilbert_series_linear(prof.full, f.diagram.depth(), sigma, ambient_size(f.diagram) - prof.full);
    if (!(hilbert_series_monomial(ideal) == formula)) o.fail(f.name + ": series differ");
    if (formula.expand(12) != hilbert_function_truncated(ideal, 12)) o.fail(f.name + ": Hilbert function differs");
  }
  const RationalSeries lhs(IntPolynomial{1, 2, 3, -6}, 7);
  const RationalSeries rhs(IntPolynomial{1, 3, 6}, 6);
  if (!(lhs == rhs) || lhs.pretty() != "(1+3t+6t²)/(1−t)⁶") o.fail("worked equality: " + lhs.pretty());
  if (o.pass) o.detail = "c,p <= 8; " + std::to_string(fixtures.size()) + " diagrams to degree 12; " + lhs.pretty();
  return o;
}

Outcome criterion7(const std::vector<Fixture>& fixtures) {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> cp(1, 6), len(0, 6), entry(0, 20);
  for (int trial = 0; trial < 100; ++trial) {
    const int c = cp(rng), p = cp(rng);
    std::vector<std::int64_t> sigma(static_cast<std::size_t>(len(rng)));
    for (auto& s : sigma) s = entry(rng);
    if (!sigma.empty() && sigma.back() == 0) sigma.back() = 1 + entry(rng);
    const int d = static_cast<int>(sigma.size()) + cp(rng) - 1;
    if (extract_s_vector(hilbert_series_linear(c, p, sigma, d), c, p, d) != sigma) {
      o.fail("random round trip at c=" + std::to_string(c) + " p=" + std::to_string(p));
    }
  }
  for (const Fixture& f : fixtures) {
    const DiagonalProfile prof = diagonal_profile(f.diagram);
    const std::vector<std::int64_t> tail(prof.counts.begin() + prof.full, prof.counts.end());
    const RationalSeries series = hilbert_series_monomial(ferrer_ideal(f.diagram));
    if (extract_s_vector(series, prof.full, f.diagram.depth(), ambient_size(f.diagram) - prof.full) != tail) {
      o.fail(f.name + ": sigma differs from diagonal counts");
    }
  }
  if (o.pass) o.detail = "100 random (c,p,sigma); " + std::to_string(fixtures.size()) + " diagrams";
  return o;
}

Outcome criterion8(const std::vector<Fixture>& fixtures) {
  Outcome o;
  std::size_t pairs = 0;
  for (const Fixture& f : fixtures) {
    const AraCertificate cert = ara_certificate(f.diagram);
    if (!cert.verify()) o.fail(f.name + ": certificate rejected");
    if (cert.classes.empty() || cert.classes.front().size() != 1) o.fail(f.name + ": |K_1| != 1");
    std::size_t expected = 0;
    for (const auto& k : cert.classes) expected += k.size() * (k.size() - 1) / 2;
    if (cert.witnesses.size() != expected) o.fail(f.name + ": missing witnesses");
    pairs += cert.witnesses.size();
    const HomologicalSummary s = homological_summary(f.diagram);
    if (s.ara != s.projdim || s.ara != f.oracle.projdim()) o.fail(f.name + ": ara " + std::to_string(s.ara));
  }
  if (o.pass) o.detail = std::to_string(pairs) + " pairs witnessed over " + std::to_string(fixtures.size()) + " diagrams";
  return o;
}

// x -> x^alpha on every generator.
MonomialIdeal power_substitution(const MonomialIdeal& ideal, int alpha) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.generators()) {
    std::vector<Monomial::Factor> f = g.factors();
    for (auto& [v, e] : f) e *= alpha;
    gens.emplace_back(std::move(f));
  }
  return MonomialIdeal(std::move(gens));
}

Outcome criterion9() {
  Outcome o;
  const PureCodim2 r = pure_codim2_betti(2, 3, 1);
  if (!r.feasible || r.beta1 != 3 || r.beta2 != 2) o.fail("(2,3,1) gives " + std::to_string(r.beta1) + "," + std::to_string(r.beta2));
  if (!r.scaling || r.scaling->first != 2 || r.scaling->second != 1) o.fail("scaling of (2,3)");

  // The displayed resolution, read off the dual of the full 2-Ferrer diagram of codimension 2.
  const MonomialIdeal dual = alexander_dual(ferrer_ideal(full_diagram(2, 2)));
  const std::vector<std::int64_t> degrees{0, 2, 3}, betti{1, 3, 2};
  for (int alpha = 1; alpha <= 4; ++alpha) {
    const ResolutionType t = scaled_resolution_type(degrees, betti, alpha);
    const GradedBettiTable g = graded_betti_brute(power_substitution(dual, alpha));
    for (std::size_t j = 0; j < t.degrees.size(); ++j) {
      if (t.betti[j] != betti[j] || t.degrees[j] != alpha * degrees[j]) o.fail("scaled type at alpha " + std::to_string(alpha));
      if (g.at(static_cast<int>(j), static_cast<int>(t.degrees[j])) != t.betti[j]) {
        o.fail("oracle disagrees at alpha " + std::to_string(alpha));
      }
    }
    if (g.totals() != betti) o.fail("oracle totals at alpha " + std::to_string(alpha));
  }
  for (std::int64_t c = 1; c <= 4; ++c) {
    for (std::int64_t alpha = 1; alpha <= 4; ++alpha) {
      const PureCodim2 s = pure_codim2_betti(c * alpha, (c + 1) * alpha, 1);
      if (!s.feasible || !s.scaling || *s.scaling != std::pair{c, alpha} || s.beta1 != c + 1 || s.beta2 != c) {
        o.fail("scaling (c,alpha) = (" + std::to_string(c) + "," + std::to_string(alpha) + ")");
      }
    }
  }
  if (o.pass) o.detail = "(2,3,1) -> (3,2); oracle matches alpha = 1..4";
  return o;
}

}  // namespace

int main() {
  int unexpected = 0, passed = 0, known = 0;
  auto report = [&](int id, const std::function<Outcome()>& body) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double elapsed = seconds_since(start);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) std::cout << " (" << o.detail << ")";
    if (!o.known_failure.empty()) std::cout << " [known: " << o.known_failure << "]";
    std::cout << " [" << std::fixed << std::setprecision(2) << elapsed << " s]\n" << std::flush;
    if (o.pass) ++passed;
    else if (o.known_failure.empty()) ++unexpected;
    else ++known;
  };

  std::vector<Fixture> fixtures;
  report(1, criterion1);
  report(2, criterion2);
  report(3, [&] {
    fixtures = criterion3_fixtures();
    return criterion3(fixtures);
  });
  report(4, [&] { return criterion4(fixtures); });
  report(5, criterion5);
  report(6, [&] { return criterion6(fixtures); });
  report(7, [&] { return criterion7(fixtures); });
  report(8, [&] { return criterion8(fixtures); });
  report(9, criterion9);
  std::cout << passed << " passed, " << known << " known failure(s), " << unexpected << " unexpected\n";
  return unexpected == 0 ? 0 : 1;
}
