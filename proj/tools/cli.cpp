#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ferrer/binomial.hpp"
#include "ferrer/diagram.hpp"
#include "ferrer/error.hpp"
#include "ferrer/ideal.hpp"
#include "ferrer/invariants.hpp"
#include "ferrer/limits.hpp"
#include "ferrer/macaulay.hpp"
#include "ferrer/oracle.hpp"
#include "ferrer/series.hpp"

namespace ferrer::cli {

namespace {

using ordered = nlohmann::ordered_json;

// A controlled exit with a document for stdout (may be null).
struct Stop {
  int code;
  ordered body;
};

nlohmann::json read_json(const std::string& path, std::istream& in) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Error(ErrorCode::MalformedInput, "cannot open " + path);
    buffer << file.rdbuf();
  }
  try {
    return nlohmann::json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, e.what(), "$");
  }
}

ordered strings(const MonomialIdeal& ideal) {
  ordered out = ordered::array();
  for (const auto& g : ideal.generators()) out.push_back(to_string(g));
  return out;
}

ordered primes(const std::vector<PrimeComponent>& components) {
  ordered out = ordered::array();
  for (const auto& p : components) {
    ordered vars = ordered::array();
    for (const auto& v : p.variables) vars.push_back(to_string(v));
    out.push_back(std::move(vars));
  }
  return out;
}

template <typename T>
ordered list(const std::vector<T>& values) {
  ordered out = ordered::array();
  for (const auto& v : values) {
    if constexpr (std::is_same_v<T, mpz_class>) {
      if (v.fits_slong_p()) {
        out.push_back(v.get_si());
      } else {
        out.push_back(v.get_str());
      }
    } else {
      out.push_back(v);
    }
  }
  return out;
}

ordered series_json(const RationalSeries& s) {
  ordered out;
  out["numerator"] = list(s.numerator().coefficients());
  out["denom_exponent"] = s.denom_exponent();
  out["pretty"] = s.pretty();
  return out;
}

std::vector<std::int64_t> sigma_of(const DiagonalProfile& profile) {
  return {profile.counts.begin() + profile.full, profile.counts.end()};
}

void require(bool condition, const std::string& what) {
  if (!condition) throw std::logic_error("internal inconsistency: " + what);
}

// ---- report -----------------------------------------------------------------

ordered build_report(const Partition& phi, bool certificate, const Limits& limits) {
  const int p = phi.depth();
  const DiagonalProfile profile = diagonal_profile(phi);
  const HomologicalSummary summary = homological_summary(phi);
  const BettiTable betti = betti_table(phi);
  const MonomialIdeal ideal = ferrer_ideal(phi);
  const auto components = minimal_primes(ideal, limits);
  const auto sigma = sigma_of(profile);
  const DualSeries series = dual_series(summary.c, p, sigma, summary.n);
  const auto extracted = extract_s_vector(series.quotient, summary.c, p, summary.d);

  require(betti.at(1) == static_cast<std::int64_t>(phi.box_count()), "beta_1 != boxes");
  require(betti.projdim() == profile.last, "projdim != delta");
  require(height(ideal, limits) == summary.c, "height != df");
  require(extracted == sigma, "s-vector round trip");

  ordered doc;
  doc["diagram"] = phi.to_json();
  doc["depth"] = p;
  doc["boxes"] = phi.box_count();
  doc["profile"] = {{"s", profile.counts}, {"df", profile.full}, {"delta", profile.last}};
  doc["summary"] = summary.to_json();
  doc["regularity"] = {{"ideal", p}, {"quotient", p - 1}};
  ordered table = betti.to_json();
  table["projdim"] = betti.projdim();
  table["reg"] = p;
  table["height"] = summary.c;
  table["depth"] = summary.depth;
  table["ara"] = summary.ara;
  doc["betti"] = std::move(table);
  doc["hilbert_series"] = {{"quotient", series_json(series.quotient)},
                           {"dual", series_json(series.dual)}};
  doc["s_vector"] = extracted;
  doc["generators"] = strings(ideal);
  doc["minimal_primes"] = primes(components);
  if (certificate) doc["certificate"] = ara_certificate(phi).to_json();
  return doc;
}

std::string join(const ordered& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].is_string() ? values[i].get<std::string>() : values[i].dump();
  }
  return out;
}

void render_text(const ordered& doc, std::ostream& out) {
  const auto& s = doc["summary"];
  out << "diagram      " << doc["diagram"].dump() << "\n";
  out << "depth        " << doc["depth"] << "\n";
  out << "boxes        " << doc["boxes"] << "\n";
  out << "diagonals    " << join(doc["profile"]["s"], " ") << "  (df " << doc["profile"]["df"]
      << ", delta " << doc["profile"]["delta"] << ")\n";
  out << "n c d        " << s["n"] << " " << s["c"] << " " << s["d"] << "\n";
  out << "depth S/I    " << s["depth"] << "\n";
  out << "projdim      " << s["projdim"] << "\n";
  out << "ara          " << s["ara"] << "\n";
  out << "reg          " << doc["regularity"]["ideal"] << " (S/I: " << doc["regularity"]["quotient"]
      << ")\n";
  ordered betti = ordered::array();
  for (int j = 1; j <= doc["betti"]["projdim"].get<int>(); ++j) {
    betti.push_back(doc["betti"][std::to_string(j)]);
  }
  out << "betti        " << join(betti, " ") << "\n";
  out << "H(S/I)       " << doc["hilbert_series"]["quotient"]["pretty"].get<std::string>() << "\n";
  out << "H(S/I*)      " << doc["hilbert_series"]["dual"]["pretty"].get<std::string>() << "\n";
  out << "s-vector     " << join(doc["s_vector"], " ") << "\n";
  out << "generators   " << doc["generators"].size() << "\n";
  for (const auto& g : doc["generators"]) out << "  " << g.get<std::string>() << "\n";
  out << "minimal primes " << doc["minimal_primes"].size() << "\n";
  for (const auto& p : doc["minimal_primes"]) out << "  (" << join(p, ", ") << ")\n";
  if (doc.contains("certificate")) {
    out << "certificate  " << doc["certificate"].size() << " pairs\n";
    for (const auto& w : doc["certificate"]) {
      out << "  K" << w["diagonal"] << ": " << w["pair"][0].get<std::string>() << " , "
          << w["pair"][1].get<std::string>() << "  <- K" << w["witness_class"] << " "
          << w["witness_monomial"].get<std::string>() << "\n";
    }
  }
}

// ---- verify -----------------------------------------------------------------

ordered check(const std::string& name, bool pass) {
  ordered c;
  c["name"] = name;
  c["pass"] = pass;
  return c;
}

bool betti_agrees(const Partition& phi, const OracleOptions& options, const Limits& limits) {
  const GradedBettiTable oracle = graded_betti_brute(ferrer_ideal(phi), options, limits);
  return oracle.totals() == [&] {
    std::vector<std::int64_t> t{1};
    const auto b = betti_table(phi).betti;
    t.insert(t.end(), b.begin(), b.end());
    return t;
  }() && oracle.is_linear(phi.depth());
}

ordered verify_betti(const Partition& phi, const OracleOptions& options, const Limits& limits) {
  const GradedBettiTable oracle = graded_betti_brute(ferrer_ideal(phi), options, limits);
  const BettiTable formula = betti_table(phi);
  std::vector<std::int64_t> expected{1};
  expected.insert(expected.end(), formula.betti.begin(), formula.betti.end());
  const bool totals = oracle.totals() == expected;
  const bool linear = oracle.is_linear(phi.depth());
  ordered c = check("betti", totals && linear);
  c["formula"] = expected;
  c["oracle"] = oracle.totals();
  c["linear"] = linear;
  c["projdim"] = oracle.projdim();
  if (!(totals && linear)) {
    // Shrink along the removal chain while the disagreement persists.
    Partition smallest = phi;
    while (smallest.box_count() > 1) {
      Partition next = remove_last_diagonal_box(smallest).rest;
      if (betti_agrees(next, options, limits)) break;
      smallest = std::move(next);
    }
    c["counterexample"] = smallest.to_json();
  }
  return c;
}

// Removes `count` random maximal boxes.
Partition random_subdiagram(const Partition& phi, std::mt19937_64& rng, int count) {
  std::vector<Box> current = boxes(phi);
  for (int step = 0; step < count && current.size() > 1; ++step) {
    std::vector<std::size_t> maximal;
    for (std::size_t i = 0; i < current.size(); ++i) {
      bool is_max = true;
      for (std::size_t g = 0; g < current[i].coords.size() && is_max; ++g) {
        Box up = current[i];
        ++up.coords[g];
        is_max = !std::binary_search(current.begin(), current.end(), up);
      }
      if (is_max) maximal.push_back(i);
    }
    std::uniform_int_distribution<std::size_t> pick(0, maximal.size() - 1);
    current.erase(current.begin() + static_cast<std::ptrdiff_t>(maximal[pick(rng)]));
  }
  return Partition::from_boxes(current, phi.depth());
}

ordered build_verify(const Partition& phi, int max_degree, std::optional<std::uint64_t> seed,
                     const OracleOptions& options, const Limits& limits) {
  const int p = phi.depth();
  const DiagonalProfile profile = diagonal_profile(phi);
  const HomologicalSummary summary = homological_summary(phi);
  const MonomialIdeal ideal = ferrer_ideal(phi);
  const auto sigma = sigma_of(profile);
  ordered checks = ordered::array();

  ordered betti = verify_betti(phi, options, limits);
  const int oracle_projdim = betti["projdim"].get<int>();
  checks.push_back(std::move(betti));

  {
    ordered c = check("projdim", oracle_projdim == profile.last);
    c["oracle"] = oracle_projdim;
    c["delta"] = profile.last;
    checks.push_back(std::move(c));
  }
  {
    const int h = height(ideal, limits);
    ordered c = check("height", h == profile.full);
    c["min_prime_size"] = h;
    c["df"] = profile.full;
    checks.push_back(std::move(c));
  }
  const RationalSeries formula = hilbert_series_linear(summary.c, p, sigma, summary.d);
  const RationalSeries monomial = hilbert_series_monomial(ideal, limits);
  {
    ordered c = check("series", formula == monomial);
    c["formula"] = formula.pretty();
    c["inclusion_exclusion"] = monomial.pretty();
    checks.push_back(std::move(c));
  }
  {
    const auto counts = hilbert_function_truncated(ideal, max_degree, limits);
    const auto expanded = formula.expand(max_degree);
    ordered c = check("hilbert_function", counts == expanded);
    c["max_degree"] = max_degree;
    if (counts != expanded) {
      c["counted"] = list(counts);
      c["expanded"] = list(expanded);
    }
    checks.push_back(std::move(c));
  }
  if (p >= 2) {
    MonomialIdeal meet;
    bool first = true;
    for (const auto& component : intersection_decomposition(phi)) {
      meet = first ? component.ideal() : intersect_monomial(meet, component.ideal());
      first = false;
    }
    ordered c = check("decomposition", meet == ideal);
    if (!(meet == ideal)) c["intersection"] = strings(meet);
    checks.push_back(std::move(c));
  }
  {
    const AraCertificate cert = ara_certificate(phi);
    const bool ok = cert.verify() && static_cast<int>(cert.classes.size()) == summary.ara &&
                    summary.ara == oracle_projdim;
    ordered c = check("ara_certificate", ok);
    c["pairs"] = cert.witnesses.size();
    c["ara"] = summary.ara;
    checks.push_back(std::move(c));
  }
  if (phi.box_count() >= 2) {
    const MappingConeStep step = mapping_cone_step(phi);
    ordered c = check("mapping_cone", step.holds);
    c["removed"] = step.removed.coords;
    checks.push_back(std::move(c));
  }
  {
    // 1 - sum_j (-1)^{j+1} beta_{j,a} t^a against the Hilbert numerator at exponent n.
    const GradedBettiTable graded = graded_betti_brute(ideal, options, limits);
    IntPolynomial from_oracle;
    for (const auto& [key, value] : graded.entries) {
      if (key.first == 0) continue;
      const mpz_class signed_value = (key.first % 2 == 1 ? 1 : -1) * mpz_class(static_cast<long>(value));
      from_oracle += IntPolynomial::term(signed_value, key.second);
    }
    const int n = static_cast<int>(ideal.ambient().size());
    ordered c = check("alternating_sum", from_oracle == betti_polynomial(monomial, n));
    checks.push_back(std::move(c));
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    ordered samples = ordered::array();
    bool all = true;
    for (int i = 0; i < 3; ++i) {
      std::uniform_int_distribution<int> count(0, static_cast<int>(phi.box_count()) - 1);
      const Partition sub = random_subdiagram(phi, rng, count(rng));
      const bool ok = betti_agrees(sub, options, limits);
      all = all && ok;
      samples.push_back({{"diagram", sub.to_json()}, {"pass", ok}});
    }
    ordered c = check("random_subdiagrams", all);
    c["samples"] = std::move(samples);
    checks.push_back(std::move(c));
  }

  bool pass = true;
  for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
  ordered doc;
  doc["diagram"] = phi.to_json();
  doc["max_degree"] = max_degree;
  if (seed) doc["seed"] = *seed;
  doc["checks"] = std::move(checks);
  doc["pass"] = pass;
  return doc;
}

// ---- series / dual ----------------------------------------------------------

ordered build_series(const Partition& phi, bool cross_check, const Limits& limits) {
  const int p = phi.depth();
  const DiagonalProfile profile = diagonal_profile(phi);
  const HomologicalSummary summary = homological_summary(phi);
  const auto sigma = sigma_of(profile);
  const RationalSeries series = hilbert_series_linear(summary.c, p, sigma, summary.d);
  ordered doc;
  doc["diagram"] = phi.to_json();
  doc["n"] = summary.n;
  doc["c"] = summary.c;
  doc["p"] = p;
  doc["sigma"] = sigma;
  doc["series"] = series_json(series);
  doc["h_vector"] = list(h_vector(series));
  doc["s_vector"] = extract_s_vector(series, summary.c, p, summary.d);
  doc["betti_polynomial"] = list(betti_polynomial(series, summary.n).coefficients());
  if (cross_check) {
    const RationalSeries monomial = hilbert_series_monomial(ferrer_ideal(phi), limits);
    doc["inclusion_exclusion"] = series_json(monomial);
    doc["agree"] = monomial == series;
    if (!(monomial == series)) throw Stop{mismatch, doc};
  }
  return doc;
}

ordered build_dual(const Partition& phi, const Limits& limits) {
  const int p = phi.depth();
  const DiagonalProfile profile = diagonal_profile(phi);
  const HomologicalSummary summary = homological_summary(phi);
  const auto sigma = sigma_of(profile);
  const DualSeries series = dual_series(summary.c, p, sigma, summary.n);
  const MonomialIdeal dual = alexander_dual(ferrer_ideal(phi), limits);

  // B_J(t) = 1 - B_I(1 - t) at denominator exponent n.
  const IntPolynomial bi = betti_polynomial(series.quotient, summary.n);
  const IntPolynomial bj = betti_polynomial(series.dual, summary.n);
  const bool relation = bj == IntPolynomial{1} - bi.compose_one_minus_t();

  ordered doc;
  doc["diagram"] = phi.to_json();
  doc["dual_generators"] = strings(dual);
  doc["quotient"] = series_json(series.quotient);
  doc["dual"] = series_json(series.dual);
  doc["dual_h_vector"] = list(h_vector(series.dual));
  doc["betti_relation"] = relation;
  if (!relation) throw Stop{mismatch, doc};
  return doc;
}

// ---- macaulay / pure --------------------------------------------------------

std::vector<std::int64_t> parse_h(const std::string& text) {
  std::vector<std::int64_t> h;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      h.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidArgument, "not an integer list: " + text);
    }
  }
  if (h.empty() || h[0] != 1) throw Error(ErrorCode::InvalidArgument, "h must start with 1");
  return h;
}

ordered build_macaulay(const std::vector<std::int64_t>& h, const Limits& limits) {
  if (const auto violation = macaulay_violation(h)) {
    ordered body;
    body["h"] = h;
    body["error"] = "NotMVector";
    body["index"] = violation->index;
    body["value"] = violation->value;
    body["bound"] = violation->bound;
    body["message"] = violation->describe();
    throw Stop{not_m_vector, body};
  }
  const Realization r = realize_mvector(h, limits);
  ordered doc;
  doc["h"] = h;
  doc["diagram"] = r.diagram.to_json();
  doc["generators"] = strings(r.ideal);
  doc["minimal_primes"] = primes(minimal_primes(r.ideal, limits));
  doc["dual_generators"] = strings(r.dual);
  doc["dual_h_vector"] = list(r.dual_h_vector);
  doc["verified"] = r.verified;
  if (!r.verified) throw Stop{mismatch, doc};
  return doc;
}

int emit(std::ostream& out, const ordered& doc) {
  out << doc.dump(2) << "\n";
  return ok;
}

int error_exit(const Error& e, std::ostream& err) {
  int code = internal;
  switch (e.code()) {
    case ErrorCode::MalformedInput:
    case ErrorCode::NonUniformDepth:
    case ErrorCode::NotDecreasing:
    case ErrorCode::NonPositiveLeaf:
    case ErrorCode::NotDownwardClosed:
    case ErrorCode::DepthMismatch:
    case ErrorCode::InvalidArgument:
    case ErrorCode::CountOutOfRange:
      code = invalid_input;
      break;
    case ErrorCode::SizeLimitExceeded:
    case ErrorCode::TooManyGenerators:
      code = size_limit;
      break;
    default:
      break;
  }
  ordered body;
  body["error"] = std::string(to_string(e.code()));
  body["message"] = e.what();
  if (!e.path().empty()) body["path"] = e.path();
  err << body.dump() << "\n";
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"p-Ferrer diagrams, their ideals and invariants"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  bool text = false;
  bool certificate = false;
  int max_degree = 12;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string field = "rationals";
  bool cross_check = false;
  std::string h_text;
  std::optional<std::int64_t> a1, a2, beta0, c, p, alpha;

  auto* report = app.add_subcommand("report", "Invariants of a diagram");
  report->add_option("path", path, "Diagram JSON file, or - for stdin")->required();
  auto* json_flag = report->add_flag("--json", json, "JSON output (default)");
  report->add_flag("--text", text, "Plain text output")->excludes(json_flag);
  report->add_flag("--certificate", certificate, "Include the ara certificate");

  auto* verify = app.add_subcommand("verify", "Check the formulas against brute force");
  verify->add_option("path", path, "Diagram JSON file, or - for stdin")->required();
  verify->add_option("--max-degree", max_degree, "Hilbert function truncation degree")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", seed, "Also check random subdiagrams from this seed");
  verify->add_option("--threads", threads, "Oracle worker threads (0: all cores)");
  verify->add_option("--field", field, "Homology coefficients")
      ->check(CLI::IsMember({"rationals", "prime"}));

  auto* series = app.add_subcommand("series", "Hilbert series of S/I");
  series->add_option("path", path, "Diagram JSON file, or - for stdin")->required();
  series->add_flag("--check", cross_check, "Compare with inclusion-exclusion");

  auto* dual = app.add_subcommand("dual", "Alexander dual and its series");
  dual->add_option("path", path, "Diagram JSON file, or - for stdin")->required();

  auto* macaulay = app.add_subcommand("macaulay", "Realize an M-vector");
  macaulay->set_help_flag("--help", "Print this help message and exit");
  macaulay->add_option("--h", h_text, "Comma-separated h-vector, e.g. 1,4,3,4,1")->required();

  auto* pure = app.add_subcommand("pure", "Pure resolution arithmetic");
  auto* o_a1 = pure->add_option("--a1", a1, "First shift");
  auto* o_a2 = pure->add_option("--a2", a2, "Second shift");
  auto* o_b0 = pure->add_option("--beta0", beta0, "Rank of F_0");
  auto* o_c = pure->add_option("--c", c, "Codimension");
  auto* o_p = pure->add_option("--p", p, "Generation degree");
  auto* o_alpha = pure->add_option("--alpha", alpha, "Scaling factor");
  o_a1->needs(o_a2, o_b0);
  o_c->needs(o_p, o_alpha);
  for (auto* o : {o_a1, o_a2, o_b0}) {
    for (auto* q : {o_c, o_p, o_alpha}) o->excludes(q);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    const Limits limits = Limits::from_env();
    if (report->parsed()) {
      const Partition phi = Partition::from_json(read_json(path, in), limits);
      const ordered doc = build_report(phi, certificate, limits);
      if (text) {
        render_text(doc, out);
        return ok;
      }
      return emit(out, doc);
    }
    if (verify->parsed()) {
      const Partition phi = Partition::from_json(read_json(path, in), limits);
      OracleOptions options;
      options.threads = threads;
      options.field = field == "prime" ? Field::prime : Field::rationals;
      const ordered doc = build_verify(phi, max_degree, seed, options, limits);
      emit(out, doc);
      return doc["pass"].get<bool>() ? ok : mismatch;
    }
    if (series->parsed()) {
      const Partition phi = Partition::from_json(read_json(path, in), limits);
      return emit(out, build_series(phi, cross_check, limits));
    }
    if (dual->parsed()) {
      const Partition phi = Partition::from_json(read_json(path, in), limits);
      return emit(out, build_dual(phi, limits));
    }
    if (macaulay->parsed()) {
      return emit(out, build_macaulay(parse_h(h_text), limits));
    }
    if (pure->parsed()) {
      if (a1) {
        const PureCodim2 r = pure_codim2_betti(*a1, *a2, *beta0);
        ordered doc;
        doc["a1"] = *a1;
        doc["a2"] = *a2;
        doc["beta0"] = *beta0;
        doc["feasible"] = r.feasible;
        if (r.feasible) {
          doc["type"] = {0, *a1, *a2};
          doc["betti"] = {*beta0, r.beta1, r.beta2};
        }
        if (r.scaling) {
          doc["scaling"] = {{"c", r.scaling->first}, {"alpha", r.scaling->second}};
        }
        emit(out, doc);
        return r.feasible ? ok : infeasible;
      }
      if (c) {
        if (*c < 1 || *p < 1 || *alpha < 1 || *c > 1000 || *p > 1000) {
          throw Error(ErrorCode::InvalidArgument, "c, p and alpha must be positive");
        }
        const ResolutionType base =
            cohen_macaulay_dual_type(static_cast<int>(*c), static_cast<int>(*p));
        const ResolutionType scaled =
            scaled_resolution_type(base.degrees, base.betti, static_cast<int>(*alpha));
        ordered doc;
        doc["c"] = *c;
        doc["p"] = *p;
        doc["alpha"] = *alpha;
        doc["type"] = scaled.degrees;
        doc["betti"] = scaled.betti;
        return emit(out, doc);
      }
      err << "pure: give --a1 --a2 --beta0 or --c --p --alpha\n";
      return usage;
    }
  } catch (const Stop& e) {
    if (e.code == not_m_vector) {
      err << e.body.dump() << "\n";
    } else {
      emit(out, e.body);
    }
    return e.code;
  } catch (const Error& e) {
    return error_exit(e, err);
  } catch (const std::exception& e) {
    err << ordered{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return internal;
  }
  return usage;
}

}  // namespace ferrer::cli
