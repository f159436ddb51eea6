#include "ferrer/invariants.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ferrer/binomial.hpp"
#include "ferrer/error.hpp"

namespace ferrer {

std::int64_t BettiTable::at(int j) const noexcept {
  if (j == 0) return 1;
  if (j < 0 || j > projdim()) return 0;
  return betti[static_cast<std::size_t>(j - 1)];
}

nlohmann::json BettiTable::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (int j = 1; j <= projdim(); ++j) out[std::to_string(j)] = at(j);
  return out;
}

std::int64_t betti_cm(int c, int p, int j) {
  if (j == 0) return 1;
  if (j < 0 || j > c) return 0;
  return binomial(c + p - 1, j + p - 1) * binomial(j + p - 2, p - 1);
}

BettiTable betti_table(const Partition& partition) {
  const DiagonalProfile profile = diagonal_profile(partition);
  BettiTable table;
  table.p = partition.depth();
  const int c = profile.full;
  for (int j = 1; j <= profile.last; ++j) {
    std::int64_t beta = betti_cm(c, table.p, j);
    for (int k = c + 1; k <= profile.last; ++k) beta += profile.at(k) * binomial(k - 1, j - 1);
    table.betti.push_back(beta);
  }
  return table;
}

std::int64_t betti_ambient_indexed(const DiagonalProfile& profile, int n, int j) {
  const int c = profile.full;
  const int d = n - c;
  std::int64_t beta = betti_cm(c, profile.depth, j);
  for (int i = 0; i <= d - 1; ++i) beta += profile.at(n - i) * binomial(n - i - 1, j - 1);
  return beta;
}

MappingConeStep mapping_cone_step(const Partition& partition) {
  Removal removal = remove_last_diagonal_box(partition);
  MappingConeStep step{std::move(removal.rest), std::move(removal.removed), 0, {}, {}, false};
  step.last_diagonal = diagonal_profile(partition).last;
  step.before = betti_table(partition);
  step.after = betti_table(step.rest);
  step.holds = true;
  const int top = std::max(step.before.projdim(), step.after.projdim());
  for (int j = 1; j <= top; ++j) {
    if (step.before.at(j) != step.after.at(j) + binomial(step.last_diagonal - 1, j - 1)) {
      step.holds = false;
    }
  }
  return step;
}

Regularity regularity(const Partition& partition) {
  return {partition.depth(), partition.depth() - 1};
}

int ambient_size(const Partition& partition) {
  std::vector<int> largest(static_cast<std::size_t>(partition.depth()), 0);
  for (const Box& box : boxes(partition)) {
    for (std::size_t g = 0; g < box.coords.size(); ++g) {
      largest[g] = std::max(largest[g], box.coords[g]);
    }
  }
  int n = 0;
  for (int v : largest) n += v;
  return n;
}

nlohmann::json HomologicalSummary::to_json() const {
  nlohmann::ordered_json out;
  out["n"] = n;
  out["c"] = c;
  out["d"] = d;
  out["depth"] = depth;
  out["projdim"] = projdim;
  out["ara"] = ara;
  return out;
}

HomologicalSummary homological_summary(const Partition& partition) {
  const DiagonalProfile profile = diagonal_profile(partition);
  HomologicalSummary s;
  s.n = ambient_size(partition);
  s.c = profile.full;
  s.d = s.n - s.c;
  s.projdim = profile.last;
  s.ara = profile.last;
  s.depth = s.n - s.projdim;
  return s;
}

AraCertificate ara_certificate(const Partition& partition) {
  const std::vector<Box> all = boxes(partition);
  const std::set<Box> present(all.begin(), all.end());
  const int delta = diagonal_profile(partition).last;

  std::vector<std::vector<Box>> by_diagonal(static_cast<std::size_t>(delta));
  for (const Box& box : all) by_diagonal[static_cast<std::size_t>(box.diagonal() - 1)].push_back(box);

  AraCertificate cert;
  for (const auto& cls : by_diagonal) {
    std::vector<Monomial> monomials;
    for (const Box& box : cls) monomials.push_back(box_monomial(box));
    cert.classes.push_back(std::move(monomials));
  }

  for (int j = 1; j <= delta; ++j) {
    const auto& cls = by_diagonal[static_cast<std::size_t>(j - 1)];
    for (std::size_t a = 0; a < cls.size(); ++a) {
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        const Box& m = cls[a];
        const Box& m2 = cls[b];
        // Lower the first differing coordinate of the larger one to the smaller value.
        std::size_t i0 = 0;
        while (m.coords[i0] == m2.coords[i0]) ++i0;
        Box n = m.coords[i0] > m2.coords[i0] ? m : m2;
        n.coords[i0] = std::min(m.coords[i0], m2.coords[i0]);
        if (!present.contains(n)) {
          throw Error(ErrorCode::CertificateFailure,
                      "witness box outside the diagram for diagonal " + std::to_string(j));
        }
        cert.witnesses.push_back(
            {j, box_monomial(m), box_monomial(m2), n.diagonal(), box_monomial(n)});
      }
    }
  }
  if (!cert.verify()) {
    throw Error(ErrorCode::CertificateFailure, "certificate does not verify");
  }
  return cert;
}

bool AraCertificate::verify() const {
  if (classes.empty() || classes.front().size() != 1) return false;
  std::set<std::pair<Monomial, Monomial>> covered;
  for (const AraWitness& w : witnesses) {
    if (w.diagonal < 1 || w.diagonal > static_cast<int>(classes.size())) return false;
    if (w.witness_diagonal < 1 || w.witness_diagonal >= w.diagonal) return false;
    const auto& cls = classes[static_cast<std::size_t>(w.diagonal - 1)];
    const auto& lower = classes[static_cast<std::size_t>(w.witness_diagonal - 1)];
    auto in = [](const std::vector<Monomial>& set, const Monomial& m) {
      return std::find(set.begin(), set.end(), m) != set.end();
    };
    if (w.first == w.second || !in(cls, w.first) || !in(cls, w.second)) return false;
    if (!in(lower, w.witness) || !w.witness.divides(w.first * w.second)) return false;
    auto key = std::minmax(w.first, w.second);
    if (!covered.insert({key.first, key.second}).second) return false;
  }
  std::size_t pairs = 0;
  for (const auto& cls : classes) pairs += cls.size() * (cls.size() - (cls.empty() ? 0 : 1)) / 2;
  return covered.size() == pairs;
}

nlohmann::json AraCertificate::to_json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const AraWitness& w : witnesses) {
    nlohmann::ordered_json entry;
    entry["pair"] = {to_string(w.first), to_string(w.second)};
    entry["diagonal"] = w.diagonal;
    entry["witness_class"] = w.witness_diagonal;
    entry["witness_monomial"] = to_string(w.witness);
    out.push_back(std::move(entry));
  }
  return out;
}

bool betti_bounds_check(const BettiTable& table, int c, int n, int depth) {
  const int upper = n - depth;
  const int top = std::max({table.projdim(), c, upper});
  for (int j = 1; j <= top; ++j) {
    const std::int64_t beta = table.at(j);
    if (beta < betti_cm(c, table.p, j) || beta > betti_cm(upper, table.p, j)) return false;
  }
  return true;
}

ResolutionType scaled_resolution_type(std::span<const std::int64_t> degrees,
                                      std::span<const std::int64_t> betti, int alpha) {
  if (alpha < 1) throw Error(ErrorCode::InvalidArgument, "alpha must be positive");
  if (degrees.size() != betti.size()) {
    throw Error(ErrorCode::InvalidArgument, "degrees and Betti numbers differ in length");
  }
  for (std::size_t i = 1; i < degrees.size(); ++i) {
    if (degrees[i] <= degrees[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "degrees must be strictly increasing");
    }
  }
  ResolutionType out;
  for (std::int64_t a : degrees) out.degrees.push_back(a * alpha);
  out.betti.assign(betti.begin(), betti.end());
  return out;
}

ResolutionType cohen_macaulay_dual_type(int c, int p) {
  if (c < 1 || p < 1) throw Error(ErrorCode::InvalidArgument, "c and p must be positive");
  ResolutionType out;
  out.degrees.push_back(0);
  out.betti.push_back(1);
  for (int j = 1; j <= p; ++j) {
    out.degrees.push_back(c + j - 1);
    out.betti.push_back(betti_cm(p, c, j));
  }
  return out;
}

PureCodim2 pure_codim2_betti(std::int64_t a1, std::int64_t a2, std::int64_t beta0) {
  if (a1 <= 0 || a2 <= a1 || beta0 <= 0) {
    throw Error(ErrorCode::InvalidArgument, "need 0 < a1 < a2 and beta0 > 0");
  }
  PureCodim2 out;
  const std::int64_t gap = a2 - a1;
  if ((a2 * beta0) % gap == 0 && (a1 * beta0) % gap == 0) {
    out.feasible = true;
    out.beta1 = a2 * beta0 / gap;
    out.beta2 = a1 * beta0 / gap;
  }
  if (a1 % gap == 0) out.scaling = std::make_pair(a1 / gap, gap);
  return out;
}

}  // namespace ferrer
