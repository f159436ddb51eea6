#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "ferrer/diagram.hpp"
#include "ferrer/ideal.hpp"

namespace ferrer {

/// Total Betti numbers of S/I for an ideal generated in degree p.
struct BettiTable {
  int p = 1;
  std::vector<std::int64_t> betti;  // betti[j-1] = beta_j, j = 1..projdim
  bool linear = true;               // beta_j sits in degree j + p - 1

  int projdim() const noexcept { return static_cast<int>(betti.size()); }
  /// beta_j; beta_0 = 1 and zero past projdim.
  std::int64_t at(int j) const noexcept;
  /// {"1": beta_1, "2": beta_2, ...}.
  nlohmann::json to_json() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// C(c+p-1, j+p-1) C(j+p-2, p-1): the Betti numbers of a Cohen-Macaulay
/// p-linear quotient of codimension c. One for j = 0, zero for j > c.
std::int64_t betti_cm(int c, int p, int j);

/// beta_j = betti_cm(c, p, j) + sum_{k=c+1}^{delta} s(k) C(k-1, j-1), c = df.
BettiTable betti_table(const Partition& partition);

/// The same number through the ambient-indexed sum
/// sum_{i=0}^{d-1} s_Phi(n-i) C(n-i-1, j-1) with d = n - c.
std::int64_t betti_ambient_indexed(const DiagonalProfile& profile, int n, int j);

struct MappingConeStep {
  Partition rest;
  Box removed;
  int last_diagonal = 0;  // delta of the original diagram
  BettiTable before;
  BettiTable after;
  /// before_j == after_j + C(delta - 1, j - 1) for every j.
  bool holds = false;
};

MappingConeStep mapping_cone_step(const Partition& partition);

struct Regularity {
  int ideal = 0;
  int quotient = 0;
};

/// (p, p - 1).
Regularity regularity(const Partition& partition);

struct HomologicalSummary {
  int n = 0;  // ambient variables of the Ferrer ideal
  int c = 0;  // height = df
  int d = 0;  // n - c
  int depth = 0;
  int projdim = 0;
  int ara = 0;

  nlohmann::json to_json() const;
};

HomologicalSummary homological_summary(const Partition& partition);

/// Number of variables of each group used by the Ferrer ideal, summed.
int ambient_size(const Partition& partition);

struct AraWitness {
  int diagonal = 0;
  Monomial first;
  Monomial second;
  int witness_diagonal = 0;
  Monomial witness;
};

/// The diagonal classes K_1..K_delta together with a divisor witness for
/// every pair inside each class.
struct AraCertificate {
  std::vector<std::vector<Monomial>> classes;  // classes[j-1] = K_j
  std::vector<AraWitness> witnesses;

  /// Re-checks |K_1| = 1, that every pair in every class has exactly one
  /// witness, and that each witness lies in an earlier class and divides the product.
  bool verify() const;
  nlohmann::json to_json() const;
};

/// Throws CertificateFailure if a constructed witness is not in the diagram.
AraCertificate ara_certificate(const Partition& partition);

/// betti_cm(c, p, j) <= beta_j <= betti_cm(n - depth, p, j) for every j.
bool betti_bounds_check(const BettiTable& table, int c, int n, int depth);

struct ResolutionType {
  std::vector<std::int64_t> degrees;
  std::vector<std::int64_t> betti;

  friend bool operator==(const ResolutionType&, const ResolutionType&) = default;
};

/// Multiplies every degree by alpha and keeps the Betti numbers.
ResolutionType scaled_resolution_type(std::span<const std::int64_t> degrees,
                                      std::span<const std::int64_t> betti, int alpha);

/// The pure type (0, c, c+1, ..., c+p-1) of the dual of a Cohen-Macaulay
/// p-Ferrer ideal of codimension c, with Betti numbers 1, betti_cm(p, c, j).
ResolutionType cohen_macaulay_dual_type(int c, int p);

struct PureCodim2 {
  bool feasible = false;
  std::int64_t beta1 = 0;
  std::int64_t beta2 = 0;
  /// (c, alpha) with a1 = c alpha and a2 = (c+1) alpha, when a2 - a1 divides a1.
  std::optional<std::pair<std::int64_t, std::int64_t>> scaling;
};

/// beta_1 = a2 beta_0 / (a2 - a1), beta_2 = a1 beta_0 / (a2 - a1).
/// Requires 0 < a1 < a2 and beta_0 > 0 (InvalidArgument otherwise).
PureCodim2 pure_codim2_betti(std::int64_t a1, std::int64_t a2, std::int64_t beta0);

}  // namespace ferrer
