#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "ferrer/ideal.hpp"
#include "ferrer/limits.hpp"

// Brute-force checks that share no code path with the closed formulas.

namespace ferrer {

enum class Field { rationals, prime };

struct OracleOptions {
  Field field = Field::rationals;
  std::uint32_t prime = 32003;
  unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
};

/// A finite simplicial complex on vertices 0..n-1, faces as bitmasks.
/// The void complex has no faces; the empty complex has only the empty face.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;
  /// Closes `facets` under taking subsets.
  static SimplicialComplex from_facets(int vertex_count, const std::vector<std::uint32_t>& facets);
  /// Faces that are already closed under subsets (not re-checked).
  static SimplicialComplex from_closed_faces(int vertex_count, std::vector<std::uint32_t> faces);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<std::uint32_t>& faces() const noexcept { return faces_; }
  bool is_void() const noexcept { return faces_.empty(); }
  int dimension() const noexcept;

  /// Ranks of reduced homology H~_k for k = -1..dimension(), indexed by k + 1.
  std::vector<std::int64_t> reduced_homology(const OracleOptions& options = {}) const;
  /// Sum over faces of (-1)^dim, the empty face counting -1.
  std::int64_t reduced_euler_characteristic() const noexcept;

 private:
  int vertex_count_ = 0;
  std::vector<std::uint32_t> faces_;  // sorted by size, then value
};

/// Rank of a sparse matrix given by columns of (row, value) pairs with small
/// integer entries. Exact over the rationals or modulo options.prime.
std::size_t matrix_rank(const std::vector<std::vector<std::pair<int, long long>>>& columns,
                        const OracleOptions& options = {});

/// beta_{j,a}(S/I): homological index j, internal degree a. beta_{0,0} = 1.
struct GradedBettiTable {
  std::map<std::pair<int, int>, std::int64_t> entries;

  std::int64_t at(int j, int degree) const;
  /// Total Betti numbers indexed by j = 0..projdim.
  std::vector<std::int64_t> totals() const;
  int projdim() const;
  /// Every entry with j >= 1 sits in degree j + p - 1.
  bool is_linear(int p) const;
  nlohmann::json to_json() const;
};

/// Graded Betti numbers of S/I from the reduced homology of the upper Koszul
/// complexes K^a = {F subset of supp(a) : x^a / x^F in I} over the lcm lattice.
GradedBettiTable graded_betti_brute(const MonomialIdeal& ideal, const OracleOptions& options = {},
                                    const Limits& limits = {});

/// dim_K (S/I)_k for k = 0..max_degree over the ambient variables of I.
std::vector<mpz_class> hilbert_function_truncated(const MonomialIdeal& ideal, int max_degree,
                                                  const Limits& limits = {});

/// I intersected with J, generated by the pairwise lcms.
MonomialIdeal intersect_monomial(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace ferrer
