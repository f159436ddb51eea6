#include "ferrer/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <set>
#include <thread>

#include "ferrer/binomial.hpp"
#include "ferrer/error.hpp"

namespace ferrer {

namespace {

struct Overflow {};

long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow{};
  return out;
}

long long checked_sub(long long a, long long b) {
  long long out;
  if (__builtin_sub_overflow(a, b, &out)) throw Overflow{};
  return out;
}

mpz_class checked_mul(const mpz_class& a, const mpz_class& b) { return a * b; }
mpz_class checked_sub(const mpz_class& a, const mpz_class& b) { return a - b; }

long long gcd_of(long long a, long long b) { return std::gcd(a, b); }
mpz_class gcd_of(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_zero(long long a) { return a == 0; }
bool is_zero(const mpz_class& a) { return a == 0; }

template <typename T>
using Column = std::vector<std::pair<int, T>>;

// c <- a*c - b*o over sorted sparse columns.
template <typename T>
Column<T> combine(const Column<T>& c, const T& a, const Column<T>& o, const T& b) {
  Column<T> out;
  out.reserve(c.size() + o.size());
  std::size_t i = 0, j = 0;
  while (i < c.size() || j < o.size()) {
    if (j == o.size() || (i < c.size() && c[i].first < o[j].first)) {
      out.emplace_back(c[i].first, checked_mul(a, c[i].second));
      ++i;
    } else if (i == c.size() || o[j].first < c[i].first) {
      out.emplace_back(o[j].first, checked_sub(T(0), checked_mul(b, o[j].second)));
      ++j;
    } else {
      T v = checked_sub(checked_mul(a, c[i].second), checked_mul(b, o[j].second));
      if (!is_zero(v)) out.emplace_back(c[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// Fraction-free column reduction: the rank over Q is the number of columns
// that survive with a pivot. Each column is divided by its content.
template <typename T>
std::size_t rank_fraction_free(const std::vector<std::vector<std::pair<int, long long>>>& input) {
  std::vector<Column<T>> reduced;
  std::vector<int> pivot_owner;
  for (const auto& raw : input) {
    Column<T> col;
    col.reserve(raw.size());
    for (const auto& [row, value] : raw) {
      if (value != 0) col.emplace_back(row, T(static_cast<long>(value)));
    }
    while (!col.empty()) {
      const int low = col.back().first;
      if (static_cast<std::size_t>(low) >= pivot_owner.size()) pivot_owner.resize(static_cast<std::size_t>(low) + 1, -1);
      const int owner = pivot_owner[static_cast<std::size_t>(low)];
      if (owner < 0) {
        pivot_owner[static_cast<std::size_t>(low)] = static_cast<int>(reduced.size());
        reduced.push_back(std::move(col));
        break;
      }
      const Column<T>& other = reduced[static_cast<std::size_t>(owner)];
      const T a = other.back().second;
      const T b = col.back().second;
      const T g = gcd_of(a, b);
      col = combine(col, T(a / g), other, T(b / g));
      T content(0);
      for (const auto& entry : col) content = gcd_of(content, entry.second);
      if (!is_zero(content) && !(content == T(1))) {
        for (auto& entry : col) entry.second /= content;
      }
    }
  }
  return reduced.size();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, exp = p - 2;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return result;
}

std::size_t rank_mod_p(const std::vector<std::vector<std::pair<int, long long>>>& input,
                       std::uint64_t p) {
  std::vector<Column<std::uint64_t>> reduced;
  std::vector<int> pivot_owner;
  for (const auto& raw : input) {
    Column<std::uint64_t> col;
    for (const auto& [row, value] : raw) {
      const long long m = ((value % static_cast<long long>(p)) + static_cast<long long>(p)) % static_cast<long long>(p);
      if (m != 0) col.emplace_back(row, static_cast<std::uint64_t>(m));
    }
    while (!col.empty()) {
      const int low = col.back().first;
      if (static_cast<std::size_t>(low) >= pivot_owner.size()) pivot_owner.resize(static_cast<std::size_t>(low) + 1, -1);
      const int owner = pivot_owner[static_cast<std::size_t>(low)];
      if (owner < 0) {
        pivot_owner[static_cast<std::size_t>(low)] = static_cast<int>(reduced.size());
        reduced.push_back(std::move(col));
        break;
      }
      const auto& other = reduced[static_cast<std::size_t>(owner)];
      const std::uint64_t factor = col.back().second * inverse_mod(other.back().second, p) % p;
      Column<std::uint64_t> out;
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < other.size()) {
        if (j == other.size() || (i < col.size() && col[i].first < other[j].first)) {
          out.push_back(col[i++]);
        } else if (i == col.size() || other[j].first < col[i].first) {
          out.emplace_back(other[j].first, (p - factor * other[j].second % p) % p);
          ++j;
        } else {
          const std::uint64_t v = (col[i].second + p - factor * other[j].second % p) % p;
          if (v != 0) out.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col = std::move(out);
    }
  }
  return reduced.size();
}

}  // namespace

std::size_t matrix_rank(const std::vector<std::vector<std::pair<int, long long>>>& columns,
                        const OracleOptions& options) {
  if (options.field == Field::prime) {
    if (options.prime < 2) throw Error(ErrorCode::InvalidArgument, "prime must be >= 2");
    return rank_mod_p(columns, options.prime);
  }
  try {
    return rank_fraction_free<long long>(columns);
  } catch (const Overflow&) {
    return rank_fraction_free<mpz_class>(columns);
  }
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 const std::vector<std::uint32_t>& facets) {
  std::set<std::uint32_t> all;
  for (std::uint32_t facet : facets) {
    // Enumerate every subset of the facet, including the empty face.
    for (std::uint32_t s = facet;; s = (s - 1) & facet) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  return from_closed_faces(vertex_count, std::vector<std::uint32_t>(all.begin(), all.end()));
}

SimplicialComplex SimplicialComplex::from_closed_faces(int vertex_count,
                                                       std::vector<std::uint32_t> faces) {
  if (vertex_count < 0 || vertex_count > 30) {
    throw Error(ErrorCode::InvalidArgument, "vertex count out of range");
  }
  std::sort(faces.begin(), faces.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  SimplicialComplex out;
  out.vertex_count_ = vertex_count;
  out.faces_ = std::move(faces);
  return out;
}

int SimplicialComplex::dimension() const noexcept {
  if (faces_.empty()) return -2;
  return std::popcount(faces_.back()) - 1;
}

std::int64_t SimplicialComplex::reduced_euler_characteristic() const noexcept {
  std::int64_t chi = 0;
  for (std::uint32_t f : faces_) chi += (std::popcount(f) % 2 == 0) ? -1 : 1;
  return chi;
}

std::vector<std::int64_t> SimplicialComplex::reduced_homology(const OracleOptions& options) const {
  if (faces_.empty()) return {};
  const int top = std::popcount(faces_.back());
  // Faces of each size, in the sorted order of faces_.
  std::vector<std::vector<std::uint32_t>> by_size(static_cast<std::size_t>(top) + 1);
  for (std::uint32_t f : faces_) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);

  const bool dense = vertex_count_ <= 20;
  std::vector<int> dense_index;
  if (dense) dense_index.assign(std::size_t{1} << vertex_count_, -1);
  auto index_of = [&](std::size_t size, std::uint32_t face) -> int {
    if (dense) return dense_index[face];
    const auto& list = by_size[size];
    auto it = std::lower_bound(list.begin(), list.end(), face);
    return (it != list.end() && *it == face) ? static_cast<int>(it - list.begin()) : -1;
  };
  if (dense) {
    for (const auto& list : by_size) {
      for (std::size_t i = 0; i < list.size(); ++i) dense_index[list[i]] = static_cast<int>(i);
    }
  }

  // rank[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::int64_t> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 1; s <= top; ++s) {
    std::vector<std::vector<std::pair<int, long long>>> columns;
    columns.reserve(by_size[static_cast<std::size_t>(s)].size());
    for (std::uint32_t face : by_size[static_cast<std::size_t>(s)]) {
      std::vector<std::pair<int, long long>> col;
      int position = 0;
      for (std::uint32_t bits = face; bits != 0; bits &= bits - 1, ++position) {
        const std::uint32_t v = bits & (~bits + 1);
        const int row = index_of(static_cast<std::size_t>(s - 1), face ^ v);
        if (row < 0) {
          throw Error(ErrorCode::InvalidArgument, "face set is not closed under subsets");
        }
        col.emplace_back(row, position % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
      columns.push_back(std::move(col));
    }
    rank[static_cast<std::size_t>(s)] = static_cast<std::int64_t>(matrix_rank(columns, options));
  }

  std::vector<std::int64_t> homology(static_cast<std::size_t>(top) + 1, 0);
  for (int s = 0; s <= top; ++s) {
    homology[static_cast<std::size_t>(s)] =
        static_cast<std::int64_t>(by_size[static_cast<std::size_t>(s)].size()) -
        rank[static_cast<std::size_t>(s)] - rank[static_cast<std::size_t>(s) + 1];
  }
  return homology;
}

std::int64_t GradedBettiTable::at(int j, int degree) const {
  auto it = entries.find({j, degree});
  return it == entries.end() ? 0 : it->second;
}

std::vector<std::int64_t> GradedBettiTable::totals() const {
  std::vector<std::int64_t> out(static_cast<std::size_t>(projdim()) + 1, 0);
  if (entries.empty()) return {};
  for (const auto& [key, value] : entries) out[static_cast<std::size_t>(key.first)] += value;
  return out;
}

int GradedBettiTable::projdim() const {
  int top = 0;
  for (const auto& [key, value] : entries) {
    if (value != 0) top = std::max(top, key.first);
  }
  return top;
}

bool GradedBettiTable::is_linear(int p) const {
  for (const auto& [key, value] : entries) {
    if (key.first >= 1 && value != 0 && key.second != key.first + p - 1) return false;
  }
  return true;
}

nlohmann::json GradedBettiTable::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [key, value] : entries) {
    out.push_back({{"j", key.first}, {"degree", key.second}, {"beta", value}});
  }
  return out;
}

namespace {

// One lcm-lattice element: squarefree ones use `mask`, others `exponents`.
struct Multidegree {
  std::uint32_t mask = 0;
  std::vector<int> exponents;
  int degree = 0;
};

std::vector<int> support_of(const Multidegree& a, int n, bool squarefree) {
  std::vector<int> vars;
  for (int v = 0; v < n; ++v) {
    if (squarefree ? ((a.mask >> v) & 1U) != 0 : a.exponents[static_cast<std::size_t>(v)] > 0) {
      vars.push_back(v);
    }
  }
  return vars;
}

}  // namespace

GradedBettiTable graded_betti_brute(const MonomialIdeal& ideal, const OracleOptions& options,
                                    const Limits& limits) {
  GradedBettiTable table;
  if (ideal.is_zero()) {
    table.entries[{0, 0}] = 1;
    return table;
  }
  if (ideal.generators().front().is_unit()) return table;  // S/I = 0

  const auto& vars = ideal.ambient();
  const int n = static_cast<int>(vars.size());
  if (n > limits.oracle_max_variables) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(n) + " variables exceed the oracle limit " +
                    std::to_string(limits.oracle_max_variables));
  }
  if (ideal.size() > limits.oracle_max_generators) {
    throw Error(ErrorCode::SizeLimitExceeded,
                std::to_string(ideal.size()) + " generators exceed the oracle limit " +
                    std::to_string(limits.oracle_max_generators));
  }
  auto var_index = [&](const Variable& v) {
    return static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };

  const bool squarefree = ideal.is_squarefree();
  std::vector<std::vector<int>> gens;  // dense exponents
  std::vector<std::uint32_t> gen_masks;
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::uint32_t mask = 0;
    for (const auto& [v, exp] : g.factors()) {
      e[static_cast<std::size_t>(var_index(v))] = exp;
      mask |= std::uint32_t{1} << var_index(v);
    }
    gens.push_back(std::move(e));
    gen_masks.push_back(mask);
  }

  // Squarefree membership table: in_ideal[mask] iff some generator is inside mask.
  std::vector<char> in_ideal;
  if (squarefree) {
    in_ideal.assign(std::size_t{1} << n, 0);
    for (std::uint32_t m : gen_masks) in_ideal[m] = 1;
    for (int v = 0; v < n; ++v) {
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (((m >> v) & 1U) != 0 && in_ideal[m ^ (std::uint32_t{1} << v)]) in_ideal[m] = 1;
      }
    }
  }
  auto contains = [&](const std::vector<int>& a) {
    return std::any_of(gens.begin(), gens.end(), [&](const std::vector<int>& g) {
      for (int v = 0; v < n; ++v) {
        if (g[static_cast<std::size_t>(v)] > a[static_cast<std::size_t>(v)]) return false;
      }
      return true;
    });
  };

  // The lcm lattice, closed by repeatedly joining with generators.
  std::vector<Multidegree> lattice;
  if (squarefree) {
    std::vector<char> seen(std::size_t{1} << n, 0);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t m : gen_masks) {
      if (!seen[m]) {
        seen[m] = 1;
        queue.push_back(m);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (std::uint32_t g : gen_masks) {
        const std::uint32_t joined = queue[head] | g;
        if (!seen[joined]) {
          seen[joined] = 1;
          queue.push_back(joined);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    for (std::uint32_t m : queue) lattice.push_back({m, {}, std::popcount(m)});
  } else {
    std::set<std::vector<int>> seen(gens.begin(), gens.end());
    std::vector<std::vector<int>> queue(seen.begin(), seen.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& g : gens) {
        std::vector<int> joined = queue[head];
        for (int v = 0; v < n; ++v) {
          joined[static_cast<std::size_t>(v)] = std::max(joined[static_cast<std::size_t>(v)], g[static_cast<std::size_t>(v)]);
        }
        if (seen.insert(joined).second) queue.push_back(std::move(joined));
      }
    }
    for (const auto& e : seen) {
      lattice.push_back({0, e, std::accumulate(e.begin(), e.end(), 0)});
    }
  }

  std::vector<std::vector<std::int64_t>> homology(lattice.size());
  auto work = [&](std::size_t item) {
    const Multidegree& a = lattice[item];
    const std::vector<int> local = support_of(a, n, squarefree);
    const int w = static_cast<int>(local.size());
    std::vector<std::uint32_t> faces;
    std::vector<std::uint32_t> global(std::size_t{1} << w, 0);
    for (std::uint32_t l = 1; l < (std::uint32_t{1} << w); ++l) {
      global[l] = global[l & (l - 1)] |
                  (std::uint32_t{1} << local[static_cast<std::size_t>(std::countr_zero(l))]);
    }
    for (std::uint32_t l = 0; l < (std::uint32_t{1} << w); ++l) {
      bool face;
      if (squarefree) {
        face = in_ideal[a.mask ^ global[l]] != 0;
      } else {
        std::vector<int> reduced = a.exponents;
        for (int v = 0; v < w; ++v) {
          if ((l >> v) & 1U) --reduced[static_cast<std::size_t>(local[static_cast<std::size_t>(v)])];
        }
        face = contains(reduced);
      }
      if (face) faces.push_back(l);
    }
    homology[item] =
        SimplicialComplex::from_closed_faces(w, std::move(faces)).reduced_homology(options);
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(lattice.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < lattice.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < lattice.size(); i = next++) {
          try {
            work(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  // beta_{j,a}(S/I) = beta_{j-1,a}(I) = rank H~_{j-2}(K^a); homology is indexed by k + 1.
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    for (std::size_t idx = 0; idx < homology[i].size(); ++idx) {
      if (homology[i][idx] == 0) continue;
      const int j = static_cast<int>(idx) + 1;
      table.entries[{j, lattice[i].degree}] += homology[i][idx];
    }
  }
  table.entries[{0, 0}] = 1;
  return table;
}

std::vector<mpz_class> hilbert_function_truncated(const MonomialIdeal& ideal, int max_degree,
                                                  const Limits& limits) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "negative degree bound");
  if (max_degree > limits.max_hilbert_degree) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "degree bound exceeds " + std::to_string(limits.max_hilbert_degree));
  }
  const auto& vars = ideal.ambient();
  const int n = static_cast<int>(vars.size());
  std::vector<mpz_class> counts(static_cast<std::size_t>(max_degree) + 1, 0);
  if (!ideal.is_zero() && ideal.generators().front().is_unit()) return counts;

  auto var_index = [&](const Variable& v) {
    return static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
  };

  if (ideal.is_squarefree()) {
    if (n > 24) throw Error(ErrorCode::SizeLimitExceeded, "too many variables to enumerate");
    // A monomial is standard iff its support contains no generator; there are
    // C(k-1, f-1) monomials of degree k with a given support of size f.
    std::vector<char> in_ideal(std::size_t{1} << n, 0);
    for (const auto& g : ideal.generators()) {
      std::uint32_t m = 0;
      for (const auto& f : g.factors()) m |= std::uint32_t{1} << var_index(f.first);
      in_ideal[m] = 1;
    }
    std::vector<std::int64_t> by_size(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v) {
      for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
        if (((m >> v) & 1U) != 0 && in_ideal[m ^ (std::uint32_t{1} << v)]) in_ideal[m] = 1;
      }
    }
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
      if (!in_ideal[m]) ++by_size[static_cast<std::size_t>(std::popcount(m))];
    }
    for (int k = 0; k <= max_degree; ++k) {
      mpz_class total = 0;
      for (int f = 0; f <= n; ++f) {
        const std::int64_t faces = by_size[static_cast<std::size_t>(f)];
        if (faces == 0) continue;
        if (f == 0) {
          total += k == 0 ? faces : 0;
        } else {
          total += mpz_class(static_cast<long>(faces)) * binomial_big(k - 1, f - 1);
        }
      }
      counts[static_cast<std::size_t>(k)] = total;
    }
    return counts;
  }

  // General case: walk monomials in canonical order (variables non-decreasing),
  // pruning at the first multiple of a generator.
  std::vector<std::vector<int>> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    for (const auto& [v, exp] : g.factors()) e[var_index(v)] = exp;
    gens.push_back(std::move(e));
  }
  std::vector<int> current(static_cast<std::size_t>(n), 0);
  auto in_ideal = [&] {
    return std::any_of(gens.begin(), gens.end(), [&](const std::vector<int>& g) {
      for (int v = 0; v < n; ++v) {
        if (g[static_cast<std::size_t>(v)] > current[static_cast<std::size_t>(v)]) return false;
      }
      return true;
    });
  };
  auto walk = [&](auto&& self, int first, int degree) -> void {
    counts[static_cast<std::size_t>(degree)] += 1;
    if (degree == max_degree) return;
    for (int v = first; v < n; ++v) {
      ++current[static_cast<std::size_t>(v)];
      if (!in_ideal()) self(self, v, degree + 1);
      --current[static_cast<std::size_t>(v)];
    }
  };
  walk(walk, 0, 0);
  return counts;
}

MonomialIdeal intersect_monomial(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  std::vector<Variable> ambient = a.ambient();
  ambient.insert(ambient.end(), b.ambient().begin(), b.ambient().end());
  return MonomialIdeal(std::move(gens), std::move(ambient));
}

}  // namespace ferrer
