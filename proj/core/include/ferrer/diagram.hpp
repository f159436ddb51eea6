#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "ferrer/limits.hpp"

namespace ferrer {

/// A point (a_1, ..., a_p) of the positive orthant. The last coordinate is
/// the outermost index of the partition tree, the first one is the leaf axis.
struct Box {
  std::vector<int> coords;

  int depth() const noexcept { return static_cast<int>(coords.size()); }
  /// a_1 + ... + a_p - p + 1, so the corner box (1, ..., 1) sits on diagonal 1.
  int diagonal() const noexcept;

  auto operator<=>(const Box&) const = default;
};

/// A p-Ferrer partition: a positive integer for p = 1, otherwise a nonempty
/// weakly decreasing sequence of (p-1)-partitions. Immutable once built.
class Partition {
 public:
  static Partition leaf(int value);
  /// Validates uniform depth and the weakly decreasing order, never reorders.
  static Partition node(std::vector<Partition> children);

  /// Parses the JSON form (integer or nested arrays). Errors carry the JSON
  /// path of the violation, e.g. NotDecreasing at "$[1]".
  static Partition from_json(const nlohmann::json& tree, const Limits& limits = {});
  /// Rebuilds the partition whose box set is `boxes` (any order, no duplicates).
  static Partition from_boxes(std::span<const Box> boxes, int depth);

  int depth() const noexcept { return depth_; }
  bool is_leaf() const noexcept { return depth_ == 1; }
  int value() const noexcept { return value_; }
  const std::vector<Partition>& children() const noexcept { return children_; }
  std::size_t box_count() const noexcept { return box_count_; }

  nlohmann::json to_json() const;

  bool operator==(const Partition& other) const;

 private:
  Partition() = default;

  int depth_ = 1;
  int value_ = 0;
  std::size_t box_count_ = 0;
  std::vector<Partition> children_;
};

/// True iff boxes(larger) contains boxes(smaller). Depths must agree.
bool contains(const Partition& larger, const Partition& smaller);

/// All boxes in lexicographic order of (a_1, ..., a_p).
std::vector<Box> boxes(const Partition& partition);

enum class Order { less, equal, greater, incomparable };

/// Containment order on box sets; throws DepthMismatch for different depths.
Order compare(const Partition& lhs, const Partition& rhs);

struct DiagonalProfile {
  int depth = 1;
  std::vector<std::int64_t> counts;  // counts[k-1] = s(k), k = 1..delta
  int full = 0;                      // df: number of full diagonals
  int last = 0;                      // delta: index of the last nonempty diagonal

  /// s(k), zero outside 1..delta.
  std::int64_t at(int k) const noexcept;
  std::int64_t total() const noexcept;
};

/// Number of boxes of (N*)^p on diagonal k: C(k+p-2, p-1).
std::int64_t diagonal_capacity(int depth, int k);

DiagonalProfile diagonal_profile(const Partition& partition);

/// The diagram of all boxes with diagonal index <= c (Cohen-Macaulay, codim c).
Partition full_diagram(int depth, int codim);

struct Removal {
  Partition rest;
  Box removed;
};

/// Drops the lexicographically largest box of the last diagonal. Any such box
/// is maximal, so the remainder is again a diagram.
Removal remove_last_diagonal_box(const Partition& partition);

}  // namespace ferrer
