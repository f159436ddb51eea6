#include "ferrer/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "ferrer/binomial.hpp"
#include "ferrer/error.hpp"

namespace ferrer {

int Box::diagonal() const noexcept {
  int sum = 0;
  for (int a : coords) sum += a;
  return sum - depth() + 1;
}

namespace {

std::string child_path(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

}  // namespace

bool contains(const Partition& larger, const Partition& smaller) {
  if (larger.depth() != smaller.depth()) {
    throw Error(ErrorCode::DepthMismatch, "partitions of depth " +
                                              std::to_string(larger.depth()) + " and " +
                                              std::to_string(smaller.depth()));
  }
  if (larger.is_leaf()) return larger.value() >= smaller.value();
  const auto& big = larger.children();
  const auto& small = smaller.children();
  if (big.size() < small.size()) return false;
  for (std::size_t j = 0; j < small.size(); ++j) {
    if (!contains(big[j], small[j])) return false;
  }
  return true;
}

Partition Partition::leaf(int value) {
  if (value < 1) {
    throw Error(ErrorCode::NonPositiveLeaf, "leaf value " + std::to_string(value));
  }
  Partition out;
  out.depth_ = 1;
  out.value_ = value;
  out.box_count_ = static_cast<std::size_t>(value);
  return out;
}

namespace {

// Shared by node() and from_json() so that both report the same paths.
Partition checked_node(std::vector<Partition> children, const std::string& path,
                       Partition (*build)(std::vector<Partition>)) {
  if (children.empty()) {
    throw Error(ErrorCode::MalformedInput, "empty partition", path);
  }
  const int depth = children.front().depth();
  for (std::size_t i = 1; i < children.size(); ++i) {
    if (children[i].depth() != depth) {
      throw Error(ErrorCode::NonUniformDepth,
                  "child has depth " + std::to_string(children[i].depth()) + ", expected " +
                      std::to_string(depth),
                  child_path(path, i));
    }
  }
  for (std::size_t i = 1; i < children.size(); ++i) {
    if (!contains(children[i - 1], children[i])) {
      throw Error(ErrorCode::NotDecreasing,
                  "entry " + std::to_string(i) + " exceeds its predecessor",
                  child_path(path, i));
    }
  }
  return build(std::move(children));
}

}  // namespace

Partition Partition::node(std::vector<Partition> children) {
  return checked_node(std::move(children), "$", [](std::vector<Partition> kids) {
    Partition out;
    out.depth_ = kids.front().depth() + 1;
    for (const auto& k : kids) out.box_count_ += k.box_count();
    out.children_ = std::move(kids);
    return out;
  });
}

namespace {

Partition parse(const nlohmann::json& tree, const std::string& path, const Limits& limits,
                int level) {
  if (level > limits.max_depth) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "depth exceeds limit " + std::to_string(limits.max_depth), path);
  }
  if (tree.is_number_integer()) {
    const auto value = tree.get<long long>();
    if (value < 1) {
      throw Error(ErrorCode::NonPositiveLeaf, "leaf value " + std::to_string(value), path);
    }
    if (static_cast<unsigned long long>(value) > limits.max_boxes) {
      throw Error(ErrorCode::SizeLimitExceeded, "leaf exceeds box limit", path);
    }
    return Partition::leaf(static_cast<int>(value));
  }
  if (tree.is_number()) {
    throw Error(ErrorCode::NonPositiveLeaf, "leaf must be a positive integer", path);
  }
  if (!tree.is_array()) {
    throw Error(ErrorCode::MalformedInput, "expected an integer or an array", path);
  }
  if (tree.empty()) {
    throw Error(ErrorCode::MalformedInput, "empty partition", path);
  }
  std::vector<Partition> children;
  children.reserve(tree.size());
  std::size_t total = 0;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    children.push_back(parse(tree[i], child_path(path, i), limits, level + 1));
    total += children.back().box_count();
    if (total > limits.max_boxes) {
      throw Error(ErrorCode::SizeLimitExceeded,
                  "more than " + std::to_string(limits.max_boxes) + " boxes", path);
    }
  }
  // Validate here so violations carry this node's path.
  return checked_node(std::move(children), path, [](std::vector<Partition> kids) {
    return Partition::node(std::move(kids));
  });
}

}  // namespace

Partition Partition::from_json(const nlohmann::json& tree, const Limits& limits) {
  return parse(tree, "$", limits, 1);
}

Partition Partition::from_boxes(std::span<const Box> input, int depth) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be positive");
  if (input.empty()) throw Error(ErrorCode::MalformedInput, "empty box set");
  std::set<Box> all(input.begin(), input.end());
  for (const Box& b : all) {
    if (b.depth() != depth) {
      throw Error(ErrorCode::DepthMismatch, "box of length " + std::to_string(b.depth()));
    }
    for (int i = 0; i < depth; ++i) {
      if (b.coords[i] < 1) {
        throw Error(ErrorCode::NonPositiveLeaf, "box coordinate below 1");
      }
      if (b.coords[i] > 1) {
        Box lower = b;
        --lower.coords[i];
        if (!all.contains(lower)) {
          throw Error(ErrorCode::NotDownwardClosed, "box set is not downward closed");
        }
      }
    }
  }
  if (depth == 1) return leaf(static_cast<int>(all.size()));

  // Slice by the outermost coordinate.
  std::map<int, std::vector<Box>> slices;
  for (const Box& b : all) {
    Box inner{std::vector<int>(b.coords.begin(), b.coords.end() - 1)};
    slices[b.coords.back()].push_back(std::move(inner));
  }
  std::vector<Partition> children;
  children.reserve(slices.size());
  for (auto& [index, slice] : slices) {
    children.push_back(from_boxes(slice, depth - 1));
  }
  return node(std::move(children));
}

nlohmann::json Partition::to_json() const {
  if (is_leaf()) return value_;
  nlohmann::json out = nlohmann::json::array();
  for (const auto& child : children_) out.push_back(child.to_json());
  return out;
}

bool Partition::operator==(const Partition& other) const {
  return depth_ == other.depth_ && value_ == other.value_ && children_ == other.children_;
}

namespace {

void collect(const Partition& partition, std::vector<int>& suffix, std::vector<Box>& out) {
  // suffix holds (a_{k+1}, ..., a_p) in reverse order of nesting.
  if (partition.is_leaf()) {
    for (int a = 1; a <= partition.value(); ++a) {
      Box b;
      b.coords.reserve(suffix.size() + 1);
      b.coords.push_back(a);
      b.coords.insert(b.coords.end(), suffix.rbegin(), suffix.rend());
      out.push_back(std::move(b));
    }
    return;
  }
  const auto& kids = partition.children();
  for (std::size_t i = 0; i < kids.size(); ++i) {
    suffix.push_back(static_cast<int>(i) + 1);
    collect(kids[i], suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<Box> boxes(const Partition& partition) {
  std::vector<Box> out;
  out.reserve(partition.box_count());
  std::vector<int> suffix;
  collect(partition, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Order compare(const Partition& lhs, const Partition& rhs) {
  const bool ge = contains(lhs, rhs);
  const bool le = contains(rhs, lhs);
  if (ge && le) return Order::equal;
  if (ge) return Order::greater;
  if (le) return Order::less;
  return Order::incomparable;
}

std::int64_t DiagonalProfile::at(int k) const noexcept {
  if (k < 1 || k > static_cast<int>(counts.size())) return 0;
  return counts[static_cast<std::size_t>(k - 1)];
}

std::int64_t DiagonalProfile::total() const noexcept {
  std::int64_t sum = 0;
  for (auto s : counts) sum += s;
  return sum;
}

std::int64_t diagonal_capacity(int depth, int k) {
  if (k < 1) return 0;
  return binomial(k + depth - 2, depth - 1);
}

DiagonalProfile diagonal_profile(const Partition& partition) {
  DiagonalProfile out;
  out.depth = partition.depth();
  if (partition.is_leaf()) {
    out.counts.assign(static_cast<std::size_t>(partition.value()), 1);
    out.full = out.last = partition.value();
    return out;
  }
  // Slice identity: s(k) = sum_i s_{lambda_i}(k - (i - 1)); the empty slice
  // after the last child caps the number of full diagonals at m.
  const auto& kids = partition.children();
  const int m = static_cast<int>(kids.size());
  out.full = m;
  for (int i = 1; i <= m; ++i) {
    const DiagonalProfile slice = diagonal_profile(kids[static_cast<std::size_t>(i - 1)]);
    out.full = std::min(out.full, slice.full + i - 1);
    out.last = std::max(out.last, slice.last + i - 1);
    if (static_cast<int>(out.counts.size()) < slice.last + i - 1) {
      out.counts.resize(static_cast<std::size_t>(slice.last + i - 1), 0);
    }
    for (int k = 1; k <= slice.last; ++k) {
      out.counts[static_cast<std::size_t>(k + i - 2)] += slice.at(k);
    }
  }
  return out;
}

Partition full_diagram(int depth, int codim) {
  if (depth < 1 || codim < 1) {
    throw Error(ErrorCode::InvalidArgument, "full_diagram needs depth, codim >= 1");
  }
  if (depth == 1) return Partition::leaf(codim);
  std::vector<Partition> rows;
  rows.reserve(static_cast<std::size_t>(codim));
  for (int c = codim; c >= 1; --c) rows.push_back(full_diagram(depth - 1, c));
  return Partition::node(std::move(rows));
}

Removal remove_last_diagonal_box(const Partition& partition) {
  if (partition.box_count() < 2) {
    throw Error(ErrorCode::SingletonDiagram, "cannot remove the only box");
  }
  std::vector<Box> all = boxes(partition);
  int last = 0;
  for (const Box& b : all) last = std::max(last, b.diagonal());
  auto victim = all.end();
  for (auto it = all.begin(); it != all.end(); ++it) {
    if (it->diagonal() == last && (victim == all.end() || *victim < *it)) victim = it;
  }
  Box removed = *victim;
  all.erase(victim);
  return {Partition::from_boxes(all, partition.depth()), std::move(removed)};
}

}  // namespace ferrer
