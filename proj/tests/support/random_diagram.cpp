#include "random_diagram.hpp"

#include <algorithm>
#include <set>

namespace ferrer::testing {

Partition random_diagram(std::mt19937_64& rng, int depth, int extra, int max_coord) {
  std::set<Box> current{Box{std::vector<int>(static_cast<std::size_t>(depth), 1)}};
  for (int step = 0; step < extra; ++step) {
    std::vector<Box> addable;
    for (const Box& b : current) {
      for (int g = 0; g < depth; ++g) {
        Box up = b;
        if (++up.coords[static_cast<std::size_t>(g)] > max_coord || current.contains(up)) continue;
        bool closed = true;
        for (int h = 0; h < depth && closed; ++h) {
          if (up.coords[static_cast<std::size_t>(h)] == 1) continue;
          Box down = up;
          --down.coords[static_cast<std::size_t>(h)];
          closed = current.contains(down);
        }
        if (closed) addable.push_back(std::move(up));
      }
    }
    if (addable.empty()) break;
    std::sort(addable.begin(), addable.end());
    addable.erase(std::unique(addable.begin(), addable.end()), addable.end());
    std::uniform_int_distribution<std::size_t> pick(0, addable.size() - 1);
    current.insert(addable[pick(rng)]);
  }
  std::vector<Box> list(current.begin(), current.end());
  return Partition::from_boxes(list, depth);
}

namespace {

void partitions(int remaining, int largest, std::vector<int>& parts, std::vector<Partition>& out) {
  if (!parts.empty()) {
    std::vector<Partition> children;
    for (int v : parts) children.push_back(Partition::leaf(v));
    out.push_back(Partition::node(std::move(children)));
  }
  for (int v = std::min(remaining, largest); v >= 1; --v) {
    parts.push_back(v);
    partitions(remaining - v, v, parts, out);
    parts.pop_back();
  }
}

// Walks the raw JSON form: entry [i_p-1]...[i_2-1] = v gives boxes (1..v, i_2, ..., i_p).
void nested(const nlohmann::json& tree, std::vector<int>& outer, std::vector<Box>& out) {
  if (tree.is_number_integer()) {
    for (int a = 1; a <= tree.get<int>(); ++a) {
      Box b{{a}};
      for (auto it = outer.rbegin(); it != outer.rend(); ++it) b.coords.push_back(*it);
      out.push_back(std::move(b));
    }
    return;
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    outer.push_back(static_cast<int>(i) + 1);
    nested(tree[i], outer, out);
    outer.pop_back();
  }
}

}  // namespace

std::vector<Partition> all_staircases(int max_boxes) {
  std::vector<Partition> out;
  std::vector<int> parts;
  partitions(max_boxes, max_boxes, parts, out);
  return out;
}

std::vector<Box> boxes_by_nested_loops(const Partition& partition) {
  std::vector<Box> out;
  std::vector<int> outer;
  nested(partition.to_json(), outer, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ferrer::testing
