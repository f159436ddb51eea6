#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ferrer/diagram.hpp"

namespace ferrer::testing {

/// A random diagram of the given depth grown from the corner box by adding
/// `extra` random addable boxes, each coordinate at most `max_coord`.
Partition random_diagram(std::mt19937_64& rng, int depth, int extra, int max_coord);

/// Every 2-Ferrer staircase (integer partition) with at most `max_boxes` boxes.
std::vector<Partition> all_staircases(int max_boxes);

/// Boxes read straight off the nested JSON form, sorted.
std::vector<Box> boxes_by_nested_loops(const Partition& partition);

}  // namespace ferrer::testing
