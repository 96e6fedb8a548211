#pragma once

// Weight diagrams of two A2 representations, with multiplicities.

#include <map>
#include <utility>

#include "polyexp/characters.hpp"

namespace fixtures {

using polyexp::FormalSum;
using polyexp::Int;
using polyexp::Weight;

/// A2, highest weight (1,3). Weights lambda - i alpha1 - j alpha2 keyed by (i, j).
inline FormalSum a2_13_character() {
  const std::map<std::pair<Int, Int>, Int> by_depth{
      {{1, 1}, 2}, {{1, 2}, 2}, {{2, 2}, 2}, {{1, 3}, 2}, {{2, 3}, 2}, {{3, 3}, 2},
      {{0, 0}, 1}, {{1, 0}, 1}, {{0, 1}, 1}, {{2, 1}, 1}, {{0, 2}, 1}, {{3, 2}, 1},
      {{0, 3}, 1}, {{4, 3}, 1}, {{1, 4}, 1}, {{2, 4}, 1}, {{3, 4}, 1}, {{4, 4}, 1}};
  FormalSum out;
  for (const auto& [ij, m] : by_depth) {
    auto [i, j] = ij;
    out.add(Weight{1 - 2 * i + j, 3 + i - 2 * j}, m);
  }
  return out;
}

/// A2, highest weight (3,2), in Dynkin labels.
inline FormalSum a2_32_character() {
  FormalSum out;
  for (auto [a, b] : {std::pair<Int, Int>{3, 2}, {1, 3}, {-1, 4}, {-3, 5}, {-4, 4}, {-5, 3}, {-4, 1}, {-3, -1},
                      {-2, -3}, {0, -4}, {2, -5}, {3, -4}, {4, -3}, {5, -2}, {4, 0}})
    out.add(Weight{a, b}, 1);
  for (auto [a, b] : {std::pair<Int, Int>{2, 1}, {0, 2}, {-2, 3}, {-3, 2}, {-2, 0}, {-1, -2}, {1, -3}, {2, -2}, {3, -1}})
    out.add(Weight{a, b}, 2);
  for (auto [a, b] : {std::pair<Int, Int>{1, 0}, {-1, 1}, {0, -1}}) out.add(Weight{a, b}, 3);
  return out;
}

}  // namespace fixtures
