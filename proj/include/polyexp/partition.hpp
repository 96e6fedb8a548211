#pragma once

// Kostant partition functions K_U for subsets U of the positive roots, and the
// coefficients F of prod_{gamma in R_+ \ S} (1 - e^gamma), tabulated up to a
// height bound.

#include <map>
#include <vector>

#include "polyexp/rootsystem.hpp"

namespace polyexp {

struct PartitionTable {
  std::vector<RootVector> root_subset;
  Int height_bound = 0;
  std::map<RootVector, Int> values;

  /// K_U(gamma); 0 outside the support. Throws std::out_of_range if gamma is
  /// above the height bound, since the table cannot answer that.
  Int operator()(const RootVector& gamma) const;
};

struct FTable {
  Int height_bound = 0;
  std::map<RootVector, Int> values;

  Int operator()(const RootVector& beta) const;
};

PartitionTable kostant_table(const RootSystemData& rs, const std::vector<RootVector>& subset,
                             Int height_bound);
/// K = K_{R_+}
PartitionTable kostant_table(const RootSystemData& rs, Int height_bound);

FTable f_table(const RootSystemData& rs, Int height_bound);
/// Untruncated product; the table is finite for every algebra.
FTable f_table(const RootSystemData& rs);

/// R_+ \ S
std::vector<RootVector> non_simple_positive_roots(const RootSystemData& rs);

}  // namespace polyexp
