#pragma once

#include <map>
#include <optional>
#include <vector>

#include "polyexp/rootsystem.hpp"

namespace polyexp {

/// Square integer matrix over a dominance-ordered list of dominant weights.
/// matrix[i][j] can be nonzero only when index[j] <= index[i], which places
/// all entries on or right of the diagonal.
class TriangularSystem {
public:
  TriangularSystem() = default;
  TriangularSystem(std::vector<Weight> index, IntMatrix matrix);

  const std::vector<Weight>& index() const { return index_; }
  const IntMatrix& matrix() const { return matrix_; }
  std::size_t size() const { return index_.size(); }

  std::optional<std::size_t> find(const Weight& mu) const;
  std::size_t position(const Weight& mu) const;

  /// Entry (row, col); 0 if col is not indexed.
  Int at(const Weight& row, const Weight& col) const;
  /// Nonzero entries of one row.
  std::map<Weight, Int> row(const Weight& w) const;

  /// Unit diagonal and zeros below it.
  bool is_unitriangular() const;
  /// Entries vanish unless the column weight is dominance-below the row weight.
  bool respects_dominance(const RootSystemData& rs) const;

  /// Exact inverse by back substitution; requires is_unitriangular().
  TriangularSystem inverse() const;

  friend bool operator==(const TriangularSystem& a, const TriangularSystem& b) {
    return a.index_ == b.index_ && a.matrix_ == b.matrix_;
  }

private:
  std::vector<Weight> index_;
  IntMatrix matrix_;
  std::map<Weight, std::size_t> position_;
};

}  // namespace polyexp
