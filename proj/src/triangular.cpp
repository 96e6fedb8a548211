#include "polyexp/triangular.hpp"

#include <stdexcept>

namespace polyexp {

TriangularSystem::TriangularSystem(std::vector<Weight> index, IntMatrix matrix)
    : index_(std::move(index)), matrix_(std::move(matrix)) {
  if (matrix_.size() != index_.size()) throw std::invalid_argument("triangular system size mismatch");
  for (const auto& r : matrix_)
    if (r.size() != index_.size()) throw std::invalid_argument("triangular system is not square");
  for (std::size_t i = 0; i < index_.size(); ++i)
    if (!position_.emplace(index_[i], i).second)
      throw std::invalid_argument("duplicate weight " + index_[i].str() + " in index");
  for (std::size_t i = 0; i < index_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (matrix_[i][j] != 0) throw std::invalid_argument("entry below the diagonal in triangular system");
}

std::optional<std::size_t> TriangularSystem::find(const Weight& mu) const {
  auto it = position_.find(mu);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::size_t TriangularSystem::position(const Weight& mu) const {
  auto p = find(mu);
  if (!p) throw std::out_of_range("weight " + mu.str() + " is not indexed");
  return *p;
}

Int TriangularSystem::at(const Weight& row, const Weight& col) const {
  auto c = find(col);
  if (!c) return 0;
  return matrix_[position(row)][*c];
}

std::map<Weight, Int> TriangularSystem::row(const Weight& w) const {
  std::map<Weight, Int> out;
  const auto& r = matrix_[position(w)];
  for (std::size_t j = 0; j < r.size(); ++j)
    if (r[j] != 0) out.emplace(index_[j], r[j]);
  return out;
}

bool TriangularSystem::is_unitriangular() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (matrix_[i][i] != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (matrix_[i][j] != 0) return false;
  }
  return true;
}

bool TriangularSystem::respects_dominance(const RootSystemData& rs) const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j)
      if (matrix_[i][j] != 0 && !dominance_leq(rs, index_[j], index_[i])) return false;
  return true;
}

TriangularSystem TriangularSystem::inverse() const {
  if (!is_unitriangular()) throw std::domain_error("matrix is not unitriangular");
  const std::size_t n = size();
  IntMatrix inv(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      Int s = 0;
      for (std::size_t k = i; k < j; ++k)
        if (inv[i][k] != 0 && matrix_[k][j] != 0) s = checked_add(s, checked_mul(inv[i][k], matrix_[k][j]));
      inv[i][j] = checked_neg(s);
    }
  }
  return {index_, std::move(inv)};
}

}  // namespace polyexp
