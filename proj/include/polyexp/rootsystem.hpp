#pragma once

// Static data of a simple complex Lie algebra X_r.
//
// Conventions used throughout the library:
//   * weights are integer vectors of Dynkin labels (fundamental-weight basis);
//   * roots are integer vectors in the simple-root basis;
//   * cartan()[i][j] = <alpha_i, alpha_j^vee>, so row i of the Cartan matrix is
//     alpha_i written in the weight basis;
//   * the invariant form is normalized so that long roots have length^2 = 2.
// Node numbering follows Bourbaki (B_r: alpha_r short, C_r: alpha_r long,
// F_4: alpha_1, alpha_2 long, G_2: alpha_1 short).

#include <compare>
#include <cstddef>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "polyexp/arith.hpp"

namespace polyexp {

inline constexpr int kDefaultRankCeiling = 6;

struct AlgebraId {
  char series = 'A';
  int rank = 1;

  std::string str() const { return std::string(1, series) + std::to_string(rank); }
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Parses "A2", "g2", "D4", ... Throws std::invalid_argument on malformed input.
/// Rank restrictions are checked by build_algebra, not here.
AlgebraId parse_algebra(std::string_view text);

/// Throws std::invalid_argument if the series/rank pair is not a simple algebra
/// supported by this library (A>=1, B>=2, C>=3, D>=4, E6-8, F4, G2) or the rank
/// exceeds `max_rank`.
void validate_algebra(const AlgebraId& id, int max_rank = kDefaultRankCeiling);

/// Integer vector of Dynkin labels.
struct Weight {
  std::vector<Int> coords;

  Weight() = default;
  explicit Weight(std::size_t rank) : coords(rank, 0) {}
  Weight(std::initializer_list<Int> c) : coords(c) {}
  explicit Weight(std::vector<Int> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }

  bool is_dominant() const;
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator-(const Weight& a);
  friend Weight operator*(Int k, const Weight& a);

  friend auto operator<=>(const Weight&, const Weight&) = default;

  /// Comma-separated Dynkin labels, e.g. "1,3".
  std::string str() const;
  static Weight parse(std::string_view text);
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Integer vector in the simple-root basis (an element of the root lattice Q).
struct RootVector {
  std::vector<Int> coords;

  RootVector() = default;
  explicit RootVector(std::size_t rank) : coords(rank, 0) {}
  RootVector(std::initializer_list<Int> c) : coords(c) {}
  explicit RootVector(std::vector<Int> c) : coords(std::move(c)) {}

  std::size_t rank() const { return coords.size(); }
  Int operator[](std::size_t i) const { return coords[i]; }
  Int& operator[](std::size_t i) { return coords[i]; }

  /// Sum of the simple-root coordinates.
  Int height() const;
  /// All coordinates >= 0.
  bool is_nonnegative() const;
  bool is_zero() const;

  RootVector& operator+=(const RootVector& o);
  RootVector& operator-=(const RootVector& o);
  friend RootVector operator+(RootVector a, const RootVector& b) { return a += b; }
  friend RootVector operator-(RootVector a, const RootVector& b) { return a -= b; }
  friend RootVector operator-(const RootVector& a);
  friend RootVector operator*(Int k, const RootVector& a);

  friend auto operator<=>(const RootVector&, const RootVector&) = default;

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const RootVector& r);

using RationalVector = std::vector<Rational>;

struct WeylElement;

namespace detail {
// Lazily generated Weyl group, shared by all copies of one RootSystemData.
struct WeylGroupCache {
  std::once_flag once;
  std::shared_ptr<const std::vector<WeylElement>> elements;
  std::exception_ptr error;
};
}  // namespace detail

/// Immutable tables for one simple Lie algebra.
class RootSystemData {
public:
  const AlgebraId& algebra() const { return id_; }
  std::string name() const { return id_.str(); }
  std::size_t rank() const { return cartan_.size(); }

  const IntMatrix& cartan() const { return cartan_; }
  const RationalMatrix& cartan_inverse() const { return cartan_inverse_; }
  /// Positive roots sorted by height, then lexicographically. The first rank()
  /// entries are the simple roots.
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  const std::vector<RootVector>& simple_roots() const { return simple_roots_; }
  /// Gram matrix of the fundamental weights: (Lambda^i, Lambda^j).
  const RationalMatrix& quadratic_form() const { return quadratic_form_; }
  /// (alpha_i, alpha_i) / 2 for each simple root; 1 for long roots.
  const std::vector<Rational>& symmetrizer() const { return symmetrizer_; }
  const Weight& rho() const { return rho_; }
  const RootVector& theta() const { return theta_; }

  bool is_positive_root(const RootVector& r) const { return positive_set_.contains(r); }
  bool is_root(const RootVector& r) const {
    return is_positive_root(r) || is_positive_root(-r);
  }

  /// det(cartan) and adj(cartan) as integers: cartan^{-1} = adjugate / det.
  Int cartan_det() const { return cartan_det_; }
  const IntMatrix& cartan_adjugate() const { return cartan_adj_; }

  std::shared_ptr<detail::WeylGroupCache> weyl_cache() const { return weyl_cache_; }

private:
  friend RootSystemData build_from_cartan(const AlgebraId& id, const IntMatrix& cartan);

  AlgebraId id_;
  IntMatrix cartan_;
  RationalMatrix cartan_inverse_;
  Int cartan_det_ = 1;
  IntMatrix cartan_adj_;
  std::vector<RootVector> positive_roots_;
  std::vector<RootVector> simple_roots_;
  std::set<RootVector> positive_set_;
  RationalMatrix quadratic_form_;
  std::vector<Rational> symmetrizer_;
  Weight rho_;
  RootVector theta_;
  std::shared_ptr<detail::WeylGroupCache> weyl_cache_;
};

/// Standard Cartan matrix of a simple algebra in the conventions above.
IntMatrix standard_cartan_matrix(const AlgebraId& id);

RootSystemData build_algebra(const AlgebraId& id, int max_rank = kDefaultRankCeiling);
RootSystemData build_algebra(std::string_view name, int max_rank = kDefaultRankCeiling);

/// Builds the tables from an arbitrary connected Cartan matrix; `id` is used
/// only as a label. Used for Dynkin sub-diagrams whose node order is not the
/// standard one.
RootSystemData build_from_cartan(const AlgebraId& id, const IntMatrix& cartan);

/// Identifies the series and rank of a connected Cartan matrix.
AlgebraId classify_cartan(const IntMatrix& cartan);

/// Expected |R_+| for a series/rank.
Int positive_root_count(const AlgebraId& id);

RationalVector weight_to_root_basis(const RootSystemData& rs, const Weight& mu);
/// Exact inverse of weight_to_root_basis; throws if the result is not integral.
Weight root_basis_to_weight(const RootSystemData& rs, const RationalVector& c);
Weight root_to_weight(const RootSystemData& rs, const RootVector& root);
/// Root-basis coordinates if mu lies in the root lattice Q.
std::optional<RootVector> root_lattice_coords(const RootSystemData& rs, const Weight& mu);

/// Height of mu: sum of its simple-root coordinates (rational in general).
Rational weight_height(const RootSystemData& rs, const Weight& mu);

/// True iff lambda - mu lies in N_0 S.
bool dominance_leq(const RootSystemData& rs, const Weight& mu, const Weight& lambda);

Rational inner_product(const RootSystemData& rs, const Weight& x, const Weight& y);
Rational inner_product(const RootSystemData& rs, const Weight& x, const RootVector& y);
Rational inner_product(const RootSystemData& rs, const RootVector& x, const RootVector& y);

}  // namespace polyexp
