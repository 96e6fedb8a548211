#pragma once

// Branching rules L(lambda) -> sum b_{lambda,mubar} Lbar(mubar) for a
// subalgebra given by a projection of weights, computed three ways:
// projected-character peeling, orbit sums (M, e, Mbar^{-1}) and polytope sums
// (A, p, Abar^{-1}).

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "polyexp/characters.hpp"
#include "polyexp/polytope.hpp"

namespace polyexp {

/// Product of simple algebras; weights are the concatenation of the factors'
/// Dynkin labels and every character-like object is the product over factors.
class SemisimpleAlgebra {
public:
  SemisimpleAlgebra() = default;
  explicit SemisimpleAlgebra(std::vector<RootSystemData> factors);

  const std::vector<RootSystemData>& factors() const { return factors_; }
  std::size_t rank() const { return rank_; }
  /// "A1xA1"
  std::string name() const;

  std::vector<Weight> split(const Weight& mu) const;
  Weight join(const std::vector<Weight>& parts) const;

  bool is_dominant(const Weight& mu) const { return mu.is_dominant(); }
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;
  Rational height(const Weight& mu) const;
  Int dim(const Weight& lambda) const;

  FormalSum character(const Weight& lambda) const;
  FormalSum orbit_sum(const Weight& lambda) const;
  FormalSum polytope_sum(const Weight& lambda) const;
  /// Row of Mbar^{-1} (Kronecker product of the factor rows).
  std::map<Weight, Int> orbit_inverse_row(const Weight& kappa) const;
  /// Row of Abar^{-1} (Kronecker product of the factor rows).
  std::map<Weight, Int> ainv_row(const Weight& kappa) const;

private:
  FormalSum product(const std::vector<FormalSum>& parts) const;
  std::map<Weight, Int> kron(const std::vector<std::map<Weight, Int>>& rows) const;

  std::vector<RootSystemData> factors_;
  std::size_t rank_ = 0;
};

struct Embedding {
  RootSystemData parent;
  SemisimpleAlgebra child;
  /// child_rank x parent_rank, acting on Dynkin labels.
  RationalMatrix projection;
  std::string label;

  /// Ibar(mu); throws std::domain_error if a projected label is not an integer.
  Weight project(const Weight& mu) const;
  FormalSum project(const FormalSum& fs) const;
  /// Ibar(alpha_i) lies in the child root lattice for every simple root.
  bool maps_root_lattice() const;
  /// Throws std::invalid_argument unless Ibar maps P into Pbar.
  void validate() const;
};

/// Every parent simple root goes to Dynkin label 2 of A1.
Embedding embedding_principal_a1(const RootSystemData& rs);

/// Regular subalgebra from a set of Dynkin nodes (1-based). The child is the
/// product of the connected components of the induced sub-diagram, ordered by
/// their smallest node; the projection keeps the labels of the kept nodes.
Embedding embedding_regular_subdiagram(const RootSystemData& rs, const std::vector<int>& kept_nodes);

/// Embedding from the images of the parent simple roots in child weight
/// coordinates: images[i] = Ibar(alpha_{i+1}).
Embedding embedding_from_root_images(const RootSystemData& parent, std::vector<RootSystemData> child_factors,
                                     const std::vector<RationalVector>& images);

/// Parses an embedding document:
///   {"parent": "A2", "child": ["A1"], "simple_root_images": [["2"], ["2"]]}
/// Image entries are integers or "p/q" strings.
Embedding parse_embedding_json(std::string_view text);

/// "principal-a1", "subdiagram:1,3", or a path to an embedding JSON file.
Embedding resolve_embedding(const RootSystemData& parent, std::string_view spec);

struct BranchingResult {
  Weight highest_weight;
  std::map<Weight, Int> coeffs;  // positive entries only

  friend bool operator==(const BranchingResult&, const BranchingResult&) = default;
};

BranchingResult branch_bruteforce(const Embedding& emb, const Weight& lambda);
BranchingResult branch_via_orbits(const Embedding& emb, const Weight& lambda);
BranchingResult branch_via_polytopes(const Embedding& emb, const Weight& lambda);

/// e_{mu,mubar}: Ibar E_mu = sum e Ebar_mubar. Entries are non-negative.
std::map<Weight, Int> orbit_branching(const Embedding& emb, const Weight& mu);
/// p_{mu,mubar}: Ibar B_mu = sum p Bbar_mubar.
std::map<Weight, Int> polytope_branching(const Embedding& emb, const Weight& mu);

/// sum_mubar b dimbar(mubar)
Int branching_dimension(const Embedding& emb, const BranchingResult& b);

/// Greedy decomposition of a Weyl-invariant child sum into basis elements
/// basis(nu) whose leading (highest) term is e^nu with coefficient 1.
std::map<Weight, Int> peel(const SemisimpleAlgebra& alg, FormalSum remainder,
                           const std::function<FormalSum(const Weight&)>& basis, bool allow_negative);

}  // namespace polyexp
