#pragma once

// Tensor product decompositions L(lambda) x L(mu) = sum_nu T^nu L(nu), computed
// by character multiplication, by Racah-Speiser over weight multiplicities,
// and from polytope multiplicities of mu alone.

#include <map>

#include "polyexp/characters.hpp"
#include "polyexp/polytope.hpp"

namespace polyexp {

struct TensorDecomposition {
  Weight left;
  Weight right;
  std::map<Weight, Int> coeffs;  // positive entries only

  friend bool operator==(const TensorDecomposition&, const TensorDecomposition&) = default;
};

TensorDecomposition tensor_bruteforce(const RootSystemData& rs, const Weight& lambda, const Weight& mu);
TensorDecomposition tensor_racah_speiser(const RootSystemData& rs, const Weight& lambda, const Weight& mu);
TensorDecomposition tensor_polytope(const RootSystemData& rs, const Weight& lambda, const Weight& mu);

/// U^nu_{lambda,sigma} = sum_w det(w) delta_sigma(w.nu - lambda)
Int polytope_u_coefficient(const RootSystemData& rs, const Weight& lambda, const Weight& sigma,
                           const Weight& nu);

/// sum_nu T^nu dim(nu)
Int decomposition_dimension(const RootSystemData& rs, const TensorDecomposition& t);

/// Peels irreducible characters off a Weyl-invariant formal sum, highest
/// weights first. Throws std::logic_error if a leading term is not dominant or
/// has a negative coefficient.
std::map<Weight, Int> peel_characters(const RootSystemData& rs, FormalSum remainder);

}  // namespace polyexp
