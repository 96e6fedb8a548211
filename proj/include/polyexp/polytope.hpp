#pragma once

// Polytope expansion of characters:  ch_lambda = sum_{mu <= lambda} A_{lambda,mu} B_mu,
// where B_mu is the multiplicity-1 lattice-point sum of the weight polytope
// Pt_mu. A^{-1} has the closed form sum_w det(w) F(kappa - w.mu); A follows by
// triangular inversion.

#include <map>
#include <utility>
#include <vector>

#include "polyexp/characters.hpp"
#include "polyexp/partition.hpp"
#include "polyexp/triangular.hpp"

namespace polyexp {

struct PolytopeMultMap {
  Weight highest_weight;
  std::map<Weight, Int> polyts;  // nonzero entries only

  Int operator()(const Weight& mu) const {
    auto it = polyts.find(mu);
    return it == polyts.end() ? 0 : it->second;
  }
  friend bool operator==(const PolytopeMultMap&, const PolytopeMultMap&) = default;
};

/// Dominant weights mu <= lambda, ordered by ascending height of lambda - mu,
/// ties broken by ascending Dynkin labels. mu <= nu implies mu comes after nu.
std::vector<Weight> dominant_cone_below(const RootSystemData& rs, const Weight& lambda);

/// Height bound of the F table needed for A^{-1} over the cone below lambda.
Int ainv_height_bound(const RootSystemData& rs, const Weight& lambda);

/// A^{-1}_{kappa,mu} = sum_w det(w) F(kappa - w.mu) over the cone below lambda.
TriangularSystem ainv_matrix(const RootSystemData& rs, const Weight& lambda);
TriangularSystem ainv_matrix(const RootSystemData& rs, const Weight& lambda, const FTable& f);

/// Inverse of ainv_matrix: row kappa holds polyt_kappa.
TriangularSystem polytope_matrix(const RootSystemData& rs, const Weight& lambda);

PolytopeMultMap polytope_mults(const RootSystemData& rs, const Weight& lambda);

/// Same numbers via  ch_mu = B_mu - sum_{beta != 0} F(beta) ch_{mu - beta},
/// with non-dominant ch_{nu} folded back by ch_{w.nu} = det(w) ch_nu.
PolytopeMultMap polytope_mults_recursive(const RootSystemData& rs, const Weight& lambda);

/// B_sigma: every weight of Pt_sigma in sigma + Q, coefficient 1.
FormalSum polytope_sum(const RootSystemData& rs, const Weight& sigma);

/// 1 iff kappa lies in Pt_sigma and kappa = sigma mod Q.
int membership(const RootSystemData& rs, const Weight& sigma, const Weight& kappa);

/// lhs: B_lambda evaluated at c; rhs: the vertex-cone sum
///   sum_w exp<c, w lambda> eps(w) exp(-<c, sigma(w)>) prod_{alpha in S} (1 - exp(-<c, |w alpha|>))^{-1}.
/// Throws std::domain_error if some cone factor is closer to zero than
/// kGenericThreshold.
std::pair<double, double> brion_check(const RootSystemData& rs, const Weight& lambda,
                                      const std::vector<double>& c);

/// m_lambda(mu) = sum_{mu <= phi <= lambda} polyt_lambda(phi)
DominantMultMap recover_mults(const RootSystemData& rs, const PolytopeMultMap& pm);

/// b_lambda = sum_mu A^{-1}_{lambda,mu} dim(mu)
Int polytope_dimension(const RootSystemData& rs, const Weight& lambda);

/// sum_mu polyt_lambda(mu) B_mu
FormalSum polytope_expansion(const RootSystemData& rs, const PolytopeMultMap& pm);

}  // namespace polyexp
