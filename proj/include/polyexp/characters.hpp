#pragma once

// Weight multiplicities and characters: the Kostant multiplicity formula, the
// Freudenthal recursion (an independent oracle for it), the Weyl dimension
// formula, character-to-orbit matrices M and M^{-1}, and numeric evaluation of
// formal exponential sums.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "polyexp/partition.hpp"
#include "polyexp/rootsystem.hpp"
#include "polyexp/triangular.hpp"
#include "polyexp/weyl.hpp"

namespace polyexp {

/// Finite sum  sum_mu c_mu e^mu  with no zero coefficients stored.
class FormalSum {
public:
  using Map = std::map<Weight, Int>;

  FormalSum() = default;
  explicit FormalSum(Map terms);

  void add(const Weight& mu, Int c);
  Int coeff(const Weight& mu) const;
  const Map& terms() const& { return terms_; }
  Map terms() && { return std::move(terms_); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Sum of all coefficients.
  Int total() const;

  FormalSum& operator+=(const FormalSum& o);
  FormalSum& operator-=(const FormalSum& o);
  friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
  friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
  friend FormalSum operator*(Int k, const FormalSum& a);
  /// Product of formal exponential sums (convolution of the weight supports).
  friend FormalSum operator*(const FormalSum& a, const FormalSum& b);

  friend bool operator==(const FormalSum&, const FormalSum&) = default;

private:
  Map terms_;
};

struct DominantMultMap {
  Weight highest_weight;
  std::map<Weight, Int> mults;

  Int operator()(const Weight& mu) const {
    auto it = mults.find(mu);
    return it == mults.end() ? 0 : it->second;
  }
  friend bool operator==(const DominantMultMap&, const DominantMultMap&) = default;
};

/// K-table height needed by mult_kostant(lambda, mu): the height of lambda - mu
/// (every w.lambda lies below lambda), or -1 if lambda - mu is not in Q.
Int kostant_height_bound(const RootSystemData& rs, const Weight& lambda, const Weight& mu);

/// mult_lambda(mu) = sum_w det(w) K(w.lambda - mu)
Int mult_kostant(const RootSystemData& rs, const Weight& lambda, const Weight& mu);
/// Same, with a caller-supplied K table (must cover kostant_height_bound).
Int mult_kostant(const RootSystemData& rs, const Weight& lambda, const Weight& mu,
                 const PartitionTable& k);
/// All dominant multiplicities of L(lambda) through the Kostant formula.
DominantMultMap dominant_mults_kostant(const RootSystemData& rs, const Weight& lambda);

DominantMultMap mult_freudenthal(const RootSystemData& rs, const Weight& lambda);

/// Weyl dimension formula.
Int dim(const RootSystemData& rs, const Weight& lambda);

/// E_lambda: multiplicity-1 sum over the Weyl orbit of lambda.
FormalSum orbit_sum(const RootSystemData& rs, const Weight& lambda);
/// sum_mu m(mu) E_mu
FormalSum character(const RootSystemData& rs, const DominantMultMap& m);
/// Full character of L(lambda), via Freudenthal.
FormalSum character(const RootSystemData& rs, const Weight& lambda);

/// Row kappa of M^{-1} from the double Weyl sum
///   (|W kappa| / |W|) sum_{x,w} det(w) [x kappa + w rho = mu + rho],
/// restricted to dominant mu.
std::map<Weight, Int> orbit_inverse_row(const RootSystemData& rs, const Weight& kappa);

struct OrbitDecomposition {
  TriangularSystem m;          // M_{kappa,mu} = m_kappa(mu)
  TriangularSystem m_inverse;  // from orbit_inverse_row
};

/// M and M^{-1} over the dominant weights below lambda. The Weyl-sum M^{-1} is
/// checked against direct inversion of M; std::logic_error on disagreement.
OrbitDecomposition orbit_decomposition_matrices(const RootSystemData& rs, const Weight& lambda);

// ---- numeric evaluation

/// <c, mu> where c pairs with the simple-root coordinates of mu, so every
/// positive root pairs positively with c in the open positive orthant.
long double pairing(const RootSystemData& rs, const std::vector<double>& c, const Weight& mu);
long double pairing(const std::vector<double>& c, const RootVector& beta);

/// sum_mu coeff * exp(<c, mu>)
double eval_numeric(const RootSystemData& rs, const FormalSum& fs, const std::vector<double>& c);

/// sum_w det(w) exp(<c, w nu>)
long double alternant(const RootSystemData& rs, const Weight& nu, const std::vector<double>& c);

inline constexpr double kGenericThreshold = 1e-6;

/// Uniform sample from [0.5, 1.5]^r, resampled while any |1 - exp(-<c, alpha>)|
/// over the positive roots falls below kGenericThreshold.
std::vector<double> sample_generic_direction(const RootSystemData& rs, std::mt19937_64& rng);

}  // namespace polyexp
