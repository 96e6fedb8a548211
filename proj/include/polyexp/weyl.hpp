#pragma once

// Weyl group generation, plain and shifted actions, orbits, dominant
// representatives, and the per-element vertex-cone data sigma(w), eps(w), |wS|.

#include <set>
#include <utility>
#include <vector>

#include "polyexp/rootsystem.hpp"

namespace polyexp {

inline constexpr std::size_t kDefaultWeylGroupCap = 51840;  // |W(E6)|

struct WeylElement {
  IntMatrix matrix;       // action on Dynkin labels (column vectors)
  IntMatrix root_matrix;  // the same element acting on simple-root coordinates
  int det = 1;
  int word_length = 0;

  Weight apply(const Weight& mu) const;
  RootVector apply(const RootVector& beta) const;
};

/// Composition a*b (apply b first).
WeylElement compose(const WeylElement& a, const WeylElement& b);
WeylElement identity_element(const RootSystemData& rs);
WeylElement simple_reflection(const RootSystemData& rs, std::size_t i);

/// Breadth-first closure over the simple reflections. word_length is the BFS
/// depth. Throws std::length_error once more than `cap` elements are found.
std::vector<WeylElement> generate_weyl(const RootSystemData& rs,
                                       std::size_t cap = kDefaultWeylGroupCap);

/// Memoized group for `rs` (default cap), shared across copies of rs and safe
/// to call from several threads.
const std::vector<WeylElement>& weyl_group(const RootSystemData& rs);

/// w.lambda = w(lambda + rho) - rho
Weight shifted_action(const RootSystemData& rs, const WeylElement& w, const Weight& lambda);

std::set<Weight> orbit(const RootSystemData& rs, const Weight& lambda);

/// Dominant weight in the orbit of mu (no group element tracked).
Weight dominant_weight(const RootSystemData& rs, const Weight& mu);

/// (mu+, w) with w mu = mu+ dominant. Reflects by the lowest-index negative
/// label until dominant.
std::pair<Weight, WeylElement> dominant_representative(const RootSystemData& rs, const Weight& mu);

/// Shifted-action reflection to the dominant chamber: if mu + rho is regular,
/// returns (nu, det w) with w.mu = nu dominant; returns nullopt when mu + rho
/// lies on a wall (the alternating sum cancels there).
std::optional<std::pair<Weight, int>> shifted_dominant(const RootSystemData& rs, const Weight& mu);

/// Size of the stabilizer of lambda in W (|W| / |W lambda|).
std::size_t stabilizer_size(const RootSystemData& rs, const Weight& lambda);

struct ConeData {
  WeylElement owner;
  RootVector sigma;                // -sum of wS intersected with R_-
  int epsilon = 1;                 // (-1)^{|wS cap R_-|}
  std::vector<RootVector> abs_wS;  // |w alpha_i| for each simple root, in order
};

ConeData cone_data(const RootSystemData& rs, const WeylElement& w);

/// {alpha in R_+ : w alpha in R_-}
std::vector<RootVector> inversion_set(const RootSystemData& rs, const WeylElement& w);

}  // namespace polyexp
