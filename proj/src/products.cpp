#include "polyexp/products.hpp"

#include <set>

namespace polyexp {

namespace {

TensorDecomposition finish(const Weight& lambda, const Weight& mu, const std::map<Weight, Int>& raw) {
  TensorDecomposition t{lambda, mu, {}};
  for (const auto& [nu, c] : raw) {
    if (c < 0) throw std::logic_error("negative tensor coefficient at " + nu.str());
    if (c > 0) t.coeffs.emplace(nu, c);
  }
  return t;
}

void check_inputs(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  if (lambda.rank() != rs.rank() || mu.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant() || !mu.is_dominant()) throw std::invalid_argument("tensor factors must be dominant");
}

}  // namespace

std::map<Weight, Int> peel_characters(const RootSystemData& rs, FormalSum remainder) {
  std::map<Weight, Int> out;
  while (!remainder.empty()) {
    const Weight* top = nullptr;
    Rational best;
    for (const auto& [nu, c] : remainder.terms()) {
      Rational h = weight_height(rs, nu);
      if (!top || h > best) {
        top = &nu;
        best = h;
      }
    }
    Weight nu = *top;
    Int c = remainder.coeff(nu);
    if (!nu.is_dominant() || c < 0)
      throw std::logic_error("character peeling failed at " + nu.str() + " (coefficient " + std::to_string(c) + ")");
    out.emplace(nu, c);
    remainder -= c * character(rs, nu);
  }
  return out;
}

TensorDecomposition tensor_bruteforce(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  check_inputs(rs, lambda, mu);
  return finish(lambda, mu, peel_characters(rs, character(rs, lambda) * character(rs, mu)));
}

TensorDecomposition tensor_racah_speiser(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  check_inputs(rs, lambda, mu);
  std::map<Weight, Int> raw;
  for (const auto& [delta, m] : character(rs, mu).terms()) {
    auto folded = shifted_dominant(rs, lambda + delta);
    if (!folded) continue;  // lambda + delta + rho on a wall
    Int& slot = raw[folded->first];
    slot = checked_add(slot, folded->second * m);
  }
  return finish(lambda, mu, raw);
}

Int polytope_u_coefficient(const RootSystemData& rs, const Weight& lambda, const Weight& sigma,
                           const Weight& nu) {
  Int u = 0;
  for (const auto& w : weyl_group(rs)) {
    int d = membership(rs, sigma, shifted_action(rs, w, nu) - lambda);
    if (d != 0 && d != 1) throw std::logic_error("polytope membership outside {0,1}");
    u = checked_add(u, w.det * d);
  }
  return u;
}

TensorDecomposition tensor_polytope(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  check_inputs(rs, lambda, mu);
  const PolytopeMultMap pm = polytope_mults(rs, mu);
  std::set<Weight> candidates;
  for (const auto& [delta, one] : polytope_sum(rs, mu).terms()) candidates.insert(dominant_weight(rs, lambda + delta));
  std::map<Weight, Int> raw;
  for (const auto& nu : candidates) {
    Int t = 0;
    for (const auto& [sigma, a] : pm.polyts) t = checked_add(t, checked_mul(a, polytope_u_coefficient(rs, lambda, sigma, nu)));
    if (t != 0) raw.emplace(nu, t);
  }
  return finish(lambda, mu, raw);
}

Int decomposition_dimension(const RootSystemData& rs, const TensorDecomposition& t) {
  Int s = 0;
  for (const auto& [nu, c] : t.coeffs) s = checked_add(s, checked_mul(c, dim(rs, nu)));
  return s;
}

}  // namespace polyexp
