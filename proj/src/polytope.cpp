#include "polyexp/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>

namespace polyexp {

std::vector<Weight> dominant_cone_below(const RootSystemData& rs, const Weight& lambda) {
  if (lambda.rank() != rs.rank()) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
  // Dominant weights below lambda are connected to lambda through dominant
  // weights differing by positive roots, so a BFS over root subtraction that
  // never leaves P_+ reaches all of them.
  std::vector<Weight> roots;
  for (const auto& a : rs.positive_roots()) roots.push_back(root_to_weight(rs, a));
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (const auto& a : roots) {
      Weight nu = mu - a;
      if (nu.is_dominant() && seen.insert(nu).second) queue.push_back(std::move(nu));
    }
  }
  std::vector<std::pair<Int, Weight>> keyed;
  for (const auto& mu : seen) keyed.emplace_back(root_lattice_coords(rs, lambda - mu)->height(), mu);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Weight> out;
  out.reserve(keyed.size());
  for (auto& [h, mu] : keyed) out.push_back(std::move(mu));
  return out;
}

Int ainv_height_bound(const RootSystemData& rs, const Weight& lambda) {
  Int total_f = 0, two_rho = 0;
  for (const auto& a : rs.positive_roots()) {
    two_rho = checked_add(two_rho, a.height());
    if (a.height() > 1) total_f = checked_add(total_f, a.height());
  }
  // kappa - w.mu <= lambda - w_0.lambda = (lambda - w_0 lambda) + 2 rho
  Weight span = lambda + dominant_weight(rs, -lambda);
  Int need = checked_add(root_lattice_coords(rs, span)->height(), two_rho);
  return std::min(need, total_f);
}

TriangularSystem ainv_matrix(const RootSystemData& rs, const Weight& lambda, const FTable& f) {
  auto cone = dominant_cone_below(rs, lambda);
  const std::size_t n = cone.size();
  const auto& group = weyl_group(rs);
  IntMatrix m(n, std::vector<Int>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::pair<Weight, int>> images;
    images.reserve(group.size());
    for (const auto& w : group) images.emplace_back(shifted_action(rs, w, cone[j]), w.det);
    for (std::size_t i = 0; i < n; ++i) {
      Int s = 0;
      for (const auto& [img, det] : images) {
        RootVector beta = *root_lattice_coords(rs, cone[i] - img);
        if (!beta.is_nonnegative() || beta.height() > f.height_bound) continue;
        Int fv = f(beta);
        if (fv != 0) s = checked_add(s, det * fv);
      }
      m[i][j] = s;
    }
  }
  TriangularSystem t(std::move(cone), std::move(m));
  if (!t.is_unitriangular()) throw std::logic_error("A^{-1} is not unitriangular for " + lambda.str());
  return t;
}

TriangularSystem ainv_matrix(const RootSystemData& rs, const Weight& lambda) {
  return ainv_matrix(rs, lambda, f_table(rs, ainv_height_bound(rs, lambda)));
}

TriangularSystem polytope_matrix(const RootSystemData& rs, const Weight& lambda) {
  return ainv_matrix(rs, lambda).inverse();
}

PolytopeMultMap polytope_mults(const RootSystemData& rs, const Weight& lambda) {
  return {lambda, polytope_matrix(rs, lambda).row(lambda)};
}

PolytopeMultMap polytope_mults_recursive(const RootSystemData& rs, const Weight& lambda) {
  auto cone = dominant_cone_below(rs, lambda);
  const FTable f = f_table(rs);
  // ch_nu written in the B basis, for every dominant nu <= lambda.
  std::map<Weight, std::map<Weight, Int>> in_b;
  for (auto it = cone.rbegin(); it != cone.rend(); ++it) {
    const Weight& mu = *it;
    std::map<Weight, Int> lower;  // sum_{beta != 0} F(beta) ch_{mu-beta}, folded
    for (const auto& [beta, fv] : f.values) {
      if (beta.is_zero()) continue;
      auto folded = shifted_dominant(rs, mu - root_to_weight(rs, beta));
      if (!folded) continue;
      Int& slot = lower[folded->first];
      slot = checked_add(slot, checked_mul(folded->second, fv));
    }
    std::map<Weight, Int> row{{mu, 1}};
    for (const auto& [nu, c] : lower) {
      if (c == 0) continue;
      auto sub = in_b.find(nu);
      if (nu == mu || sub == in_b.end())
        throw std::logic_error("character recursion reached " + nu.str() + " from " + mu.str());
      for (const auto& [sigma, a] : sub->second) row[sigma] = checked_sub(row[sigma], checked_mul(c, a));
    }
    std::erase_if(row, [](const auto& kv) { return kv.second == 0; });
    in_b.emplace(mu, std::move(row));
  }
  return {lambda, in_b.at(lambda)};
}

FormalSum polytope_sum(const RootSystemData& rs, const Weight& sigma) {
  FormalSum b;
  for (const auto& mu : dominant_cone_below(rs, sigma))
    for (const auto& nu : orbit(rs, mu)) b.add(nu, 1);
  return b;
}

int membership(const RootSystemData& rs, const Weight& sigma, const Weight& kappa) {
  if (!sigma.is_dominant()) throw std::invalid_argument("polytope weight must be dominant");
  if (!root_lattice_coords(rs, sigma - kappa)) return 0;
  return dominance_leq(rs, dominant_weight(rs, kappa), sigma) ? 1 : 0;
}

std::pair<double, double> brion_check(const RootSystemData& rs, const Weight& lambda,
                                      const std::vector<double>& c) {
  if (c.size() != rs.rank()) throw std::invalid_argument("direction rank mismatch");
  const double lhs = eval_numeric(rs, polytope_sum(rs, lambda), c);
  long double rhs = 0;
  for (const auto& w : weyl_group(rs)) {
    ConeData cd = cone_data(rs, w);
    long double term = cd.epsilon * std::exp(pairing(rs, c, w.apply(lambda)) - pairing(c, cd.sigma));
    for (const auto& beta : cd.abs_wS) {
      long double denom = 1.0L - std::exp(-pairing(c, beta));
      if (std::fabs(denom) < kGenericThreshold)
        throw std::domain_error("direction is not generic: cone factor vanishes");
      term /= denom;
    }
    rhs += term;
  }
  return {lhs, static_cast<double>(rhs)};
}

DominantMultMap recover_mults(const RootSystemData& rs, const PolytopeMultMap& pm) {
  DominantMultMap out{pm.highest_weight, {}};
  for (const auto& mu : dominant_cone_below(rs, pm.highest_weight)) {
    Int m = 0;
    for (const auto& [phi, a] : pm.polyts)
      if (dominance_leq(rs, mu, phi)) m = checked_add(m, a);
    if (m != 0) out.mults.emplace(mu, m);
  }
  return out;
}

Int polytope_dimension(const RootSystemData& rs, const Weight& lambda) {
  Int b = 0;
  for (const auto& [mu, a] : ainv_matrix(rs, lambda).row(lambda)) b = checked_add(b, checked_mul(a, dim(rs, mu)));
  return b;
}

FormalSum polytope_expansion(const RootSystemData& rs, const PolytopeMultMap& pm) {
  FormalSum out;
  for (const auto& [mu, a] : pm.polyts) out += a * polytope_sum(rs, mu);
  return out;
}

}  // namespace polyexp
