#include "polyexp/characters.hpp"

#include <cmath>
#include <set>

#include "polyexp/polytope.hpp"

namespace polyexp {

// ---------------------------------------------------------------- FormalSum

FormalSum::FormalSum(Map terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
}

void FormalSum::add(const Weight& mu, Int c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(mu, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Int FormalSum::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

Int FormalSum::total() const {
  Int s = 0;
  for (const auto& [mu, c] : terms_) s = checked_add(s, c);
  return s;
}

FormalSum& FormalSum::operator+=(const FormalSum& o) {
  for (const auto& [mu, c] : o.terms_) add(mu, c);
  return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o) {
  for (const auto& [mu, c] : o.terms_) add(mu, checked_neg(c));
  return *this;
}

FormalSum operator*(Int k, const FormalSum& a) {
  FormalSum out;
  if (k == 0) return out;
  for (const auto& [mu, c] : a.terms_) out.terms_.emplace(mu, checked_mul(k, c));
  return out;
}

FormalSum operator*(const FormalSum& a, const FormalSum& b) {
  FormalSum out;
  for (const auto& [x, cx] : a.terms_)
    for (const auto& [y, cy] : b.terms_) out.add(x + y, checked_mul(cx, cy));
  return out;
}

// ---------------------------------------------------------------- Kostant

Int kostant_height_bound(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  auto c = root_lattice_coords(rs, lambda - mu);
  if (!c) return -1;
  return c->height();
}

Int mult_kostant(const RootSystemData& rs, const Weight& lambda, const Weight& mu,
                 const PartitionTable& k) {
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
  if (!root_lattice_coords(rs, lambda - mu)) return 0;
  Int total = 0;
  for (const auto& w : weyl_group(rs)) {
    auto gamma = root_lattice_coords(rs, shifted_action(rs, w, lambda) - mu);
    if (!gamma->is_nonnegative()) continue;
    Int kv = k(*gamma);
    if (kv != 0) total = checked_add(total, w.det * kv);
  }
  return total;
}

Int mult_kostant(const RootSystemData& rs, const Weight& lambda, const Weight& mu) {
  Int bound = kostant_height_bound(rs, lambda, mu);
  if (bound < 0) return 0;
  return mult_kostant(rs, lambda, mu, kostant_table(rs, bound));
}

DominantMultMap dominant_mults_kostant(const RootSystemData& rs, const Weight& lambda) {
  auto cone = dominant_cone_below(rs, lambda);
  Int bound = 0;
  for (const auto& mu : cone) bound = std::max(bound, kostant_height_bound(rs, lambda, mu));
  auto k = kostant_table(rs, bound);
  DominantMultMap out{lambda, {}};
  for (const auto& mu : cone) {
    Int m = mult_kostant(rs, lambda, mu, k);
    if (m != 0) out.mults.emplace(mu, m);
  }
  return out;
}

// ---------------------------------------------------------------- Freudenthal

DominantMultMap mult_freudenthal(const RootSystemData& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
  auto cone = dominant_cone_below(rs, lambda);
  std::set<Weight> in_cone(cone.begin(), cone.end());
  DominantMultMap out{lambda, {}};
  const Weight lr = lambda + rs.rho();
  const Rational top = inner_product(rs, lr, lr);

  auto lookup = [&](const Weight& nu) -> std::optional<Int> {
    Weight d = dominant_weight(rs, nu);
    if (!in_cone.contains(d)) return std::nullopt;  // outside the weight polytope
    auto it = out.mults.find(d);
    if (it == out.mults.end()) throw std::logic_error("Freudenthal recursion visited " + d.str() + " early");
    return it->second;
  };

  for (const auto& mu : cone) {
    if (mu == lambda) {
      out.mults.emplace(mu, 1);
      continue;
    }
    Rational rhs(0);
    for (const auto& alpha : rs.positive_roots()) {
      const Weight a = root_to_weight(rs, alpha);
      Weight nu = mu;
      while (true) {
        nu += a;
        auto m = lookup(nu);
        if (!m) break;  // a root string leaves the convex polytope only once
        rhs += inner_product(rs, nu, alpha) * Rational(*m);
      }
    }
    const Weight mr = mu + rs.rho();
    Rational denom = top - inner_product(rs, mr, mr);
    Rational m = Rational(2) * rhs / denom;
    out.mults.emplace(mu, m.to_integer());
  }
  return out;
}

// ---------------------------------------------------------------- dimension

Int dim(const RootSystemData& rs, const Weight& lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
  const Weight lr = lambda + rs.rho();
  Rational d(1);
  for (const auto& alpha : rs.positive_roots())
    d *= inner_product(rs, lr, alpha) / inner_product(rs, rs.rho(), alpha);
  return d.to_integer();
}

// ---------------------------------------------------------------- characters

FormalSum orbit_sum(const RootSystemData& rs, const Weight& lambda) {
  FormalSum e;
  for (const auto& mu : orbit(rs, lambda)) e.add(mu, 1);
  return e;
}

FormalSum character(const RootSystemData& rs, const DominantMultMap& m) {
  FormalSum ch;
  for (const auto& [mu, mult] : m.mults)
    for (const auto& nu : orbit(rs, mu)) ch.add(nu, mult);
  return ch;
}

FormalSum character(const RootSystemData& rs, const Weight& lambda) {
  return character(rs, mult_freudenthal(rs, lambda));
}

// ---------------------------------------------------------------- M and M^{-1}

std::map<Weight, Int> orbit_inverse_row(const RootSystemData& rs, const Weight& kappa) {
  const auto& group = weyl_group(rs);
  std::vector<std::pair<Weight, int>> shifted_rho;  // (w rho - rho, det w)
  shifted_rho.reserve(group.size());
  for (const auto& w : group) shifted_rho.emplace_back(w.apply(rs.rho()) - rs.rho(), w.det);

  std::map<Weight, Int> raw;
  for (const auto& x : group) {
    const Weight xk = x.apply(kappa);
    for (const auto& [w0, det] : shifted_rho) {
      Weight mu = xk + w0;
      if (!mu.is_dominant()) continue;
      raw[mu] = checked_add(raw[mu], det);
    }
  }
  const Int orbit_size = static_cast<Int>(orbit(rs, kappa).size());
  const Int order = static_cast<Int>(group.size());
  std::map<Weight, Int> row;
  for (const auto& [mu, v] : raw) {
    Int entry = exact_div(checked_mul(orbit_size, v), order);
    if (entry != 0) row.emplace(mu, entry);
  }
  return row;
}

OrbitDecomposition orbit_decomposition_matrices(const RootSystemData& rs, const Weight& lambda) {
  auto cone = dominant_cone_below(rs, lambda);
  const std::size_t n = cone.size();
  IntMatrix m(n, std::vector<Int>(n, 0));
  IntMatrix minv(n, std::vector<Int>(n, 0));
  TriangularSystem skeleton(cone, IntMatrix(n, std::vector<Int>(n, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    auto mults = mult_freudenthal(rs, cone[i]);
    for (const auto& [mu, v] : mults.mults) m[i][skeleton.position(mu)] = v;
    for (const auto& [mu, v] : orbit_inverse_row(rs, cone[i])) {
      auto j = skeleton.find(mu);
      if (!j) throw std::logic_error("M^{-1} entry outside the dominant cone at " + mu.str());
      minv[i][*j] = v;
    }
  }
  OrbitDecomposition out{TriangularSystem(cone, std::move(m)), TriangularSystem(cone, std::move(minv))};
  if (!(out.m.inverse() == out.m_inverse))
    throw std::logic_error("Weyl-sum M^{-1} disagrees with the inverse of M for " + lambda.str());
  return out;
}

// ---------------------------------------------------------------- numerics

long double pairing(const RootSystemData& rs, const std::vector<double>& c, const Weight& mu) {
  auto coords = weight_to_root_basis(rs, mu);
  long double s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) s += static_cast<long double>(c[i]) * coords[i].to_long_double();
  return s;
}

long double pairing(const std::vector<double>& c, const RootVector& beta) {
  long double s = 0;
  for (std::size_t i = 0; i < beta.rank(); ++i) s += static_cast<long double>(c[i]) * beta[i];
  return s;
}

double eval_numeric(const RootSystemData& rs, const FormalSum& fs, const std::vector<double>& c) {
  if (c.size() != rs.rank()) throw std::invalid_argument("direction rank mismatch");
  long double s = 0;
  for (const auto& [mu, coeff] : fs.terms()) s += static_cast<long double>(coeff) * std::exp(pairing(rs, c, mu));
  return static_cast<double>(s);
}

long double alternant(const RootSystemData& rs, const Weight& nu, const std::vector<double>& c) {
  long double s = 0;
  for (const auto& w : weyl_group(rs)) s += w.det * std::exp(pairing(rs, c, w.apply(nu)));
  return s;
}

std::vector<double> sample_generic_direction(const RootSystemData& rs, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  while (true) {
    std::vector<double> c(rs.rank());
    for (auto& x : c) x = dist(rng);
    bool generic = true;
    for (const auto& alpha : rs.positive_roots())
      if (std::fabs(1.0L - std::exp(-pairing(c, alpha))) < kGenericThreshold) generic = false;
    if (generic) return c;
  }
}

}  // namespace polyexp
