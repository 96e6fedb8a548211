#include "polyexp/weyl.hpp"

#include <deque>
#include <unordered_set>

namespace polyexp {

namespace {

IntMatrix apply_left(const IntMatrix& g, const IntMatrix& m) { return multiply(g, m); }

struct FlatHash {
  std::size_t operator()(const std::vector<Int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (Int x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ull;
    return h;
  }
};

std::vector<Int> flatten(const IntMatrix& m) {
  std::vector<Int> v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return v;
}

}  // namespace

Weight WeylElement::apply(const Weight& mu) const {
  const std::size_t n = matrix.size();
  Weight out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (matrix[j][k] != 0) s = checked_add(s, checked_mul(matrix[j][k], mu[k]));
    out[j] = s;
  }
  return out;
}

RootVector WeylElement::apply(const RootVector& beta) const {
  const std::size_t n = root_matrix.size();
  RootVector out(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int s = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (root_matrix[j][k] != 0) s = checked_add(s, checked_mul(root_matrix[j][k], beta[k]));
    out[j] = s;
  }
  return out;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  return {multiply(a.matrix, b.matrix), multiply(a.root_matrix, b.root_matrix), a.det * b.det,
          -1};  // length unknown for arbitrary products
}

WeylElement identity_element(const RootSystemData& rs) {
  return {identity_matrix(rs.rank()), identity_matrix(rs.rank()), 1, 0};
}

WeylElement simple_reflection(const RootSystemData& rs, std::size_t i) {
  const std::size_t n = rs.rank();
  const auto& a = rs.cartan();
  WeylElement r = identity_element(rs);
  for (std::size_t j = 0; j < n; ++j) r.matrix[j][i] -= a[i][j];
  for (std::size_t k = 0; k < n; ++k) r.root_matrix[i][k] -= a[k][i];
  r.det = -1;
  r.word_length = 1;
  return r;
}

std::vector<WeylElement> generate_weyl(const RootSystemData& rs, std::size_t cap) {
  const std::size_t n = rs.rank();
  std::vector<WeylElement> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> out{identity_element(rs)};
  std::unordered_set<std::vector<Int>, FlatHash> seen{flatten(out[0].matrix)};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& g : gens) {
      WeylElement next{apply_left(g.matrix, out[head].matrix), apply_left(g.root_matrix, out[head].root_matrix),
                       -out[head].det, out[head].word_length + 1};
      if (!seen.insert(flatten(next.matrix)).second) continue;
      if (out.size() >= cap)
        throw std::length_error("Weyl group of " + rs.name() + " exceeds the cap of " +
                                std::to_string(cap) + " elements");
      out.push_back(std::move(next));
    }
  }
  return out;
}

const std::vector<WeylElement>& weyl_group(const RootSystemData& rs) {
  auto cache = rs.weyl_cache();
  std::call_once(cache->once, [&] {
    try {
      cache->elements = std::make_shared<const std::vector<WeylElement>>(generate_weyl(rs));
    } catch (...) {
      cache->error = std::current_exception();
    }
  });
  if (cache->error) std::rethrow_exception(cache->error);
  return *cache->elements;
}

Weight shifted_action(const RootSystemData& rs, const WeylElement& w, const Weight& lambda) {
  return w.apply(lambda + rs.rho()) - rs.rho();
}

std::set<Weight> orbit(const RootSystemData& rs, const Weight& lambda) {
  const std::size_t n = rs.rank();
  const auto& a = rs.cartan();
  std::set<Weight> seen{lambda};
  std::deque<Weight> queue{lambda};
  while (!queue.empty()) {
    Weight mu = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      if (mu[i] == 0) continue;
      Weight img = mu;
      for (std::size_t j = 0; j < n; ++j) img[j] = checked_sub(img[j], checked_mul(mu[i], a[i][j]));
      if (seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  return seen;
}

Weight dominant_weight(const RootSystemData& rs, const Weight& mu) {
  const std::size_t n = rs.rank();
  const auto& a = rs.cartan();
  Weight x = mu;
  while (true) {
    std::size_t i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i == n) return x;
    Int m = x[i];
    for (std::size_t j = 0; j < n; ++j) x[j] = checked_sub(x[j], checked_mul(m, a[i][j]));
  }
}

std::pair<Weight, WeylElement> dominant_representative(const RootSystemData& rs, const Weight& mu) {
  const std::size_t n = rs.rank();
  const auto& a = rs.cartan();
  Weight x = mu;
  WeylElement w = identity_element(rs);
  while (true) {
    std::size_t i = 0;
    while (i < n && x[i] >= 0) ++i;
    if (i == n) break;
    Int m = x[i];
    for (std::size_t j = 0; j < n; ++j) x[j] = checked_sub(x[j], checked_mul(m, a[i][j]));
    int len = w.word_length;
    w = compose(simple_reflection(rs, i), w);
    w.word_length = len + 1;  // each step crosses one wall towards the chamber
  }
  return {x, w};
}

std::optional<std::pair<Weight, int>> shifted_dominant(const RootSystemData& rs, const Weight& mu) {
  const std::size_t n = rs.rank();
  const auto& a = rs.cartan();
  Weight x = mu + rs.rho();
  int sign = 1;
  while (true) {
    std::size_t i = 0;
    while (i < n && x[i] > 0) ++i;
    if (i == n) break;
    if (x[i] == 0) return std::nullopt;
    Int m = x[i];
    for (std::size_t j = 0; j < n; ++j) x[j] = checked_sub(x[j], checked_mul(m, a[i][j]));
    sign = -sign;
  }
  return std::make_pair(x - rs.rho(), sign);
}

std::size_t stabilizer_size(const RootSystemData& rs, const Weight& lambda) {
  return weyl_group(rs).size() / orbit(rs, lambda).size();
}

ConeData cone_data(const RootSystemData& rs, const WeylElement& w) {
  ConeData cd;
  cd.owner = w;
  cd.sigma = RootVector(rs.rank());
  for (const auto& alpha : rs.simple_roots()) {
    RootVector img = w.apply(alpha);
    if (img.is_nonnegative()) {
      cd.abs_wS.push_back(img);
    } else {
      cd.sigma -= img;
      cd.epsilon = -cd.epsilon;
      cd.abs_wS.push_back(-img);
    }
  }
  return cd;
}

std::vector<RootVector> inversion_set(const RootSystemData& rs, const WeylElement& w) {
  std::vector<RootVector> out;
  for (const auto& alpha : rs.positive_roots())
    if (!w.apply(alpha).is_nonnegative()) out.push_back(alpha);
  return out;
}

}  // namespace polyexp
