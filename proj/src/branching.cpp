#include "polyexp/branching.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace polyexp {

// ---------------------------------------------------------------- SemisimpleAlgebra

SemisimpleAlgebra::SemisimpleAlgebra(std::vector<RootSystemData> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("semisimple algebra needs at least one factor");
  for (const auto& f : factors_) rank_ += f.rank();
}

std::string SemisimpleAlgebra::name() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += 'x';
    s += factors_[i].name();
  }
  return s;
}

std::vector<Weight> SemisimpleAlgebra::split(const Weight& mu) const {
  if (mu.rank() != rank_) throw std::invalid_argument("child weight rank mismatch");
  std::vector<Weight> parts;
  std::size_t at = 0;
  for (const auto& f : factors_) {
    parts.emplace_back(std::vector<Int>(mu.coords.begin() + at, mu.coords.begin() + at + f.rank()));
    at += f.rank();
  }
  return parts;
}

Weight SemisimpleAlgebra::join(const std::vector<Weight>& parts) const {
  Weight out;
  for (const auto& p : parts) out.coords.insert(out.coords.end(), p.coords.begin(), p.coords.end());
  return out;
}

bool SemisimpleAlgebra::dominance_leq(const Weight& mu, const Weight& lambda) const {
  auto a = split(mu), b = split(lambda);
  for (std::size_t i = 0; i < factors_.size(); ++i)
    if (!polyexp::dominance_leq(factors_[i], a[i], b[i])) return false;
  return true;
}

Rational SemisimpleAlgebra::height(const Weight& mu) const {
  auto parts = split(mu);
  Rational h(0);
  for (std::size_t i = 0; i < factors_.size(); ++i) h += weight_height(factors_[i], parts[i]);
  return h;
}

Int SemisimpleAlgebra::dim(const Weight& lambda) const {
  auto parts = split(lambda);
  Int d = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) d = checked_mul(d, polyexp::dim(factors_[i], parts[i]));
  return d;
}

FormalSum SemisimpleAlgebra::product(const std::vector<FormalSum>& parts) const {
  // Cartesian product of the factor sums with concatenated weights.
  std::vector<std::pair<std::vector<Weight>, Int>> acc{{{}, 1}};
  for (const auto& p : parts) {
    std::vector<std::pair<std::vector<Weight>, Int>> next;
    for (const auto& [prefix, c] : acc)
      for (const auto& [mu, v] : p.terms()) {
        auto w = prefix;
        w.push_back(mu);
        next.emplace_back(std::move(w), checked_mul(c, v));
      }
    acc = std::move(next);
  }
  FormalSum out;
  for (const auto& [ws, c] : acc) out.add(join(ws), c);
  return out;
}

std::map<Weight, Int> SemisimpleAlgebra::kron(const std::vector<std::map<Weight, Int>>& rows) const {
  std::vector<FormalSum> parts;
  for (const auto& r : rows) parts.emplace_back(FormalSum::Map(r.begin(), r.end()));
  auto terms = product(parts).terms();
  return {terms.begin(), terms.end()};
}

FormalSum SemisimpleAlgebra::character(const Weight& lambda) const {
  auto parts = split(lambda);
  std::vector<FormalSum> sums;
  for (std::size_t i = 0; i < factors_.size(); ++i) sums.push_back(polyexp::character(factors_[i], parts[i]));
  return product(sums);
}

FormalSum SemisimpleAlgebra::orbit_sum(const Weight& lambda) const {
  auto parts = split(lambda);
  std::vector<FormalSum> sums;
  for (std::size_t i = 0; i < factors_.size(); ++i) sums.push_back(polyexp::orbit_sum(factors_[i], parts[i]));
  return product(sums);
}

FormalSum SemisimpleAlgebra::polytope_sum(const Weight& lambda) const {
  auto parts = split(lambda);
  std::vector<FormalSum> sums;
  for (std::size_t i = 0; i < factors_.size(); ++i) sums.push_back(polyexp::polytope_sum(factors_[i], parts[i]));
  return product(sums);
}

std::map<Weight, Int> SemisimpleAlgebra::orbit_inverse_row(const Weight& kappa) const {
  auto parts = split(kappa);
  std::vector<std::map<Weight, Int>> rows;
  for (std::size_t i = 0; i < factors_.size(); ++i) rows.push_back(polyexp::orbit_inverse_row(factors_[i], parts[i]));
  return kron(rows);
}

std::map<Weight, Int> SemisimpleAlgebra::ainv_row(const Weight& kappa) const {
  auto parts = split(kappa);
  std::vector<std::map<Weight, Int>> rows;
  for (std::size_t i = 0; i < factors_.size(); ++i) rows.push_back(ainv_matrix(factors_[i], parts[i]).row(parts[i]));
  return kron(rows);
}

// ---------------------------------------------------------------- Embedding

Weight Embedding::project(const Weight& mu) const {
  if (mu.rank() != parent.rank()) throw std::invalid_argument("parent weight rank mismatch");
  Weight out(child.rank());
  for (std::size_t k = 0; k < child.rank(); ++k) {
    Rational s(0);
    for (std::size_t j = 0; j < parent.rank(); ++j)
      if (mu[j] != 0) s += projection[k][j] * Rational(mu[j]);
    if (!s.is_integer())
      throw std::domain_error("projection of " + mu.str() + " is not an integral child weight");
    out[k] = s.num();
  }
  return out;
}

FormalSum Embedding::project(const FormalSum& fs) const {
  FormalSum out;
  for (const auto& [mu, c] : fs.terms()) out.add(project(mu), c);
  return out;
}

bool Embedding::maps_root_lattice() const {
  for (const auto& alpha : parent.simple_roots()) {
    auto parts = child.split(project(root_to_weight(parent, alpha)));
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (!root_lattice_coords(child.factors()[i], parts[i])) return false;
  }
  return true;
}

void Embedding::validate() const {
  if (projection.size() != child.rank()) throw std::invalid_argument("projection has the wrong number of rows");
  for (const auto& row : projection)
    if (row.size() != parent.rank()) throw std::invalid_argument("projection has the wrong number of columns");
  for (std::size_t j = 0; j < parent.rank(); ++j)
    for (std::size_t k = 0; k < child.rank(); ++k)
      if (!projection[k][j].is_integer())
        throw std::invalid_argument("projection of fundamental weight " + std::to_string(j + 1) +
                                    " is not an integral child weight");
}

Embedding embedding_from_root_images(const RootSystemData& parent, std::vector<RootSystemData> child_factors,
                                     const std::vector<RationalVector>& images) {
  SemisimpleAlgebra child(std::move(child_factors));
  const std::size_t n = parent.rank();
  if (images.size() != n) throw std::invalid_argument("need one image per parent simple root");
  for (const auto& img : images)
    if (img.size() != child.rank()) throw std::invalid_argument("simple-root image has the wrong rank");
  // Ibar(Lambda^j) = sum_i (A^{-1})_{ji} Ibar(alpha_i)
  RationalMatrix p(child.rank(), RationalVector(n, Rational(0)));
  for (std::size_t k = 0; k < child.rank(); ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) p[k][j] += parent.cartan_inverse()[j][i] * images[i][k];
  Embedding emb{parent, std::move(child), std::move(p), "custom"};
  emb.validate();
  return emb;
}

Embedding embedding_principal_a1(const RootSystemData& rs) {
  std::vector<RationalVector> images(rs.rank(), RationalVector{Rational(2)});
  Embedding emb = embedding_from_root_images(rs, {build_algebra("A1")}, images);
  emb.label = "principal-a1";
  return emb;
}

Embedding embedding_regular_subdiagram(const RootSystemData& rs, const std::vector<int>& kept_nodes) {
  const int n = static_cast<int>(rs.rank());
  if (kept_nodes.empty()) throw std::invalid_argument("sub-diagram needs at least one node");
  std::set<int> kept;
  for (int k : kept_nodes) {
    if (k < 1 || k > n) throw std::invalid_argument("node " + std::to_string(k) + " out of range for " + rs.name());
    if (!kept.insert(k - 1).second) throw std::invalid_argument("node " + std::to_string(k) + " listed twice");
  }
  // Connected components of the induced sub-diagram.
  std::vector<std::vector<int>> components;
  std::set<int> left = kept;
  while (!left.empty()) {
    std::vector<int> comp{*left.begin()};
    left.erase(left.begin());
    for (std::size_t h = 0; h < comp.size(); ++h)
      for (auto it = left.begin(); it != left.end();) {
        if (rs.cartan()[comp[h]][*it] != 0) {
          comp.push_back(*it);
          it = left.erase(it);
        } else {
          ++it;
        }
      }
    std::sort(comp.begin(), comp.end());
    components.push_back(comp);
  }
  std::vector<RootSystemData> factors;
  std::vector<int> order;
  for (const auto& comp : components) {
    IntMatrix sub(comp.size(), std::vector<Int>(comp.size()));
    for (std::size_t a = 0; a < comp.size(); ++a)
      for (std::size_t b = 0; b < comp.size(); ++b) sub[a][b] = rs.cartan()[comp[a]][comp[b]];
    factors.push_back(build_from_cartan(classify_cartan(sub), sub));
    order.insert(order.end(), comp.begin(), comp.end());
  }
  RationalMatrix p(order.size(), RationalVector(rs.rank(), Rational(0)));
  for (std::size_t k = 0; k < order.size(); ++k) p[k][order[k]] = 1;
  std::string label = "subdiagram:";
  for (std::size_t i = 0; i < kept_nodes.size(); ++i) label += (i ? "," : "") + std::to_string(kept_nodes[i]);
  Embedding emb{rs, SemisimpleAlgebra(std::move(factors)), std::move(p), label};
  emb.validate();
  return emb;
}

Embedding parse_embedding_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("embedding file is not valid JSON: ") + e.what());
  }
  auto need = [&](const char* key) -> const nlohmann::json& {
    if (!doc.contains(key)) throw std::invalid_argument(std::string("embedding file lacks \"") + key + "\"");
    return doc.at(key);
  };
  RootSystemData parent = build_algebra(need("parent").get<std::string>());
  std::vector<RootSystemData> factors;
  const auto& child = need("child");
  if (child.is_string()) {
    factors.push_back(build_algebra(child.get<std::string>()));
  } else {
    for (const auto& c : child) factors.push_back(build_algebra(c.get<std::string>()));
  }
  std::vector<RationalVector> images;
  for (const auto& img : need("simple_root_images")) {
    RationalVector v;
    for (const auto& x : img) {
      if (x.is_string()) v.push_back(Rational::parse(x.get<std::string>()));
      else if (x.is_number_integer()) v.emplace_back(x.get<Int>());
      else throw std::invalid_argument("image entries must be integers or \"p/q\" strings");
    }
    images.push_back(std::move(v));
  }
  return embedding_from_root_images(parent, std::move(factors), images);
}

Embedding resolve_embedding(const RootSystemData& parent, std::string_view spec) {
  if (spec == "principal-a1") return embedding_principal_a1(parent);
  constexpr std::string_view prefix = "subdiagram:";
  if (spec.starts_with(prefix)) {
    std::vector<int> nodes;
    for (Int x : Weight::parse(spec.substr(prefix.size())).coords) nodes.push_back(static_cast<int>(x));
    return embedding_regular_subdiagram(parent, nodes);
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw std::invalid_argument("unknown embedding '" + std::string(spec) + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  Embedding emb = parse_embedding_json(buf.str());
  if (emb.parent.algebra() != parent.algebra())
    throw std::invalid_argument("embedding file is for " + emb.parent.name() + ", not " + parent.name());
  emb.label = std::string(spec);
  return emb;
}

// ---------------------------------------------------------------- routes

std::map<Weight, Int> peel(const SemisimpleAlgebra& alg, FormalSum remainder,
                           const std::function<FormalSum(const Weight&)>& basis, bool allow_negative) {
  std::map<Weight, Rational> heights;
  auto height = [&](const Weight& w) {
    auto it = heights.find(w);
    if (it == heights.end()) it = heights.emplace(w, alg.height(w)).first;
    return it->second;
  };
  std::map<Weight, Int> out;
  while (!remainder.empty()) {
    auto top = remainder.terms().begin();
    Rational best = height(top->first);
    for (auto it = std::next(top); it != remainder.terms().end(); ++it) {
      Rational h = height(it->first);
      if (h > best) {
        best = h;
        top = it;
      }
    }
    const Weight nu = top->first;
    const Int c = top->second;
    if (!alg.is_dominant(nu))
      throw std::logic_error("decomposition failed: leading weight " + nu.str() + " is not dominant");
    if (c < 0 && !allow_negative)
      throw std::logic_error("decomposition failed: negative coefficient at " + nu.str());
    out.emplace(nu, c);
    remainder -= c * basis(nu);
  }
  return out;
}

namespace {

BranchingResult finish(const Weight& lambda, const std::map<Weight, Int>& raw) {
  BranchingResult b{lambda, {}};
  for (const auto& [nu, c] : raw) {
    if (c < 0) throw std::logic_error("negative branching coefficient at " + nu.str());
    if (c > 0) b.coeffs.emplace(nu, c);
  }
  return b;
}

void check_highest(const Embedding& emb, const Weight& lambda) {
  if (lambda.rank() != emb.parent.rank()) throw std::invalid_argument("weight rank mismatch");
  if (!lambda.is_dominant()) throw std::invalid_argument("highest weight must be dominant");
}

}  // namespace

BranchingResult branch_bruteforce(const Embedding& emb, const Weight& lambda) {
  check_highest(emb, lambda);
  FormalSum projected = emb.project(character(emb.parent, lambda));
  return finish(lambda, peel(emb.child, projected, [&](const Weight& nu) { return emb.child.character(nu); }, false));
}

std::map<Weight, Int> orbit_branching(const Embedding& emb, const Weight& mu) {
  return peel(emb.child, emb.project(orbit_sum(emb.parent, mu)),
              [&](const Weight& nu) { return emb.child.orbit_sum(nu); }, false);
}

std::map<Weight, Int> polytope_branching(const Embedding& emb, const Weight& mu) {
  return peel(emb.child, emb.project(polytope_sum(emb.parent, mu)),
              [&](const Weight& nu) { return emb.child.polytope_sum(nu); }, true);
}

BranchingResult branch_via_orbits(const Embedding& emb, const Weight& lambda) {
  check_highest(emb, lambda);
  std::map<Weight, Int> raw;
  std::map<Weight, std::map<Weight, Int>> minv_rows;
  for (const auto& [mu, m] : mult_freudenthal(emb.parent, lambda).mults) {
    for (const auto& [mubar, e] : orbit_branching(emb, mu)) {
      auto it = minv_rows.find(mubar);
      if (it == minv_rows.end()) it = minv_rows.emplace(mubar, emb.child.orbit_inverse_row(mubar)).first;
      for (const auto& [lbar, v] : it->second) {
        Int& slot = raw[lbar];
        slot = checked_add(slot, checked_mul(checked_mul(m, e), v));
      }
    }
  }
  return finish(lambda, raw);
}

BranchingResult branch_via_polytopes(const Embedding& emb, const Weight& lambda) {
  check_highest(emb, lambda);
  std::map<Weight, Int> raw;
  std::map<Weight, std::map<Weight, Int>> ainv_rows;
  for (const auto& [mu, a] : polytope_mults(emb.parent, lambda).polyts) {
    for (const auto& [mubar, p] : polytope_branching(emb, mu)) {
      auto it = ainv_rows.find(mubar);
      if (it == ainv_rows.end()) it = ainv_rows.emplace(mubar, emb.child.ainv_row(mubar)).first;
      for (const auto& [lbar, v] : it->second) {
        Int& slot = raw[lbar];
        slot = checked_add(slot, checked_mul(checked_mul(a, p), v));
      }
    }
  }
  return finish(lambda, raw);
}

Int branching_dimension(const Embedding& emb, const BranchingResult& b) {
  Int s = 0;
  for (const auto& [nu, c] : b.coeffs) s = checked_add(s, checked_mul(c, emb.child.dim(nu)));
  return s;
}

}  // namespace polyexp
