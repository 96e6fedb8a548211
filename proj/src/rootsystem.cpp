#include "polyexp/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace polyexp {

// ---------------------------------------------------------------- Weight

bool Weight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](Int x) { return x >= 0; });
}

bool Weight::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Int x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_add(coords[i], o.coords[i]);
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.rank() != rank()) throw std::invalid_argument("weight rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_sub(coords[i], o.coords[i]);
  return *this;
}

Weight operator-(const Weight& a) {
  Weight r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked_neg(a[i]);
  return r;
}

Weight operator*(Int k, const Weight& a) {
  Weight r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked_mul(k, a[i]);
  return r;
}

std::string Weight::str() const {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return s;
}

Weight Weight::parse(std::string_view text) {
  Weight w;
  if (text.empty()) throw std::invalid_argument("empty weight");
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    Rational q = Rational::parse(piece);
    if (!q.is_integer()) throw std::invalid_argument("weight labels must be integers");
    w.coords.push_back(q.num());
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return w;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << '(' << w.str() << ')'; }

// ---------------------------------------------------------------- RootVector

Int RootVector::height() const {
  Int h = 0;
  for (Int c : coords) h = checked_add(h, c);
  return h;
}

bool RootVector::is_nonnegative() const {
  return std::all_of(coords.begin(), coords.end(), [](Int x) { return x >= 0; });
}

bool RootVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](Int x) { return x == 0; });
}

RootVector& RootVector::operator+=(const RootVector& o) {
  if (o.rank() != rank()) throw std::invalid_argument("root rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_add(coords[i], o.coords[i]);
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& o) {
  if (o.rank() != rank()) throw std::invalid_argument("root rank mismatch");
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = checked_sub(coords[i], o.coords[i]);
  return *this;
}

RootVector operator-(const RootVector& a) {
  RootVector r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked_neg(a[i]);
  return r;
}

RootVector operator*(Int k, const RootVector& a) {
  RootVector r(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) r[i] = checked_mul(k, a[i]);
  return r;
}

std::string RootVector::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(coords[i]);
  }
  return s + "]";
}

std::ostream& operator<<(std::ostream& os, const RootVector& r) { return os << r.str(); }

// ---------------------------------------------------------------- algebra ids

AlgebraId parse_algebra(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad algebra name '" + std::string(text) + "'");
  char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (s < 'A' || s > 'G') throw std::invalid_argument("unknown series in '" + std::string(text) + "'");
  int rank = 0;
  for (char c : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("bad algebra rank in '" + std::string(text) + "'");
    rank = rank * 10 + (c - '0');
    if (rank > 1000) throw std::invalid_argument("algebra rank too large");
  }
  return {s, rank};
}

void validate_algebra(const AlgebraId& id, int max_rank) {
  const int r = id.rank;
  bool ok = false;
  switch (id.series) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 3; break;
    case 'D': ok = r >= 4; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default: break;
  }
  if (!ok) throw std::invalid_argument("invalid simple algebra " + id.str());
  if (r > max_rank)
    throw std::invalid_argument(id.str() + " exceeds the supported rank ceiling " +
                                std::to_string(max_rank));
}

Int positive_root_count(const AlgebraId& id) {
  const Int r = id.rank;
  switch (id.series) {
    case 'A': return r * (r + 1) / 2;
    case 'B':
    case 'C': return r * r;
    case 'D': return r * (r - 1);
    case 'E': return r == 6 ? 36 : (r == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    default: throw std::invalid_argument("unknown series");
  }
}

IntMatrix standard_cartan_matrix(const AlgebraId& id) {
  validate_algebra(id, 8);
  const std::size_t n = static_cast<std::size_t>(id.rank);
  IntMatrix a = identity_matrix(n);
  for (auto& row : a)
    for (auto& x : row) x *= 2;
  auto link = [&](std::size_t i, std::size_t j, Int aij = -1, Int aji = -1) {
    a[i][j] = aij;
    a[j][i] = aji;
  };
  switch (id.series) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -2, -1);  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 2, n - 1, -1, -2);  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2, -2, -1);
      link(2, 3);
      break;
    case 'G':
      link(0, 1, -1, -3);  // alpha_1 short
      break;
    default: break;
  }
  return a;
}

namespace {

// Fraction-free determinant (Bareiss).
Int determinant(IntMatrix m) {
  const std::size_t n = m.size();
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])),
                            prev);
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool connected(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<bool> seen(n, false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && a[i][j] != 0) {
        seen[j] = true;
        queue.push_back(j);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

// (alpha_i, alpha_i)/2 from A_ij D_j = A_ji D_i, scaled so the longest is 1.
std::vector<Rational> symmetrizer_of(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> set(n, false);
  d[0] = 1;
  set[0] = true;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    auto i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || a[i][j] == 0) continue;
      if (a[j][i] == 0) throw std::invalid_argument("Cartan matrix is not symmetrizable");
      Rational dj = d[i] * Rational(a[j][i], a[i][j]);
      if (!set[j]) {
        d[j] = dj;
        set[j] = true;
        queue.push_back(j);
      } else if (d[j] != dj) {
        throw std::invalid_argument("Cartan matrix is not symmetrizable");
      }
    }
  }
  Rational mx = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= mx;
  return d;
}

}  // namespace

AlgebraId classify_cartan(const IntMatrix& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0 || !connected(a)) throw std::invalid_argument("Cartan matrix is not connected");
  // finite type: every leading principal minor is positive
  for (int k = 1; k <= n; ++k) {
    IntMatrix minor(k, std::vector<Int>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = a[i][j];
    if (determinant(minor) <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
  auto d = symmetrizer_of(a);
  int shorts = static_cast<int>(std::count_if(d.begin(), d.end(), [](const Rational& x) { return x != 1; }));
  int edges = 0, branch = 0;
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    for (int j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0) ++deg;
    edges += deg;
    if (deg >= 3) ++branch;
  }
  edges /= 2;
  if (edges != n - 1) throw std::invalid_argument("Cartan matrix is not of finite type");
  if (shorts == 0) {
    if (branch == 0) return {'A', n};
    // Branch node: D or E depending on arm lengths.
    int b = 0;
    for (int i = 0; i < n; ++i) {
      int deg = 0;
      for (int j = 0; j < n; ++j)
        if (i != j && a[i][j] != 0) ++deg;
      if (deg == 3) b = i;
    }
    std::vector<int> arms;
    for (int j = 0; j < n; ++j) {
      if (j == b || a[b][j] == 0) continue;
      int len = 1, prev = b, cur = j;
      while (true) {
        int next = -1;
        for (int k = 0; k < n; ++k)
          if (k != cur && k != prev && a[cur][k] != 0) next = k;
        if (next < 0) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', n};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {'E', n};
    throw std::invalid_argument("Cartan matrix is not of finite type");
  }
  if (n == 2) {
    Int prod = a[0][1] * a[1][0];
    if (prod == 3) return {'G', 2};
    if (prod == 2) return {'B', 2};
  }
  if (n == 4 && shorts == 2) return {'F', 4};
  return shorts == 1 ? AlgebraId{'B', n} : AlgebraId{'C', n};
}

RootSystemData build_from_cartan(const AlgebraId& id, const IntMatrix& cartan) {
  const std::size_t n = cartan.size();
  if (n == 0) throw std::invalid_argument("empty Cartan matrix");
  for (const auto& row : cartan)
    if (row.size() != n) throw std::invalid_argument("Cartan matrix is not square");
  if (!connected(cartan)) throw std::invalid_argument("Cartan matrix is not connected");
  if (classify_cartan(cartan) != id)
    throw std::invalid_argument("Cartan matrix is not of type " + id.str());

  RootSystemData rs;
  rs.id_ = id;
  rs.cartan_ = cartan;
  rs.cartan_inverse_ = rational_inverse(cartan);
  rs.cartan_det_ = determinant(cartan);
  rs.cartan_adj_.assign(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.cartan_adj_[i][j] = (rs.cartan_inverse_[i][j] * Rational(rs.cartan_det_)).to_integer();
  rs.symmetrizer_ = symmetrizer_of(cartan);

  // All roots are W-images of simple roots: close under simple reflections
  // r_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
  std::set<RootVector> roots;
  std::deque<RootVector> queue;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector a(n);
    a[i] = 1;
    rs.simple_roots_.push_back(a);
    roots.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    RootVector beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < n; ++i) {
      Int pairing = 0;
      for (std::size_t k = 0; k < n; ++k) pairing = checked_add(pairing, checked_mul(beta[k], cartan[k][i]));
      if (pairing == 0) continue;
      RootVector img = beta;
      img[i] = checked_sub(img[i], pairing);
      if (roots.insert(img).second) {
        if (roots.size() > 100000) throw std::invalid_argument("root system is infinite");
        queue.push_back(img);
      }
    }
  }
  for (const auto& r : roots) {
    if (r.is_nonnegative()) rs.positive_roots_.push_back(r);
    else if (!(-r).is_nonnegative()) throw std::logic_error("root with mixed-sign coordinates");
  }
  std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
            [](const RootVector& x, const RootVector& y) {
              auto hx = x.height(), hy = y.height();
              if (hx != hy) return hx < hy;
              return y < x;  // within a height, alpha_1-heavy first
            });
  rs.positive_set_.insert(rs.positive_roots_.begin(), rs.positive_roots_.end());

  rs.theta_ = rs.positive_roots_.back();
  if (rs.positive_roots_.size() > 1 &&
      rs.positive_roots_[rs.positive_roots_.size() - 2].height() == rs.theta_.height())
    throw std::logic_error("highest root is not unique");

  // (Lambda^i, Lambda^j) = (A^{-1})_{ji} D_i
  rs.quadratic_form_.assign(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.quadratic_form_[i][j] = rs.cartan_inverse_[j][i] * rs.symmetrizer_[i];

  rs.rho_ = Weight(std::vector<Int>(n, 1));
  rs.weyl_cache_ = std::make_shared<detail::WeylGroupCache>();
  return rs;
}

RootSystemData build_algebra(const AlgebraId& id, int max_rank) {
  validate_algebra(id, max_rank);
  RootSystemData rs = build_from_cartan(id, standard_cartan_matrix(id));
  if (static_cast<Int>(rs.positive_roots().size()) != positive_root_count(id))
    throw std::logic_error("positive root count mismatch for " + id.str());
  return rs;
}

RootSystemData build_algebra(std::string_view name, int max_rank) {
  return build_algebra(parse_algebra(name), max_rank);
}

// ---------------------------------------------------------------- conversions

RationalVector weight_to_root_basis(const RootSystemData& rs, const Weight& mu) {
  const std::size_t n = rs.rank();
  if (mu.rank() != n) throw std::invalid_argument("weight rank mismatch");
  // mu_j = sum_i c_i A_ij, so c = mu A^{-1}.
  RationalVector c(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s = checked_add(s, checked_mul(mu[j], rs.cartan_adjugate()[j][i]));
    c[i] = Rational(s, rs.cartan_det());
  }
  return c;
}

Weight root_basis_to_weight(const RootSystemData& rs, const RationalVector& c) {
  const std::size_t n = rs.rank();
  if (c.size() != n) throw std::invalid_argument("root vector rank mismatch");
  Weight mu(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational s(0);
    for (std::size_t i = 0; i < n; ++i) s += c[i] * Rational(rs.cartan()[i][j]);
    mu[j] = s.to_integer();
  }
  return mu;
}

Weight root_to_weight(const RootSystemData& rs, const RootVector& root) {
  const std::size_t n = rs.rank();
  if (root.rank() != n) throw std::invalid_argument("root vector rank mismatch");
  Weight mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (root[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) mu[j] = checked_add(mu[j], checked_mul(root[i], rs.cartan()[i][j]));
  }
  return mu;
}

std::optional<RootVector> root_lattice_coords(const RootSystemData& rs, const Weight& mu) {
  const std::size_t n = rs.rank();
  if (mu.rank() != n) throw std::invalid_argument("weight rank mismatch");
  RootVector c(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < n; ++j) s = checked_add(s, checked_mul(mu[j], rs.cartan_adjugate()[j][i]));
    if (s % rs.cartan_det() != 0) return std::nullopt;
    c[i] = s / rs.cartan_det();
  }
  return c;
}

Rational weight_height(const RootSystemData& rs, const Weight& mu) {
  Rational h(0);
  for (const auto& x : weight_to_root_basis(rs, mu)) h += x;
  return h;
}

bool dominance_leq(const RootSystemData& rs, const Weight& mu, const Weight& lambda) {
  auto c = root_lattice_coords(rs, lambda - mu);
  return c && c->is_nonnegative();
}

Rational inner_product(const RootSystemData& rs, const Weight& x, const Weight& y) {
  const std::size_t n = rs.rank();
  if (x.rank() != n || y.rank() != n) throw std::invalid_argument("weight rank mismatch");
  // (x, y) = sum_j x_j D_j c_j where c = root coordinates of y.
  auto c = weight_to_root_basis(rs, y);
  Rational s(0);
  for (std::size_t j = 0; j < n; ++j)
    if (x[j] != 0) s += Rational(x[j]) * rs.symmetrizer()[j] * c[j];
  return s;
}

Rational inner_product(const RootSystemData& rs, const Weight& x, const RootVector& y) {
  Rational s(0);
  for (std::size_t j = 0; j < rs.rank(); ++j)
    if (x[j] != 0 && y[j] != 0) s += Rational(checked_mul(x[j], y[j])) * rs.symmetrizer()[j];
  return s;
}

Rational inner_product(const RootSystemData& rs, const RootVector& x, const RootVector& y) {
  return inner_product(rs, root_to_weight(rs, x), y);
}

}  // namespace polyexp
