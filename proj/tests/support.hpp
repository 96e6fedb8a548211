#pragma once

// Suites and brute-force oracles shared by the unit tests and the acceptance
// runner. Nothing here calls the routine it is used to check.

#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "polyexp/characters.hpp"
#include "polyexp/rootsystem.hpp"

namespace testsupport {

using namespace polyexp;

/// <lambda, theta> with long roots of length^2 2.
inline Int level(const RootSystemData& rs, const Weight& lambda) {
  return inner_product(rs, lambda, rs.theta()).to_integer();
}

/// Dominant weights with <lambda, theta> <= max_level.
inline std::vector<Weight> dominant_weights_up_to(const RootSystemData& rs, Int max_level) {
  std::vector<Weight> out;
  Weight w(rs.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rs.rank()) {
      if (level(rs, w) <= max_level) out.push_back(w);
      return;
    }
    for (Int v = 0; v <= max_level; ++v) {
      w[i] = v;
      rec(i + 1);
    }
    w[i] = 0;
  };
  rec(0);
  return out;
}

/// Number of ways to write gamma as a non-negative combination of roots[k..].
inline Int count_partitions(const std::vector<RootVector>& roots, const RootVector& gamma, std::size_t k = 0) {
  if (gamma.is_zero()) return 1;
  if (k == roots.size() || !gamma.is_nonnegative()) return 0;
  Int total = 0;
  RootVector rest = gamma;
  while (rest.is_nonnegative()) {
    total += count_partitions(roots, rest, k + 1);
    rest -= roots[k];
  }
  return total;
}

/// Root coordinates of every gamma >= 0 with height <= h.
inline std::vector<RootVector> nonnegative_root_vectors(std::size_t rank, Int h) {
  std::vector<RootVector> out;
  RootVector g(rank);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
    if (i == rank) {
      out.push_back(g);
      return;
    }
    for (Int v = 0; v <= left; ++v) {
      g[i] = v;
      rec(i + 1, left - v);
    }
    g[i] = 0;
  };
  rec(0, h);
  return out;
}

/// Dominant mu with lambda - mu in N0 S, found by scanning a box of labels.
inline std::set<Weight> dominant_cone_by_box(const RootSystemData& rs, const Weight& lambda) {
  Int bound = 0;
  for (std::size_t i = 0; i < rs.rank(); ++i) bound += lambda[i];
  bound *= 3;
  std::set<Weight> out;
  Weight mu(rs.rank());
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == rs.rank()) {
      auto r = root_lattice_coords(rs, lambda - mu);
      if (r && r->is_nonnegative()) out.insert(mu);
      return;
    }
    for (Int v = 0; v <= bound; ++v) {
      mu[i] = v;
      rec(i + 1);
    }
    mu[i] = 0;
  };
  rec(0);
  return out;
}

/// Rank-2 convex hull test: kappa lies in conv(points) iff it lies in one of
/// the triangles spanned by three of them (or on a segment / at a point).
/// Coordinates are simple-root coordinates, which is an affine chart.
inline bool in_hull_2d(const std::vector<RationalVector>& pts, const RationalVector& k) {
  auto cross = [](const RationalVector& o, const RationalVector& a, const RationalVector& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  auto on_segment = [&](const RationalVector& a, const RationalVector& b) {
    if (cross(a, b, k) != Rational(0)) return false;
    for (int t = 0; t < 2; ++t) {
      Rational lo = std::min(a[t], b[t]), hi = std::max(a[t], b[t]);
      if (k[t] < lo || k[t] > hi) return false;
    }
    return true;
  };
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (pts[i] == k) return true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (on_segment(pts[i], pts[j])) return true;
      for (std::size_t l = j + 1; l < n; ++l) {
        if (cross(pts[i], pts[j], pts[l]) == Rational(0)) continue;
        Rational d1 = cross(pts[i], pts[j], k), d2 = cross(pts[j], pts[l], k), d3 = cross(pts[l], pts[i], k);
        bool neg = d1 < Rational(0) || d2 < Rational(0) || d3 < Rational(0);
        bool pos = d1 > Rational(0) || d2 > Rational(0) || d3 > Rational(0);
        if (!(neg && pos)) return true;
      }
    }
  }
  return false;
}

/// Weyl denominator prod_{alpha > 0} (e^{<c,alpha>/2} - e^{-<c,alpha>/2}).
inline long double weyl_denominator(const RootSystemData& rs, const std::vector<double>& c) {
  long double p = 1;
  for (const auto& alpha : rs.positive_roots()) {
    long double t = pairing(c, alpha);
    p *= std::exp(t / 2) - std::exp(-t / 2);
  }
  return p;
}

inline double relative_error(double lhs, double rhs) { return std::fabs(lhs - rhs) / std::max(std::fabs(lhs), 1.0); }

}  // namespace testsupport
