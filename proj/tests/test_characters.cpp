#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "polyexp/characters.hpp"
#include "polyexp/partition.hpp"
#include "polyexp/polytope.hpp"
#include "support.hpp"

using namespace polyexp;
using testsupport::dominant_weights_up_to;

TEST_CASE("weight diagram of A2 (1,3)") {
  auto rs = build_algebra("A2");
  auto ch = character(rs, Weight{1, 3});
  CHECK(ch == fixtures::a2_13_character());
  CHECK(ch.total() == 24);
  auto m = mult_freudenthal(rs, Weight{1, 3});
  CHECK(m(Weight{1, 3}) == 1);
  CHECK(m(Weight{1, 3} - Weight{1, 1}) == 2);  // lambda - alpha1 - alpha2
  CHECK(m.mults.size() == 4);
  CHECK(m(Weight{2, 1}) == 1);
  CHECK(m(Weight{0, 2}) == 2);
  CHECK(m(Weight{1, 0}) == 2);
}

TEST_CASE("weight diagram of A2 (3,2)") {
  auto rs = build_algebra("A2");
  CHECK(character(rs, Weight{3, 2}) == fixtures::a2_32_character());
  CHECK(dim(rs, Weight{3, 2}) == 42);
  CHECK(mult_freudenthal(rs, Weight{3, 2})(Weight{1, 0}) == 3);
}

TEST_CASE("dimensions") {
  struct Case {
    const char* alg;
    Weight w;
    Int d;
  };
  const Case cases[] = {{"A1", {0}, 1},          {"A1", {5}, 6},           {"A2", {1, 1}, 8},
                        {"A2", {2, 0}, 6},       {"A3", {0, 1, 0}, 6},     {"B2", {1, 0}, 5},
                        {"B2", {0, 1}, 4},       {"B2", {0, 2}, 10},       {"G2", {1, 0}, 7},
                        {"G2", {0, 1}, 14},      {"G2", {1, 1}, 64},       {"B3", {0, 0, 1}, 8},
                        {"C3", {1, 0, 0}, 6},    {"D4", {0, 1, 0, 0}, 28}, {"F4", {0, 0, 0, 1}, 26},
                        {"F4", {1, 0, 0, 0}, 52}, {"E6", {1, 0, 0, 0, 0, 0}, 27}, {"E6", {0, 1, 0, 0, 0, 0}, 78}};
  for (const auto& c : cases) {
    CAPTURE(c.alg);
    CAPTURE(c.w.str());
    auto rs = build_algebra(c.alg);
    CHECK(dim(rs, c.w) == c.d);
  }
  CHECK(dim(build_algebra("E8", 8), Weight{0, 0, 0, 0, 0, 0, 0, 1}) == 248);
  CHECK(dim(build_algebra("E7", 7), Weight{0, 0, 0, 0, 0, 0, 1}) == 56);
}

TEST_CASE("Freudenthal and Kostant agree and sum to the dimension") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3", "C3"}) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    const Int h = rs.rank() == 3 ? 3 : (std::string(name) == "A1" ? 8 : 5);
    for (const auto& lambda : dominant_weights_up_to(rs, h)) {
      CAPTURE(lambda.str());
      auto f = mult_freudenthal(rs, lambda);
      CHECK(f == dominant_mults_kostant(rs, lambda));
      CHECK(character(rs, f).total() == dim(rs, lambda));
      CHECK(f(lambda) == 1);
      // only weights of the dominant cone appear
      for (const auto& [mu, m] : f.mults) {
        CHECK(m > 0);
        CHECK(dominance_leq(rs, mu, lambda));
      }
    }
  }
}

TEST_CASE("multiplicities are Weyl invariant") {
  auto rs = build_algebra("B2");
  Weight lambda{2, 1};
  auto ch = character(rs, lambda);
  for (const auto& [mu, m] : ch.terms()) {
    CHECK(mult_kostant(rs, lambda, mu) == m);
    for (const auto& w : weyl_group(rs)) CHECK(ch.coeff(w.apply(mu)) == m);
  }
  CHECK(mult_kostant(rs, lambda, Weight{9, 9}) == 0);
  CHECK(mult_kostant(rs, lambda, Weight{1, 0}) == 0);  // outside lambda + Q
}

TEST_CASE("Weyl character formula, evaluated numerically") {
  std::mt19937_64 rng(7);
  for (const char* name : {"A2", "B2", "G2", "A3", "C3"}) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    for (const auto& lambda : dominant_weights_up_to(rs, 3)) {
      auto c = sample_generic_direction(rs, rng);
      long double lhs = eval_numeric(rs, character(rs, lambda), c) * testsupport::weyl_denominator(rs, c);
      long double rhs = alternant(rs, lambda + rs.rho(), c);
      CHECK(testsupport::relative_error(static_cast<double>(lhs), static_cast<double>(rhs)) < 1e-9);
    }
  }
}

TEST_CASE("shifted Kostant sums are antisymmetric") {
  // sum_x det x K(x.(w.lambda) - mu) = det w * mult_lambda(mu)
  for (const char* name : {"A2", "B2"}) {
    auto rs = build_algebra(name);
    Weight lambda{1, 1};
    auto k = kostant_table(rs, 40);
    auto m = mult_freudenthal(rs, lambda);
    for (const auto& w : weyl_group(rs)) {
      Weight shifted = shifted_action(rs, w, lambda);
      for (const auto& mu : dominant_cone_below(rs, lambda)) {
        Int s = 0;
        for (const auto& x : weyl_group(rs)) {
          auto g = root_lattice_coords(rs, shifted_action(rs, x, shifted) - mu);
          if (g && g->is_nonnegative()) s += x.det * k(*g);
        }
        CHECK(s == w.det * m(mu));
      }
    }
  }
}

TEST_CASE("orbit sums") {
  auto rs = build_algebra("A2");
  auto e = orbit_sum(rs, Weight{1, 1});
  CHECK(e.size() == 6);
  CHECK(e.total() == 6);
  CHECK(orbit_sum(rs, Weight{0, 0}) == FormalSum({{Weight{0, 0}, 1}}));
  // ch = sum_mu m(mu) E_mu
  auto m = mult_freudenthal(rs, Weight{1, 3});
  FormalSum rebuilt;
  for (const auto& [mu, v] : m.mults) rebuilt += v * orbit_sum(rs, mu);
  CHECK(rebuilt == fixtures::a2_13_character());
}

TEST_CASE("orbit decomposition matrices are mutually inverse") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    for (const auto& lambda : dominant_weights_up_to(rs, rs.rank() == 3 ? 3 : 5)) {
      CAPTURE(lambda.str());
      OrbitDecomposition od;
      CHECK_NOTHROW(od = orbit_decomposition_matrices(rs, lambda));
      CHECK(od.m.is_unitriangular());
      CHECK(od.m_inverse.is_unitriangular());
      CHECK(od.m.respects_dominance(rs));
      // E_lambda = sum_mu Minv ch_mu
      FormalSum e;
      for (const auto& [mu, v] : orbit_inverse_row(rs, lambda)) e += v * character(rs, mu);
      CHECK(e == orbit_sum(rs, lambda));
    }
  }
  auto a1 = build_algebra("A1");
  CHECK(orbit_inverse_row(a1, Weight{2}) == std::map<Weight, Int>{{Weight{2}, 1}, {Weight{0}, -1}});
}

TEST_CASE("the unshifted delta condition does not invert M") {
  // Reading the Weyl-sum condition as x kappa + w.0 = mu + rho gives a
  // different row; for A1 kappa = 2 it misses the -1 at mu = 0.
  auto rs = build_algebra("A1");
  Weight kappa{2};
  std::map<Weight, Int> literal;
  for (const auto& x : weyl_group(rs))
    for (const auto& w : weyl_group(rs)) {
      Weight mu = x.apply(kappa) + shifted_action(rs, w, Weight{0}) - rs.rho();
      if (mu.is_dominant()) literal[mu] += w.det;
    }
  std::erase_if(literal, [](const auto& kv) { return kv.second == 0; });
  CHECK(literal != orbit_inverse_row(rs, kappa));
  CHECK(literal.count(Weight{0}) == 0);
}

TEST_CASE("input validation") {
  auto rs = build_algebra("A2");
  CHECK_THROWS_AS(mult_freudenthal(rs, Weight{-1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(dominant_mults_kostant(rs, Weight{1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(character(rs, Weight{1, -1}), std::invalid_argument);
  CHECK_THROWS(mult_freudenthal(rs, Weight{1, 2, 3}));
  CHECK_THROWS_AS(eval_numeric(rs, orbit_sum(rs, Weight{1, 0}), {1.0}), std::invalid_argument);
}

TEST_CASE("generic directions") {
  std::mt19937_64 a(3), b(3);
  auto rs = build_algebra("G2");
  for (int i = 0; i < 20; ++i) {
    auto c = sample_generic_direction(rs, a);
    CHECK(c == sample_generic_direction(rs, b));
    for (double x : c) CHECK((x >= 0.5 && x <= 1.5));
    for (const auto& alpha : rs.positive_roots()) CHECK(pairing(c, alpha) > 0.4);
    CHECK(pairing(rs, c, Weight{2, -1}) == doctest::Approx(c[0]));  // alpha1
  }
}
