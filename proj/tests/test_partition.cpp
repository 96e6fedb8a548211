#include "doctest.h"
#include "polyexp/partition.hpp"
#include "support.hpp"

using namespace polyexp;
using testsupport::count_partitions;
using testsupport::nonnegative_root_vectors;

TEST_CASE("Kostant table against direct enumeration") {
  for (const char* name : {"A1", "A2", "B2", "G2", "A3", "B3"}) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    const Int h = rs.rank() == 3 ? 6 : 9;
    auto k = kostant_table(rs, h);
    for (const auto& g : nonnegative_root_vectors(rs.rank(), h)) {
      CAPTURE(g.str());
      CHECK(k(g) == count_partitions(rs.positive_roots(), g));
    }
    CHECK(k(RootVector(rs.rank())) == 1);
    RootVector neg(rs.rank());
    neg[0] = -1;
    CHECK(k(neg) == 0);
  }
  auto a2 = build_algebra("A2");
  auto k = kostant_table(a2, 4);
  CHECK(k({1, 1}) == 2);
  CHECK(k({2, 2}) == 3);
  CHECK_THROWS_AS(k({3, 2}), std::out_of_range);
}

TEST_CASE("subset tables") {
  auto rs = build_algebra("B2");
  auto ns = non_simple_positive_roots(rs);
  CHECK(ns.size() == 2);
  auto k = kostant_table(rs, ns, 12);
  for (const auto& g : nonnegative_root_vectors(2, 12)) CHECK(k(g) == count_partitions(ns, g));
  CHECK_THROWS_AS(kostant_table(rs, {RootVector{1, -1}}, 4), std::invalid_argument);
  CHECK_THROWS_AS(kostant_table(rs, {RootVector{2, 0}}, 4), std::invalid_argument);
}

TEST_CASE("K factors as K_S convolved with K over the non-simple roots") {
  for (const char* name : {"A2", "B2", "G2", "A3"}) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    const Int h = rs.rank() == 3 ? 7 : 12;
    auto k = kostant_table(rs, h);
    auto ks = kostant_table(rs, rs.simple_roots(), h);
    auto kn = kostant_table(rs, non_simple_positive_roots(rs), h);
    for (const auto& g : nonnegative_root_vectors(rs.rank(), h)) {
      Int s = 0;
      for (const auto& d : nonnegative_root_vectors(rs.rank(), g.height()))
        if ((g - d).is_nonnegative()) s += ks(d) * kn(g - d);
      CHECK(k(g) == s);
      CHECK(ks(g) == 1);
    }
  }
}

TEST_CASE("F inverts K over the non-simple roots") {
  for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    auto f = f_table(rs);
    auto ns = non_simple_positive_roots(rs);
    Int max_h = 0;
    for (const auto& g : ns) max_h += g.height();
    CHECK(f.height_bound == max_h);
    CHECK(f(RootVector(rs.rank())) == 1);
    // F * K_{R+ \ S} = 1, and F * K = K_S (indicator of N0 S)
    const Int h = rs.rank() == 3 ? 6 : 10;
    auto kn = kostant_table(rs, ns, h);
    auto k = kostant_table(rs, h);
    for (const auto& g : nonnegative_root_vectors(rs.rank(), h)) {
      Int s1 = 0, s2 = 0;
      for (const auto& [beta, fv] : f.values)
        if ((g - beta).is_nonnegative()) {
          s1 += fv * kn(g - beta);
          s2 += fv * k(g - beta);
        }
      CHECK(s1 == (g.is_zero() ? 1 : 0));
      CHECK(s2 == 1);
    }
    // truncation keeps exactly the low-height terms
    auto f3 = f_table(rs, 3);
    for (const auto& [beta, v] : f.values)
      if (beta.height() <= 3) CHECK(f3(beta) == v);
  }
  // A2: 1 - e^{alpha1 + alpha2}
  auto a2 = f_table(build_algebra("A2"));
  CHECK(a2.values.size() == 2);
  CHECK(a2({1, 1}) == -1);
}
