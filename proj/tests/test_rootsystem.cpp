#include <string>

#include "doctest.h"
#include "polyexp/rootsystem.hpp"
#include "support.hpp"

using namespace polyexp;

namespace {
const char* kAll[] = {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4", "C5",
                      "C6", "D4", "D5", "D6", "E6", "F4", "G2"};
}

TEST_CASE("algebra names") {
  CHECK(parse_algebra("a2").str() == "A2");
  CHECK(parse_algebra("G2").rank == 2);
  CHECK_THROWS_AS(parse_algebra("H3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra("A"), std::invalid_argument);
  CHECK_THROWS_AS(parse_algebra("A2x"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("A0"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("B1"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("C2"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("D3"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("E5"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("F3"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("G3"), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("A7"), std::invalid_argument);
  CHECK(build_algebra("A7", 8).rank() == 7);
}

TEST_CASE("cartan matrices follow Bourbaki numbering") {
  CHECK(standard_cartan_matrix({'B', 2}) == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(standard_cartan_matrix({'G', 2}) == IntMatrix{{2, -1}, {-3, 2}});
  CHECK(standard_cartan_matrix({'C', 3}) == IntMatrix{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  auto f4 = standard_cartan_matrix({'F', 4});
  CHECK(f4[1][2] == -2);
  CHECK(f4[2][1] == -1);
  auto d4 = standard_cartan_matrix({'D', 4});
  CHECK(d4[1][3] == -1);
  CHECK(d4[2][3] == 0);
}

TEST_CASE("root counts, determinants, highest roots") {
  const std::map<std::string, std::pair<Int, Int>> expected{
      {"A1", {1, 2}},  {"A2", {3, 3}},  {"A3", {6, 4}},  {"A6", {21, 7}}, {"B2", {4, 2}},
      {"B3", {9, 2}},  {"B6", {36, 2}}, {"C3", {9, 2}},  {"C6", {36, 2}}, {"D4", {12, 4}},
      {"D6", {30, 4}}, {"E6", {36, 3}}, {"F4", {24, 1}}, {"G2", {6, 1}}};
  for (const auto& [name, nd] : expected) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    CHECK(static_cast<Int>(rs.positive_roots().size()) == nd.first);
    CHECK(rs.cartan_det() == nd.second);
  }
  CHECK(build_algebra("E7", 7).positive_roots().size() == 63);
  CHECK(build_algebra("E8", 8).positive_roots().size() == 120);
  CHECK(build_algebra("B2").theta() == RootVector{1, 2});
  CHECK(build_algebra("G2").theta() == RootVector{3, 2});
  CHECK(build_algebra("C3").theta() == RootVector{2, 2, 1});
  CHECK(build_algebra("F4").theta() == RootVector{2, 3, 4, 2});
}

TEST_CASE("structural properties of every supported algebra") {
  for (const char* name : kAll) {
    CAPTURE(name);
    auto rs = build_algebra(name);
    const std::size_t r = rs.rank();
    CHECK(rs.rho() == Weight(std::vector<Int>(r, 1)));
    // simple roots come first and are unit vectors
    for (std::size_t i = 0; i < r; ++i) {
      RootVector e(r);
      e[i] = 1;
      CHECK(rs.positive_roots()[i] == e);
    }
    // heights non-decreasing, theta last and unique of max height
    for (std::size_t k = 1; k < rs.positive_roots().size(); ++k)
      CHECK(rs.positive_roots()[k - 1].height() <= rs.positive_roots()[k].height());
    CHECK(rs.positive_roots().back() == rs.theta());
    // sum of positive roots is 2 rho
    RootVector two_rho(r);
    for (const auto& a : rs.positive_roots()) two_rho += a;
    CHECK(root_to_weight(rs, two_rho) == 2 * rs.rho());
    // <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Rational ij = inner_product(rs, rs.simple_roots()[i], rs.simple_roots()[j]);
        Rational jj = inner_product(rs, rs.simple_roots()[j], rs.simple_roots()[j]);
        CHECK(Rational(2) * ij / jj == Rational(rs.cartan()[i][j]));
      }
    CHECK(inner_product(rs, rs.theta(), rs.theta()) == Rational(2));
    // theta is dominant, and theta + alpha_i is never a root
    CHECK(root_to_weight(rs, rs.theta()).is_dominant());
    for (const auto& a : rs.simple_roots()) CHECK_FALSE(rs.is_root(rs.theta() + a));
    // round trip through the classifier
    CHECK(classify_cartan(rs.cartan()) == rs.algebra());
    // adjugate identity
    IntMatrix prod = multiply(rs.cartan(), rs.cartan_adjugate());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) CHECK(prod[i][j] == (i == j ? rs.cartan_det() : 0));
  }
}

TEST_CASE("weight and root bases") {
  auto rs = build_algebra("A2");
  CHECK(root_to_weight(rs, {1, 0}) == Weight{2, -1});
  CHECK(root_to_weight(rs, {1, 1}) == Weight{1, 1});
  auto c = weight_to_root_basis(rs, Weight{1, 0});
  CHECK(c[0] == Rational(2, 3));
  CHECK(c[1] == Rational(1, 3));
  CHECK(root_basis_to_weight(rs, c) == Weight{1, 0});
  CHECK_FALSE(root_lattice_coords(rs, Weight{1, 0}).has_value());
  CHECK(*root_lattice_coords(rs, Weight{1, 1}) == RootVector{1, 1});
  CHECK(weight_height(rs, Weight{1, 0}) == Rational(1));
  CHECK(dominance_leq(rs, Weight{0, 0}, Weight{1, 1}));
  CHECK_FALSE(dominance_leq(rs, Weight{1, 0}, Weight{1, 1}));
  CHECK_FALSE(dominance_leq(rs, Weight{1, 1}, Weight{0, 0}));

  auto g2 = build_algebra("G2");
  CHECK(inner_product(g2, RootVector{1, 0}, RootVector{1, 0}) == Rational(2, 3));
  CHECK(testsupport::level(g2, Weight{1, 0}) == 1);
  CHECK(testsupport::level(g2, Weight{0, 1}) == 2);
  auto b2 = build_algebra("B2");
  CHECK(testsupport::level(b2, Weight{1, 1}) == 2);
}

TEST_CASE("weight parsing") {
  CHECK(Weight::parse("1,3") == Weight{1, 3});
  CHECK(Weight::parse(" -2 , 0 ") == Weight{-2, 0});
  CHECK(Weight{1, -3}.str() == "1,-3");
  CHECK(RootVector{1, 2}.str() == "[1,2]");
  CHECK_THROWS(Weight::parse(""));
  CHECK_THROWS(Weight::parse("1,,2"));
  CHECK_THROWS(Weight::parse("1,a"));
}

TEST_CASE("build_from_cartan rejects non-Cartan input") {
  CHECK_THROWS(build_from_cartan({'A', 2}, IntMatrix{{2, -1}, {-2, 2}}));
  CHECK_THROWS(build_from_cartan({'A', 2}, IntMatrix{{2, 1}, {1, 2}}));
  CHECK_THROWS(classify_cartan(IntMatrix{{2, -2}, {-2, 2}}));
}
