#include <limits>

#include "doctest.h"
#include "polyexp/arith.hpp"

using namespace polyexp;

TEST_CASE("rational normalization and arithmetic") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(4, 2).is_integer());
  CHECK(Rational(4, 2).to_integer() == 2);
  CHECK_THROWS_AS(Rational(1, 2).to_integer(), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse and print") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational::parse(" 2/-4 ") == Rational(-1, 2));
  CHECK(Rational(-5, 10).str() == "-1/2");
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/"));
}

TEST_CASE("checked integer arithmetic") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
  CHECK_THROWS_AS(checked_neg(std::numeric_limits<Int>::min()), std::overflow_error);
  CHECK(exact_div(12, -4) == -3);
  CHECK_THROWS_AS(exact_div(7, 2), std::domain_error);
  CHECK_THROWS_AS(Rational(big, 1) + Rational(1, 1), std::overflow_error);
}

TEST_CASE("matrix inverse") {
  IntMatrix a{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  RationalMatrix inv = rational_inverse(a);
  CHECK(inv[0][0] == Rational(3, 4));
  CHECK(inv[1][1] == Rational(1));
  CHECK(inv[0][2] == Rational(1, 4));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s;
      for (std::size_t k = 0; k < 3; ++k) s += Rational(a[i][k]) * inv[k][j];
      CHECK(s == Rational(i == j ? 1 : 0));
    }
  CHECK_THROWS(rational_inverse(IntMatrix{{1, 2}, {2, 4}}));
  CHECK(multiply(a, identity_matrix(3)) == a);
}
