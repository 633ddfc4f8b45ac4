#include <doctest.h>

#include "khwb/laurent.hpp"
#include "khwb/polynomial.hpp"

using namespace khwb;

namespace {

LaurentPoly q_pow(int e, int c = 1) { return LaurentPoly::monomial(e, c); }

}  // namespace

TEST_CASE("laurent arithmetic and normalization") {
  LaurentPoly p = q_pow(2) + q_pow(-2) - q_pow(2);
  CHECK(p == q_pow(-2));
  CHECK(p.coefficient(2) == 0);
  CHECK((p - p).is_zero());
  CHECK((q_pow(1) * q_pow(-1)) == q_pow(0));
  CHECK(circle_weight() * circle_weight() == q_pow(2) + q_pow(0, 2) + q_pow(-2));
  CHECK(circle_weight().pow(3) ==
        q_pow(3) + q_pow(1, 3) + q_pow(-1, 3) + q_pow(-3));
}

TEST_CASE("laurent rendering is descending and sparse") {
  LaurentPoly trefoil = q_pow(1) + q_pow(3) + q_pow(5) - q_pow(9);
  CHECK(trefoil.str() == "-q^9 + q^5 + q^3 + q");
  CHECK(circle_weight().str() == "q + q^-1");
  CHECK(LaurentPoly().str() == "0");
  CHECK((q_pow(0, 2) + q_pow(2, -3)).str() == "-3*q^2 + 2");
}

TEST_CASE("laurent substitution q -> 1/q") {
  LaurentPoly p = q_pow(3, 2) - q_pow(-1, 5);
  CHECK(p.inverted_variable() == q_pow(-3, 2) - q_pow(1, 5));
  CHECK(p.inverted_variable().inverted_variable() == p);
}

TEST_CASE("h expansion examples") {
  // e^h + e^{-h} = 2 + h^2 + O(h^4)
  const auto unknot = h_expansion(circle_weight(), 2);
  REQUIRE(unknot.size() == 3);
  CHECK(unknot[0] == 2);
  CHECK(unknot[1] == 0);
  CHECK(unknot[2] == 1);

  // e^h = 1 + h + ...
  const auto single = h_expansion(q_pow(1), 1);
  CHECK(single[0] == 1);
  CHECK(single[1] == 1);

  for (const Rational& c : h_expansion(LaurentPoly(), 4)) CHECK(c == 0);

  CHECK_THROWS_AS(h_expansion(circle_weight(), 17), GuardError);
}

TEST_CASE("h expansion is linear") {
  LaurentPoly a = q_pow(4, 3) - q_pow(-2, 7) + q_pow(0, 2);
  LaurentPoly b = q_pow(1, -5) + q_pow(-4, 11);
  const auto ca = h_expansion(a, 6);
  const auto cb = h_expansion(b, 6);
  const auto cab = h_expansion(a + b, 6);
  for (int m = 0; m <= 6; ++m) CHECK(cab[m] == ca[m] + cb[m]);
}
