#include <doctest.h>

#include <functional>

#include "khwb/polynomial.hpp"

using namespace khwb;

namespace {

const char* kRightTrefoil = "PD[X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)]";
const char* kLeftTrefoil = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";

LaurentPoly q_pow(int e, int c = 1) { return LaurentPoly::monomial(e, c); }

// hand-derived value: the 8-state sum for the right trefoil collapses to
// q^-2 + 1 + q^2 - q^6, and the orientation shift multiplies by q^3
const LaurentPoly kTrefoilJones = q_pow(1) + q_pow(3) + q_pow(5) - q_pow(9);

}  // namespace

TEST_CASE("bracket of unknots and unlinks") {
  CHECK(kauffman_bracket(KnotDiagram::parse("PD[]")) == circle_weight());
  CHECK(kauffman_bracket(KnotDiagram::unlink(2)) == circle_weight() * circle_weight());
  CHECK(jones_unnormalized(KnotDiagram::parse("PD[]")) == circle_weight());
}

TEST_CASE("kinked unknots still give the unknot Jones") {
  CHECK(jones_unnormalized(KnotDiagram::parse("PD[X(1,1,2,2)]")) == circle_weight());
  CHECK(jones_unnormalized(KnotDiagram::parse("PD[X(1,2,2,1)]")) == circle_weight());
}

TEST_CASE("right trefoil state sum") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  CHECK(kauffman_bracket(d) == q_pow(-2) + q_pow(0) + q_pow(2) - q_pow(6));
  CHECK(jones_unnormalized(d) == kTrefoilJones);
}

TEST_CASE("mirror inverts the variable") {
  for (const char* text :
       {kRightTrefoil, kLeftTrefoil, "PD[X(1,1,2,2)]",
        "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]",
        "PD[X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)]"}) {
    const KnotDiagram d = KnotDiagram::parse(text);
    CHECK(jones_unnormalized(d.mirrored()) == jones_unnormalized(d).inverted_variable());
  }
}

TEST_CASE("jones is invariant under switch-and-switch-back and relabeling") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  CHECK(jones_unnormalized(d.switched(1).switched(1)) == jones_unnormalized(d));
  // a cyclic arc relabeling of the same trefoil
  const KnotDiagram relabeled = KnotDiagram::parse("PD[X(6,4,1,3),X(2,6,3,5),X(4,2,5,1)]");
  CHECK(jones_unnormalized(relabeled) == jones_unnormalized(d));
}

TEST_CASE("switching one trefoil crossing gives the unknot value") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  for (int k = 0; k < 3; ++k)
    CHECK(jones_unnormalized(d.switched(k)) == circle_weight());
}

TEST_CASE("vassiliev extension base cases") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  const ScalarInvariant c2 = jones_h_coefficient(2);

  // no double points: plain evaluation
  CHECK(vassiliev_extend(c2, mark_singular(d, {})) == c2.evaluate(d));

  // one double point: K+ minus K-
  const SingularDiagram s1 = mark_singular(d, {0});
  CHECK(vassiliev_extend(c2, s1) == c2.evaluate(d) - c2.evaluate(d.switched(0)));

  // constant invariants telescope to zero
  const ScalarInvariant c = constant_invariant(Rational(7));
  CHECK(vassiliev_extend(c, s1) == 0);
  CHECK(vassiliev_extend(c, mark_singular(d, {0, 1})) == 0);
  CHECK(vassiliev_extend(c, mark_singular(d, {0, 1, 2})) == 0);
}

TEST_CASE("vassiliev extension does not depend on resolution order") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  const ScalarInvariant c2 = jones_h_coefficient(2);
  // an independent recursive evaluation resolving the points in a given order
  std::function<Rational(const KnotDiagram&, std::vector<int>)> rec =
      [&](const KnotDiagram& base, std::vector<int> points) -> Rational {
    if (points.empty()) return c2.evaluate(base);
    const int k = points.back();
    points.pop_back();
    return rec(base, points) - rec(base.switched(k), points);
  };
  const SingularDiagram s = mark_singular(d, {0, 1, 2});
  const Rational expected = vassiliev_extend(c2, s);
  CHECK(rec(d, {0, 1, 2}) == expected);
  CHECK(rec(d, {2, 1, 0}) == expected);
  CHECK(rec(d, {1, 2, 0}) == expected);
  CHECK(rec(d, {0, 2, 1}) == expected);
  CHECK(rec(d, {2, 0, 1}) == expected);
  CHECK(rec(d, {1, 0, 2}) == expected);
}

TEST_CASE("order_test reports values and verdicts") {
  const KnotDiagram trefoil = KnotDiagram::parse(kRightTrefoil);
  const ScalarInvariant c0 = jones_h_coefficient(0);

  std::vector<SingularDiagram> corpus;
  for (int k = 0; k < 3; ++k) corpus.push_back(mark_singular(trefoil, {k}));

  // c0 is constant 2 on knots, so its first derivative vanishes
  const OrderTestReport r0 = order_test(c0, 0, corpus);
  CHECK(r0.all_zero);
  CHECK(r0.entries.size() == 3);

  // c2 of the Jones is of type exactly 2: some second derivative is nonzero
  std::vector<SingularDiagram> corpus2;
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) corpus2.push_back(mark_singular(trefoil, {a, b}));
  const OrderTestReport r2 = order_test(jones_h_coefficient(2), 1, corpus2);
  CHECK_FALSE(r2.all_zero);

  CHECK_THROWS_AS(order_test(c0, 1, corpus), ValidationError);
}
