#include <doctest.h>

#include "khwb/diagram.hpp"
#include "khwb/polynomial.hpp"

using namespace khwb;

namespace {

// right-handed trefoil: all three crossings positive
const char* kRightTrefoil = "PD[X(4,2,5,1),X(6,4,1,3),X(2,6,3,5)]";
// Rolfsen-style (left-handed) trefoil
const char* kLeftTrefoil = "PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]";

}  // namespace

TEST_CASE("parse: empty PD is the unknot") {
  const KnotDiagram d = KnotDiagram::parse("PD[]");
  CHECK(d.crossing_count() == 0);
  CHECK(d.arc_count() == 0);
  CHECK(d.component_count() == 1);
  CHECK(d.writhe() == 0);
  CHECK(d.resolve(std::uint32_t(0)).circle_count == 1);
}

TEST_CASE("parse: trefoil, whitespace-insensitive") {
  const KnotDiagram d = KnotDiagram::parse("PD[ X(1,4,2,5) , X(3, 6,4,1), X(5,2,6,3) ]");
  CHECK(d.crossing_count() == 3);
  CHECK(d.arc_count() == 6);
  CHECK(d.component_count() == 1);
}

TEST_CASE("parse: malformed input is rejected with context") {
  CHECK_THROWS_AS(KnotDiagram::parse("PD[X(1,1,2,2)"), ParseError);
  CHECK_THROWS_AS(KnotDiagram::parse("PD[Y(1,1,2,2)]"), ParseError);
  CHECK_THROWS_AS(KnotDiagram::parse("X(1,1,2,2)"), ParseError);
  CHECK_THROWS_AS(KnotDiagram::parse("PD[X(1,1,2,2)] trailing"), ParseError);
  // label 3 missing from the range
  CHECK_THROWS_AS(KnotDiagram::parse("PD[X(1,1,2,2),X(5,6,5,6)]"), ValidationError);
  // arc appearing once
  CHECK_THROWS_AS(KnotDiagram::parse("PD[X(1,2,3,4)]"), ValidationError);
}

TEST_CASE("pd rendering round-trips") {
  for (const char* text :
       {"PD[]", "PD[X(1,1,2,2)]", kRightTrefoil, kLeftTrefoil,
        "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"}) {
    const KnotDiagram d = KnotDiagram::parse(text);
    CHECK(KnotDiagram::parse(d.pd()).same_diagram(d));
  }
  CHECK(KnotDiagram::unlink(2).pd() == "PD[O,O]");
  CHECK(KnotDiagram::parse("PD[O,O]").component_count() == 2);
  CHECK(KnotDiagram::unknot().pd() == "PD[]");
}

TEST_CASE("signs and writhe") {
  CHECK(KnotDiagram::parse(kRightTrefoil).writhe() == 3);
  CHECK(KnotDiagram::parse(kLeftTrefoil).writhe() == -3);
  CHECK(KnotDiagram::parse("PD[X(1,1,2,2)]").writhe() == 1);   // positive kink
  CHECK(KnotDiagram::parse("PD[X(1,2,2,1)]").writhe() == -1);  // negative kink
  // figure eight has writhe 0
  CHECK(KnotDiagram::parse("PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]").writhe() == 0);
}

TEST_CASE("switch_crossing is an involution and flips the sign") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  for (int k = 0; k < 3; ++k) {
    const KnotDiagram s = d.switched(k);
    CHECK(s.sign(k) == -d.sign(k));
    CHECK(s.switched(k).same_diagram(d));
    CHECK_FALSE(s.same_diagram(d));
  }
  CHECK_THROWS_AS(KnotDiagram::parse("PD[]").switched(0), std::out_of_range);
}

TEST_CASE("mirror negates the writhe and is an involution") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  CHECK(d.mirrored().writhe() == -3);
  CHECK(d.mirrored().mirrored().same_diagram(d));
  CHECK(d.mirrored().same_diagram(KnotDiagram::parse(kLeftTrefoil)));
  CHECK(KnotDiagram::unknot().mirrored().same_diagram(KnotDiagram::unknot()));
  // mirror equals switching every crossing
  KnotDiagram all_switched = d;
  for (int k = 0; k < 3; ++k) all_switched = all_switched.switched(k);
  CHECK(all_switched.same_diagram(d.mirrored()));
}

TEST_CASE("resolve: right trefoil circle counts from the cube") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  CHECK(d.resolve(std::uint32_t(0b000)).circle_count == 2);
  CHECK(d.resolve(std::uint32_t(0b111)).circle_count == 3);
  CHECK(d.resolve(std::uint32_t(0b001)).circle_count == 1);  // state 100 in bit order
  CHECK(d.resolve(std::uint32_t(0b010)).circle_count == 1);
  CHECK(d.resolve(std::uint32_t(0b100)).circle_count == 1);
  CHECK(d.resolve(std::vector<std::uint8_t>{1, 0, 0}).circle_count == 1);
  CHECK_THROWS_AS(d.resolve(std::vector<std::uint8_t>{0, 1}), ValidationError);
}

TEST_CASE("resolve: circles partition the arcs") {
  for (const char* text : {kRightTrefoil, "PD[X(1,1,2,2)]",
                           "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"}) {
    const KnotDiagram d = KnotDiagram::parse(text);
    for (std::uint32_t s = 0; s < (1u << d.crossing_count()); ++s) {
      const Resolution r = d.resolve(s);
      std::vector<int> seen(d.arc_count() + 1, 0);
      for (const auto& circle : r.circles)
        for (int a : circle) ++seen[a];
      for (int a = 1; a <= d.arc_count(); ++a) CHECK(seen[a] == 1);
      CHECK(r.circle_count >= 1);
    }
  }
}

TEST_CASE("resolve: one bit flip changes the circle count by exactly one") {
  for (const char* text :
       {kRightTrefoil, kLeftTrefoil, "PD[X(1,4,2,5),X(3,8,4,9),X(5,10,6,1),X(9,6,10,7),X(7,2,8,3)]",
        "PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]"}) {
    const KnotDiagram d = KnotDiagram::parse(text);
    const int n = d.crossing_count();
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      const int c = d.resolve(s).circle_count;
      for (int p = 0; p < n; ++p) {
        if (s >> p & 1u) continue;
        const int c2 = d.resolve(s | (1u << p)).circle_count;
        CHECK(std::abs(c2 - c) == 1);
      }
    }
  }
}

TEST_CASE("mark_singular validates indices") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  CHECK(mark_singular(d, {}).doubled.empty());
  CHECK(mark_singular(d, {2, 0}).doubled == std::vector<int>{0, 2});
  CHECK(mark_singular(d, {0, 1, 2}).doubled.size() == 3);
  CHECK_THROWS_AS(mark_singular(d, {3}), std::out_of_range);
  CHECK_THROWS_AS(mark_singular(d, {0, 0}), ValidationError);
}

TEST_CASE("smoothing a crossing produces valid smaller diagrams") {
  const KnotDiagram d = KnotDiagram::parse(kRightTrefoil);
  for (int k = 0; k < 3; ++k)
    for (int bit = 0; bit < 2; ++bit) {
      const KnotDiagram s = d.smoothed(k, bit);
      CHECK(s.crossing_count() == 2);
      CHECK(s.arc_count() == 4);
    }
  // the oriented smoothing of a knot crossing splits one component into two
  CHECK(d.smoothed(0, 0).component_count() == 2);
  CHECK(d.smoothed(0, 1).component_count() == 1);

  // kink smoothings: one closes off a free circle, the other stays connected
  const KnotDiagram kink = KnotDiagram::parse("PD[X(1,1,2,2)]");
  const KnotDiagram s0 = kink.smoothed(0, 0);
  CHECK(s0.crossing_count() == 0);
  CHECK(s0.component_count() == 2);
  CHECK(kink.smoothed(0, 1).component_count() == 1);
}

TEST_CASE("smoothing matches the resolution circle counts") {
  // smoothing every crossing one by one reaches the all-smoothed state
  const KnotDiagram d = KnotDiagram::parse(kLeftTrefoil);
  for (std::uint32_t s = 0; s < 8; ++s) {
    KnotDiagram cur = d;
    for (int k = 2; k >= 0; --k) cur = cur.smoothed(k, s >> k & 1u);
    CHECK(cur.crossing_count() == 0);
    CHECK(cur.component_count() == d.resolve(s).circle_count);
  }
}
