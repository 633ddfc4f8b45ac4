#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "khwb/error.hpp"

namespace khwb {

// One crossing of a planar diagram.  The four arc labels are listed
// counterclockwise starting from the incoming under-strand, so slot 0 is the
// under-strand entry and slot 2 its exit; slots 1 and 3 hold the over-strand.
struct Crossing {
  std::array<int, 4> arc;

  bool operator==(const Crossing& o) const { return arc == o.arc; }
};

// Complete resolution of a diagram: one smoothing choice per crossing and the
// resulting partition of the arcs into circles.  `state` bit k is the choice
// at crossing k (0-smoothing joins slots (0,1) and (2,3); 1-smoothing joins
// (0,3) and (1,2)).  Circles are sorted by their minimal arc label and each
// circle lists its arcs in increasing order.  `circle_count` includes
// crossing-free circles of the diagram, which carry no arcs.
struct Resolution {
  std::uint32_t state = 0;
  int crossing_count = 0;
  std::vector<std::vector<int>> circles;
  int circle_count = 0;

  std::string state_string() const;  // crossing 0 is the leftmost character
};

// Oriented knot or link diagram given by its PD code.  Validation happens at
// construction: every arc label 1..arc_count appears exactly twice and a
// coherent strand orientation exists.  Immutable afterwards; all operations
// return new diagrams.
class KnotDiagram {
 public:
  // 0-crossing unlink with `circles` components; circles = 1 is the unknot.
  static KnotDiagram unlink(int circles);
  static KnotDiagram unknot() { return unlink(1); }

  // Text form `PD[X(a,b,c,d), ...]`; `PD[]` is the unknot.
  static KnotDiagram parse(const std::string& text);

  KnotDiagram(std::vector<Crossing> crossings, int free_circles = 0, std::string name = "");

  std::string pd() const;

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return arc_count_; }
  int free_circle_count() const { return free_circles_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::string& name() const { return name_; }
  KnotDiagram named(std::string name) const;

  int component_count() const { return component_count_; }

  // +1 or -1; derived from the strand orientations.
  int sign(int k) const;
  int writhe() const;
  int positive_crossings() const;
  int negative_crossings() const;

  // True if the arc in `slot` of crossing `k` runs into the crossing.
  bool incoming(int k, int slot) const;

  KnotDiagram switched(int k) const;   // exchange over/under at crossing k
  KnotDiagram mirrored() const;        // switch every crossing

  // Replace crossing k by its 0- or 1-smoothing; one crossing fewer,
  // arcs spliced and relabeled, closed-off loops become free circles.
  KnotDiagram smoothed(int k, int bit) const;

  Resolution resolve(std::uint32_t state) const;
  Resolution resolve(const std::vector<std::uint8_t>& state_bits) const;

  // Structural equality; names are ignored.
  bool same_diagram(const KnotDiagram& o) const {
    return crossings_ == o.crossings_ && free_circles_ == o.free_circles_;
  }

 private:
  void validate_labels() const;
  void orient();
  void count_components();

  std::vector<Crossing> crossings_;
  int free_circles_ = 0;
  int arc_count_ = 0;
  std::string name_;
  // orientation solution: incoming flag per (crossing, slot)
  std::vector<std::array<bool, 4>> incoming_;
  int component_count_ = 0;
};

// Diagram with a subset of crossings marked as transversal double points.
// The base diagram is the all-overcrossing resolution of the double points;
// the codimension of the stratum is doubled.size().
struct SingularDiagram {
  KnotDiagram base;
  std::vector<int> doubled;  // sorted, distinct crossing indices

  std::string id() const;
};

SingularDiagram mark_singular(const KnotDiagram& d, std::vector<int> ks);

}  // namespace khwb
