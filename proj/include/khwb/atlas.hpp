#pragma once

#include "khwb/complex.hpp"
#include "khwb/diagram.hpp"
#include "khwb/polynomial.hpp"

namespace khwb {

struct AtlasEntry {
  std::string name;
  std::string pd;
  int known_crossing_number = 0;
  KnotDiagram diagram;
};

// Table format: one entry per line, `name<TAB>pd`; blank lines and lines
// starting with '#' are skipped.  Entries sharing a name are understood as
// diagrams of the same knot.  The crossing number is read from the name's
// leading integer ("6_2" -> 6).
std::vector<AtlasEntry> load_table(const std::string& path);

// KH_TABLE environment variable when set, otherwise the bundled table.
std::string default_table_path();

// All diagrams reachable by one Reidemeister move:
//   - R1 kink insertion, both chiralities, on every arc (and on a
//     crossing-free circle);
//   - R1 kink removal at every kink;
//   - R2 finger insertion over and under every crossing corner;
//   - R2 removal of every matched bigon;
//   - R3 slide of every matched coherently oriented triangle.
// Unmatched local patterns contribute no output.
std::vector<KnotDiagram> r_moves(const KnotDiagram& d);

struct InvarianceGroupResult {
  std::string name;
  int diagram_count = 0;
  int neighbor_count = 0;
  bool jones_equal = true;
  bool homology_equal = true;
  BigradedGroups homology;  // the group's common homology (first diagram's)
  std::string detail;
};

struct InvarianceReport {
  std::vector<InvarianceGroupResult> groups;
  bool all_pass = true;
};

// Groups entries by name; within each group computes bigraded homology and
// unnormalized Jones for every diagram and for one R-move neighbor of each,
// and checks they all agree.
InvarianceReport invariance_suite(const std::vector<AtlasEntry>& entries,
                                  std::size_t max_states = kDefaultMaxStates);

}  // namespace khwb
