#pragma once

#include "khwb/khovanov.hpp"

namespace khwb {

// The morphism across the wall from a diagram to its crossing switch, in raw
// cube gradings.  Switching crossing k exchanges its 0- and 1-resolutions,
// so a state s of the source with bit k = 0 has the same smoothing picture
// as state s + 2^k of the target, with the same circle partition.  The map
// sends such a generator identically to its twin, with sign
// (-1)^{#1s below k}, and kills the bit-k = 1 generators.  The target is the
// switched cube shifted by (-1, -1) so the map preserves both degrees; the
// chain-map identity is verified exactly at construction.
ChainMap wall_morphism(const KnotDiagram& d, int k, std::size_t max_states = kDefaultMaxStates);

// Khovanov complex of a singular knot, as the iterated cone over the cube of
// wall morphisms between the 2^m resolutions of the m double points.  The
// base diagram is the all-overcrossing corner of the cube.
ChainComplex singular_complex(const SingularDiagram& s,
                              std::size_t max_states = kDefaultMaxStates,
                              std::vector<int> fold_order = {});

// State-sum value of the singular complex's Euler characteristic,
// (-1)^m  sum_T  q^{-|T|} bracket(switch_T(base)), computed independently of
// the complex machinery.
LaurentPoly cone_chi_oracle(const SingularDiagram& s,
                            std::size_t max_states = kDefaultMaxStates);

struct FiniteTypeReport {
  SingularDiagram stratum;
  std::string stratum_id;
  int codim = 0;
  BigradedGroups cone_homology;
  bool acyclic = false;
  LaurentPoly cone_chi;
  bool chi_check = false;  // engine chi against the state-sum oracle
  std::string order_verdict;
};

FiniteTypeReport finite_type_report(const SingularDiagram& s,
                                    std::size_t max_states = kDefaultMaxStates);

// All codim-c strata over the given diagrams with at most max_crossings
// crossings.  Guards: max_crossings <= 7, codim <= 3.
std::vector<FiniteTypeReport> audit_subcategory(const std::vector<KnotDiagram>& diagrams,
                                                int max_crossings, int codim,
                                                std::size_t max_states = kDefaultMaxStates);

}  // namespace khwb
