#pragma once

#include "khwb/complex.hpp"
#include "khwb/diagram.hpp"
#include "khwb/polynomial.hpp"

namespace khwb {

// Cube generator: a resolution state and a {v+, v-} labeling of its circles,
// encoded as bitmasks.  Bit c of `labels` is v+ on the c-th circle in the
// resolution's sorted circle order (crossing-free circles come last).
// Homological degree is |state|, quantum degree (#v+ - #v-) + |state|.
struct CubeGen {
  std::uint32_t state = 0;
  std::uint32_t labels = 0;
};

// A cube-of-resolutions complex along with its generator bookkeeping, kept
// so the crossing split and the wall identification can address generators
// by state.
struct CubeData {
  int n = 0;
  ChainComplex complex;
  std::map<Bidegree, std::vector<CubeGen>> gens;  // parallel to complex bases

  CubeData shifted(int dh, int dq) const;
};

// Raw cube gradings, no orientation shifts; accepts links.
CubeData build_cube_raw(const KnotDiagram& d, std::size_t max_states = kDefaultMaxStates);

// The Khovanov complex: raw cube shifted by (-n_minus, n_plus - 2 n_minus).
// Restricted to single-component diagrams.
ChainComplex build_ckh(const KnotDiagram& d, std::size_t max_states = kDefaultMaxStates);
CubeData build_ckh_data(const KnotDiagram& d, std::size_t max_states = kDefaultMaxStates);

// The signed merge/split block of one cube edge, between the full labeling
// spaces of the two resolutions (columns: labelings of resolve(state),
// rows: labelings of resolve(state + 2^pos), mask order).
SpMat edge_map(const KnotDiagram& d, std::uint32_t state, int pos);

// Theorem-1 decomposition at crossing k: c0 and c1 restrict the Khovanov
// complex to the states with bit k = 0 resp. 1, d01 holds the connecting
// blocks, and no block maps c1 back to c0.
struct CrossingSplit {
  ChainComplex c0, c1;
  std::map<Bidegree, SpMat> d01;              // c0 part of (i,j) -> c1 part of (i+1,j)
  std::map<Bidegree, std::vector<int>> c0_pos, c1_pos;  // positions in the parent basis
  bool lower_left_zero = true;
};

CrossingSplit crossing_split(const KnotDiagram& d, int k,
                             std::size_t max_states = kDefaultMaxStates);

}  // namespace khwb
