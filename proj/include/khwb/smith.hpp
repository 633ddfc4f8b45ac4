#pragma once

#include <vector>

#include "khwb/matrix.hpp"

namespace khwb {

// Diagonal data of the Smith normal form of an integer matrix: the number of
// nonzero diagonal entries and the entries larger than 1, as a divisibility
// chain d_1 | d_2 | ...
struct SmithSummary {
  long rank = 0;
  std::vector<Int> invariants;
};

// Sparse elimination with pivots chosen by smallest absolute value (unit
// pivots first, Markowitz fill tiebreak); entries are exact big integers.
SmithSummary smith_normal_form(const SpMat& m);

// Rank over Z/2, by dense bitset elimination.
long rank_mod2(const SpMat& m);

}  // namespace khwb
