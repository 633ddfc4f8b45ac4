#include <doctest.h>

#include <random>

#include "khwb/smith.hpp"

using namespace khwb;

namespace {

SpMat from_rows(const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  std::vector<Triplet> ts;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (rows[i][j]) ts.emplace_back(i, j, Int(rows[i][j]));
  return sparse_from(r, c, ts);
}

// Textbook dense Smith reduction, used as an independent oracle: repeatedly
// improve the top-left pivot by explicit row/column operations.
SmithSummary dense_smith_oracle(DenseMat m) {
  using boost::multiprecision::abs;
  const int rows = static_cast<int>(m.rows()), cols = static_cast<int>(m.cols());
  std::vector<Int> diag;
  int t = 0;
  while (true) {
    int pr = -1, pc = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (m(i, j) != 0 && (pr < 0 || abs(m(i, j)) < abs(m(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr < 0) break;
    m.row(t).swap(m.row(pr));
    m.col(t).swap(m.col(pc));
    bool clean = true;
    for (int i = t + 1; i < rows; ++i)
      if (m(i, t) != 0) {
        const Int f = m(i, t) / m(t, t);
        m.row(i) -= f * m.row(t);
        if (m(i, t) != 0) clean = false;
      }
    for (int j = t + 1; j < cols; ++j)
      if (m(t, j) != 0) {
        const Int f = m(t, j) / m(t, t);
        m.col(j) -= f * m.col(t);
        if (m(t, j) != 0) clean = false;
      }
    if (!clean) continue;
    // pivot must divide the remaining submatrix for true invariant factors
    bool divides = true;
    for (int i = t + 1; i < rows && divides; ++i)
      for (int j = t + 1; j < cols && divides; ++j)
        if (m(i, j) % m(t, t) != 0) {
          m.row(t) += m.row(i);
          divides = false;
        }
    if (!divides) continue;
    diag.push_back(abs(m(t, t)));
    ++t;
    if (t >= rows || t >= cols) break;
  }
  SmithSummary s;
  s.rank = static_cast<long>(diag.size());
  for (const Int& d : diag)
    if (d > 1) s.invariants.push_back(d);
  return s;
}

}  // namespace

TEST_CASE("smith normal form golden cases") {
  SUBCASE("the 1x1 matrix (2)") {
    const SmithSummary s = smith_normal_form(from_rows({{2}}));
    CHECK(s.rank == 1);
    REQUIRE(s.invariants.size() == 1);
    CHECK(s.invariants[0] == 2);
  }
  SUBCASE("identity") {
    const SmithSummary s = smith_normal_form(SpMat(sparse_identity(4)));
    CHECK(s.rank == 4);
    CHECK(s.invariants.empty());
  }
  SUBCASE("[[2,4],[6,8]] has invariant factors 2, 4") {
    const SmithSummary s = smith_normal_form(from_rows({{2, 4}, {6, 8}}));
    CHECK(s.rank == 2);
    REQUIRE(s.invariants.size() == 2);
    CHECK(s.invariants[0] == 2);
    CHECK(s.invariants[1] == 4);
  }
  SUBCASE("zero and empty matrices") {
    CHECK(smith_normal_form(from_rows({{0, 0}, {0, 0}})).rank == 0);
    CHECK(smith_normal_form(SpMat(0, 0)).rank == 0);
    CHECK(smith_normal_form(SpMat(3, 0)).rank == 0);
  }
  SUBCASE("divisibility chain is enforced") {
    // diag(2, 3) ~ diag(1, 6)
    const SmithSummary s = smith_normal_form(from_rows({{2, 0}, {0, 3}}));
    CHECK(s.rank == 2);
    REQUIRE(s.invariants.size() == 1);
    CHECK(s.invariants[0] == 6);
  }
}

TEST_CASE("smith normal form agrees with the dense oracle on random matrices") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> dim(1, 6), entry(-9, 9), density(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = dim(rng), c = dim(rng);
    DenseMat m = DenseMat::Zero(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j)
        if (density(rng) == 0) m(i, j) = entry(rng);
    const SmithSummary got = smith_normal_form(to_sparse(m));
    const SmithSummary want = dense_smith_oracle(m);
    CHECK(got.rank == want.rank);
    CHECK(got.invariants == want.invariants);
  }
}

TEST_CASE("rank over Z/2") {
  CHECK(rank_mod2(from_rows({{2}})) == 0);
  CHECK(rank_mod2(from_rows({{3}})) == 1);
  CHECK(rank_mod2(from_rows({{1, 1}, {1, 1}})) == 1);
  CHECK(rank_mod2(SpMat(sparse_identity(5))) == 5);

  std::mt19937 rng(911);
  std::uniform_int_distribution<int> dim(1, 8), entry(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = dim(rng), c = dim(rng);
    DenseMat m = DenseMat::Zero(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m(i, j) = entry(rng);
    // rank over Z/2 = free rank + number of even torsion factors
    const SmithSummary s = smith_normal_form(to_sparse(m));
    long even = 0;
    for (const Int& t : s.invariants)
      if (t % 2 == 0) ++even;
    long odd_rank = 0;
    // count nonzero odd invariant factors: rank = #diag entries; entries equal
    // to 1 are odd as well
    odd_rank = s.rank - even;
    CHECK(rank_mod2(to_sparse(m)) == odd_rank);
  }
}
