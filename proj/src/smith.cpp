#include "khwb/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace khwb {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Row-major sparse workspace with per-column occupancy sets, so both row and
// column operations stay cheap during the elimination.
struct Workspace {
  std::vector<std::map<int, Int>> rows;
  std::vector<std::set<int>> cols;

  explicit Workspace(const SpMat& m)
      : rows(m.rows()), cols(m.cols()) {
    for (int c = 0; c < m.outerSize(); ++c)
      for (SpMat::InnerIterator it(m, c); it; ++it) {
        rows[it.row()][static_cast<int>(it.col())] = it.value();
        cols[it.col()].insert(static_cast<int>(it.row()));
      }
  }

  void set(int r, int c, Int v) {
    if (v == 0) {
      rows[r].erase(c);
      cols[c].erase(r);
    } else {
      rows[r][c] = std::move(v);
      cols[c].insert(r);
    }
  }

  Int get(int r, int c) const {
    auto it = rows[r].find(c);
    return it == rows[r].end() ? Int(0) : it->second;
  }

  // row_r += f * row_p
  void add_row(int r, int p, const Int& f) {
    for (const auto& [c, v] : rows[p]) set(r, c, get(r, c) + f * v);
  }

  // col_c += f * col_p
  void add_col(int c, int p, const Int& f) {
    const std::set<int> rows_of_p = cols[p];
    for (int r : rows_of_p) set(r, c, get(r, c) + f * get(r, p));
  }

  void clear_row(int r) {
    for (const auto& [c, v] : rows[r]) cols[c].erase(r);
    rows[r].clear();
  }
};

struct Pivot {
  int row = -1, col = -1;
  Int value;
};

long fill_score(const Workspace& w, int r, int c) {
  return static_cast<long>(w.rows[r].size() - 1) * static_cast<long>(w.cols[c].size() - 1);
}

// Smallest |value| wins; among equals, least expected fill.
Pivot select_pivot(const Workspace& w) {
  Pivot best;
  long best_fill = 0;
  Int best_abs;
  for (std::size_t r = 0; r < w.rows.size(); ++r)
    for (const auto& [c, v] : w.rows[r]) {
      const Int a = abs(v);
      if (best.row < 0 || a < best_abs ||
          (a == best_abs && fill_score(w, static_cast<int>(r), c) < best_fill)) {
        best = {static_cast<int>(r), c, v};
        best_abs = a;
        best_fill = fill_score(w, static_cast<int>(r), c);
        if (best_abs == 1 && best_fill == 0) return best;
      }
    }
  return best;
}

// Replace the diagonal multiset by the equivalent divisibility chain.
std::vector<Int> divisibility_chain(std::vector<Int> diag) {
  std::sort(diag.begin(), diag.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < diag.size(); ++i)
      for (std::size_t j = i + 1; j < diag.size(); ++j) {
        if (diag[j] % diag[i] == 0) continue;
        const Int g = gcd(diag[i], diag[j]);
        diag[j] = diag[i] / g * diag[j];
        diag[i] = g;
        changed = true;
      }
    if (changed) std::sort(diag.begin(), diag.end());
  }
  return diag;
}

}  // namespace

SmithSummary smith_normal_form(const SpMat& m) {
  Workspace w(m);
  std::vector<Int> diag;

  while (true) {
    Pivot p = select_pivot(w);
    if (p.row < 0) break;

    // shrink until the pivot divides everything in its row and column
    while (true) {
      bool moved = false;
      const std::set<int> col_rows = w.cols[p.col];
      for (int r : col_rows) {
        if (r == p.row) continue;
        const Int v = w.get(r, p.col);
        if (v % p.value != 0) {
          w.add_row(r, p.row, -(v / p.value));
          p = {r, p.col, w.get(r, p.col)};
          moved = true;
          break;
        }
      }
      if (moved) continue;
      const std::map<int, Int> row_entries = w.rows[p.row];
      for (const auto& [c, v] : row_entries) {
        if (c == p.col) continue;
        if (v % p.value != 0) {
          w.add_col(c, p.col, -(v / p.value));
          p = {p.row, c, w.get(p.row, c)};
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }

    // eliminate the pivot column by row operations, then the pivot row by
    // column operations (which by then only touch the pivot row)
    const std::set<int> col_rows = w.cols[p.col];
    for (int r : col_rows) {
      if (r == p.row) continue;
      w.add_row(r, p.row, -(w.get(r, p.col) / p.value));
    }
    const std::map<int, Int> row_entries = w.rows[p.row];
    for (const auto& [c, v] : row_entries) {
      if (c == p.col) continue;
      w.set(p.row, c, 0);
    }
    w.clear_row(p.row);
    diag.push_back(abs(p.value));
  }

  SmithSummary out;
  out.rank = static_cast<long>(diag.size());
  std::vector<Int> nontrivial;
  for (Int& d : diag)
    if (d > 1) nontrivial.push_back(std::move(d));
  for (Int& d : divisibility_chain(std::move(nontrivial)))
    if (d > 1) out.invariants.push_back(std::move(d));  // chaining can create 1s
  return out;
}

long rank_mod2(const SpMat& m) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (rows == 0 || cols == 0) return 0;
  const int words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(rows, std::vector<std::uint64_t>(words, 0));
  for (int c = 0; c < m.outerSize(); ++c)
    for (SpMat::InnerIterator it(m, c); it; ++it)
      if (it.value() % 2 != 0) bits[it.row()][it.col() / 64] ^= 1ull << (it.col() % 64);

  long rank = 0;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    const int word = c / 64;
    const std::uint64_t mask = 1ull << (c % 64);
    int pivot = -1;
    for (int r = row; r < rows; ++r)
      if (bits[r][word] & mask) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(bits[row], bits[pivot]);
    for (int r = 0; r < rows; ++r)
      if (r != row && (bits[r][word] & mask))
        for (int t = word; t < words; ++t) bits[r][t] ^= bits[row][t];
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace khwb
