#include "khwb/khovanov.hpp"

#include <algorithm>

#include "khwb/error.hpp"

namespace khwb {

namespace {

struct StateInfo {
  std::vector<int> arc_circle;  // arc label -> circle index (sorted order)
  int arc_circles = 0;          // circles carrying arcs
  int circles = 0;              // including crossing-free ones
  std::vector<int> gen_index;   // labeling mask -> index inside its (i,j) block
};

StateInfo state_info(const KnotDiagram& d, const Resolution& r) {
  StateInfo info;
  info.arc_circle.assign(d.arc_count() + 1, -1);
  info.arc_circles = static_cast<int>(r.circles.size());
  info.circles = r.circle_count;
  for (int c = 0; c < info.arc_circles; ++c)
    for (int a : r.circles[c]) info.arc_circle[a] = c;
  return info;
}

int popcount(std::uint32_t x) { return __builtin_popcount(x); }

std::string gen_label(int n, std::uint32_t state, int circles, std::uint32_t labels) {
  std::string s(n, '0');
  for (int k = 0; k < n; ++k)
    if (state >> k & 1u) s[k] = '1';
  s += ":";
  for (int c = 0; c < circles; ++c) s += (labels >> c & 1u) ? '+' : '-';
  return s;
}

}  // namespace

CubeData CubeData::shifted(int dh, int dq) const {
  CubeData out;
  out.n = n;
  out.complex = complex.shifted(dh, dq);
  for (const auto& [deg, v] : gens) out.gens[{deg.first + dh, deg.second + dq}] = v;
  return out;
}

CubeData build_cube_raw(const KnotDiagram& d, std::size_t max_states) {
  const int n = d.crossing_count();
  if (n > 31 || (std::size_t(1) << n) > max_states)
    throw GuardError("build_cube_raw: 2^" + std::to_string(n) + " states exceeds the guard");
  const std::uint32_t states = 1u << n;

  std::vector<Resolution> res;
  res.reserve(states);
  std::vector<StateInfo> info;
  info.reserve(states);
  for (std::uint32_t s = 0; s < states; ++s) {
    res.push_back(d.resolve(s));
    info.push_back(state_info(d, res.back()));
  }

  CubeData data;
  data.n = n;
  std::map<Bidegree, std::vector<std::string>> basis;
  for (std::uint32_t s = 0; s < states; ++s) {
    const int i = popcount(s);
    const int c = info[s].circles;
    info[s].gen_index.assign(std::size_t(1) << c, -1);
    for (std::uint32_t m = 0; m < (1u << c); ++m) {
      const int j = 2 * popcount(m) - c + i;
      auto& block = basis[{i, j}];
      info[s].gen_index[m] = static_cast<int>(block.size());
      block.push_back(gen_label(n, s, c, m));
      data.gens[{i, j}].push_back(CubeGen{s, m});
    }
  }

  std::map<Bidegree, std::vector<Triplet>> triplets;
  auto emit = [&](int i, int j, std::uint32_t t_state, std::uint32_t t_mask, int col, int sgn) {
    triplets[{i, j}].emplace_back(info[t_state].gen_index[t_mask], col, Int(sgn));
  };

  for (std::uint32_t s = 0; s < states; ++s) {
    const StateInfo& si = info[s];
    const int i = popcount(s);
    for (int p = 0; p < n; ++p) {
      if (s >> p & 1u) continue;
      const std::uint32_t t = s | (1u << p);
      const StateInfo& ti = info[t];
      const int sign = (popcount(s & ((1u << p) - 1)) & 1) ? -1 : +1;

      const auto& arcs = d.crossings()[p].arc;
      const int s1 = si.arc_circle[arcs[0]], s2 = si.arc_circle[arcs[2]];
      const int t1 = ti.arc_circle[arcs[0]], t2 = ti.arc_circle[arcs[1]];
      const bool merge = s1 != s2;
      if (ti.circles != si.circles + (merge ? -1 : +1))
        throw ValidationError("edge is neither a merge nor a split");

      // transport of untouched circles, matching arc sets via representatives
      std::vector<int> corr(si.circles, -1);
      for (int c = 0; c < si.circles; ++c) {
        if (c >= si.arc_circles)
          corr[c] = ti.arc_circles + (c - si.arc_circles);
        else if ((merge && (c == s1 || c == s2)) || (!merge && c == s1))
          corr[c] = -1;
        else
          corr[c] = ti.arc_circle[res[s].circles[c].front()];
      }

      for (std::uint32_t m = 0; m < (1u << si.circles); ++m) {
        const int col = si.gen_index[m];
        const int j = 2 * popcount(m) - si.circles + i;
        std::uint32_t base = 0;
        for (int c = 0; c < si.circles; ++c)
          if (corr[c] >= 0 && (m >> c & 1u)) base |= 1u << corr[c];

        if (merge) {
          const bool x = m >> s1 & 1u, y = m >> s2 & 1u;
          if (!x && !y) continue;  // m(v- ⊗ v-) = 0
          std::uint32_t out = base;
          if (x && y) out |= 1u << t1;  // v+ ⊗ v+ -> v+, mixed -> v-
          emit(i, j, t, out, col, sign);
        } else {
          const bool x = m >> s1 & 1u;
          if (x) {
            emit(i, j, t, base | (1u << t1), col, sign);  // v+ -> v+v- + v-v+
            emit(i, j, t, base | (1u << t2), col, sign);
          } else {
            emit(i, j, t, base, col, sign);  // v- -> v-v-
          }
        }
      }
    }
  }

  std::map<Bidegree, SpMat> diff;
  for (auto& [deg, ts] : triplets) {
    const auto [i, j] = deg;
    const int rows = basis.count({i + 1, j}) ? static_cast<int>(basis.at({i + 1, j}).size()) : 0;
    const int cols = static_cast<int>(basis.at(deg).size());
    diff[deg] = sparse_from(rows, cols, ts);
  }
  data.complex = ChainComplex(std::move(basis), std::move(diff));
  return data;
}

CubeData build_ckh_data(const KnotDiagram& d, std::size_t max_states) {
  if (d.component_count() != 1)
    throw ValidationError("build_ckh: diagram has " + std::to_string(d.component_count()) +
                          " components; only knots are supported here");
  CubeData raw = build_cube_raw(d, max_states);
  const int n_minus = d.negative_crossings();
  const int n_plus = d.positive_crossings();
  return raw.shifted(-n_minus, n_plus - 2 * n_minus);
}

ChainComplex build_ckh(const KnotDiagram& d, std::size_t max_states) {
  return build_ckh_data(d, max_states).complex;
}

SpMat edge_map(const KnotDiagram& d, std::uint32_t state, int pos) {
  const int n = d.crossing_count();
  if (pos < 0 || pos >= n) throw std::out_of_range("crossing position out of range");
  if (state >> pos & 1u) throw ValidationError("edge_map: bit already 1 at the given position");

  const Resolution rs = d.resolve(state);
  const Resolution rt = d.resolve(state | (1u << pos));
  const StateInfo si = state_info(d, rs);
  const StateInfo ti = state_info(d, rt);
  const int sign = (__builtin_popcount(state & ((1u << pos) - 1)) & 1) ? -1 : +1;

  const auto& arcs = d.crossings()[pos].arc;
  const int s1 = si.arc_circle[arcs[0]], s2 = si.arc_circle[arcs[2]];
  const int t1 = ti.arc_circle[arcs[0]], t2 = ti.arc_circle[arcs[1]];
  const bool merge = s1 != s2;

  std::vector<int> corr(si.circles, -1);
  for (int c = 0; c < si.circles; ++c) {
    if (c >= si.arc_circles)
      corr[c] = ti.arc_circles + (c - si.arc_circles);
    else if ((merge && (c == s1 || c == s2)) || (!merge && c == s1))
      corr[c] = -1;
    else
      corr[c] = ti.arc_circle[rs.circles[c].front()];
  }

  std::vector<Triplet> ts;
  for (std::uint32_t m = 0; m < (1u << si.circles); ++m) {
    std::uint32_t base = 0;
    for (int c = 0; c < si.circles; ++c)
      if (corr[c] >= 0 && (m >> c & 1u)) base |= 1u << corr[c];
    if (merge) {
      const bool x = m >> s1 & 1u, y = m >> s2 & 1u;
      if (!x && !y) continue;
      std::uint32_t out = base;
      if (x && y) out |= 1u << t1;
      ts.emplace_back(out, m, Int(sign));
    } else {
      const bool x = m >> s1 & 1u;
      if (x) {
        ts.emplace_back(base | (1u << t1), m, Int(sign));
        ts.emplace_back(base | (1u << t2), m, Int(sign));
      } else {
        ts.emplace_back(base, m, Int(sign));
      }
    }
  }
  return sparse_from(1 << ti.circles, 1 << si.circles, ts);
}

CrossingSplit crossing_split(const KnotDiagram& d, int k, std::size_t max_states) {
  if (k < 0 || k >= d.crossing_count()) throw std::out_of_range("crossing index out of range");
  const CubeData data = build_ckh_data(d, max_states);

  CrossingSplit split;
  std::map<Bidegree, std::vector<std::string>> basis0, basis1;
  std::map<Bidegree, std::vector<int>> local;  // parent position -> position in its part
  for (const auto& [deg, gens] : data.gens) {
    const auto& labels = data.complex.labels(deg.first, deg.second);
    auto& pos = local[deg];
    pos.resize(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const bool one = gens[g].state >> k & 1u;
      auto& basis = one ? basis1[deg] : basis0[deg];
      auto& where = one ? split.c1_pos[deg] : split.c0_pos[deg];
      pos[g] = static_cast<int>(basis.size());
      basis.push_back(labels[g]);
      where.push_back(static_cast<int>(g));
    }
  }

  std::map<Bidegree, std::vector<Triplet>> d0, d1, d01;
  for (const auto& [deg, m] : data.complex.diff_blocks()) {
    const auto [i, j] = deg;
    const auto& src = data.gens.at(deg);
    const auto& dst = data.gens.at({i + 1, j});
    for (int c = 0; c < m.outerSize(); ++c)
      for (SpMat::InnerIterator it(m, c); it; ++it) {
        const bool src1 = src[it.col()].state >> k & 1u;
        const bool dst1 = dst[it.row()].state >> k & 1u;
        const int col = local.at(deg)[it.col()];
        const int row = local.at({i + 1, j})[it.row()];
        if (!src1 && !dst1)
          d0[deg].emplace_back(row, col, it.value());
        else if (src1 && dst1)
          d1[deg].emplace_back(row, col, it.value());
        else if (!src1 && dst1)
          d01[deg].emplace_back(row, col, it.value());
        else
          split.lower_left_zero = false;  // a c1 -> c0 component; Theorem 1 says none exist
      }
  }

  auto block_dim = [](const std::map<Bidegree, std::vector<std::string>>& b, int i, int j) {
    auto it = b.find({i, j});
    return it == b.end() ? 0 : static_cast<int>(it->second.size());
  };
  auto assemble = [&](std::map<Bidegree, std::vector<Triplet>>& ts,
                      const std::map<Bidegree, std::vector<std::string>>& rows_basis,
                      const std::map<Bidegree, std::vector<std::string>>& cols_basis) {
    std::map<Bidegree, SpMat> out;
    for (auto& [deg, t] : ts) {
      const auto [i, j] = deg;
      out[deg] = sparse_from(block_dim(rows_basis, i + 1, j), block_dim(cols_basis, i, j), t);
    }
    return out;
  };

  std::map<Bidegree, SpMat> m0 = assemble(d0, basis0, basis0);
  std::map<Bidegree, SpMat> m1 = assemble(d1, basis1, basis1);
  split.d01 = assemble(d01, basis1, basis0);
  split.c0 = ChainComplex(std::move(basis0), std::move(m0), data.complex.shift_h(),
                          data.complex.shift_q());
  split.c1 = ChainComplex(std::move(basis1), std::move(m1), data.complex.shift_h(),
                          data.complex.shift_q());
  return split;
}

}  // namespace khwb
