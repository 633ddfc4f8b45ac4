#include "khwb/complex.hpp"

#include <algorithm>
#include <sstream>

#include "khwb/error.hpp"
#include "khwb/smith.hpp"

namespace khwb {

std::string BigradedGroups::str() const {
  std::ostringstream out;
  for (const auto& [deg, g] : groups) {
    out << "(" << deg.first << ", " << deg.second << "): rank " << g.rank;
    for (const Int& t : g.torsion) out << " + Z/" << t.str();
    out << "\n";
  }
  return out.str();
}

ChainComplex::ChainComplex(std::map<Bidegree, std::vector<std::string>> basis,
                           std::map<Bidegree, SpMat> diff, int shift_h, int shift_q)
    : basis_(std::move(basis)), diff_(std::move(diff)), shift_h_(shift_h), shift_q_(shift_q) {
  normalize_and_validate();
}

void ChainComplex::normalize_and_validate() {
  for (auto it = basis_.begin(); it != basis_.end();)
    it = it->second.empty() ? basis_.erase(it) : std::next(it);

  for (auto it = diff_.begin(); it != diff_.end();) {
    const auto [i, j] = it->first;
    const SpMat& m = it->second;
    if (m.rows() != dim(i + 1, j) || m.cols() != dim(i, j))
      throw ValidationError("differential block at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") has shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", basis wants " +
                            std::to_string(dim(i + 1, j)) + "x" + std::to_string(dim(i, j)));
    it = (m.rows() == 0 || m.cols() == 0 || is_zero(m)) ? diff_.erase(it) : std::next(it);
  }

  for (const auto& [deg, m] : diff_) {
    const auto [i, j] = deg;
    auto up = diff_.find({i + 1, j});
    if (up == diff_.end()) continue;
    SpMat dd = up->second * m;
    if (!is_zero(dd))
      throw ValidationError("d*d != 0 from degree (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  }
}

ChainComplex ChainComplex::build(const std::vector<GeneratorSpec>& generators,
                                 const std::map<int, SpMat>& differentials) {
  // stable-sort each degree's generators by quantum degree; remember where
  // every input position lands
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t g = 0; g < generators.size(); ++g)
    by_degree[generators[g].h].push_back(g);

  std::map<Bidegree, std::vector<std::string>> basis;
  // input position -> (bidegree, index inside the block)
  std::vector<std::pair<Bidegree, int>> place(generators.size());
  for (auto& [i, idx] : by_degree) {
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return generators[a].q < generators[b].q; });
    for (std::size_t g : idx) {
      Bidegree deg{i, generators[g].q};
      place[g] = {deg, static_cast<int>(basis[deg].size())};
      basis[deg].push_back(generators[g].label);
    }
  }

  std::map<Bidegree, std::vector<Triplet>> triplets;
  for (const auto& [i, m] : differentials) {
    const auto& cols_idx = by_degree.count(i) ? by_degree.at(i) : std::vector<std::size_t>{};
    const auto& rows_idx = by_degree.count(i + 1) ? by_degree.at(i + 1) : std::vector<std::size_t>{};
    if (m.cols() != static_cast<long>(cols_idx.size()) ||
        m.rows() != static_cast<long>(rows_idx.size()))
      throw ValidationError("differential at degree " + std::to_string(i) + " has shape " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", generators want " + std::to_string(rows_idx.size()) + "x" +
                            std::to_string(cols_idx.size()));
    for (int c = 0; c < m.outerSize(); ++c)
      for (SpMat::InnerIterator it(m, c); it; ++it) {
        if (it.value() == 0) continue;
        const auto& src = place[cols_idx[it.col()]];
        const auto& dst = place[rows_idx[it.row()]];
        if (src.first.second != dst.first.second)
          throw ValidationError("differential at degree " + std::to_string(i) +
                                " does not preserve quantum degree (q " +
                                std::to_string(src.first.second) + " -> " +
                                std::to_string(dst.first.second) + ")");
        triplets[src.first].emplace_back(dst.second, src.second, it.value());
      }
  }

  std::map<Bidegree, SpMat> diff;
  for (auto& [deg, ts] : triplets) {
    const auto [i, j] = deg;
    int rows = 0, cols = static_cast<int>(basis.at(deg).size());
    if (auto it = basis.find({i + 1, j}); it != basis.end()) rows = static_cast<int>(it->second.size());
    diff[deg] = sparse_from(rows, cols, ts);
  }
  return ChainComplex(std::move(basis), std::move(diff));
}

int ChainComplex::dim(int i, int j) const {
  auto it = basis_.find({i, j});
  return it == basis_.end() ? 0 : static_cast<int>(it->second.size());
}

long ChainComplex::total_rank() const {
  long n = 0;
  for (const auto& [deg, b] : basis_) n += static_cast<long>(b.size());
  return n;
}

const std::vector<std::string>& ChainComplex::labels(int i, int j) const {
  static const std::vector<std::string> empty;
  auto it = basis_.find({i, j});
  return it == basis_.end() ? empty : it->second;
}

SpMat ChainComplex::diff(int i, int j) const {
  auto it = diff_.find({i, j});
  if (it != diff_.end()) return it->second;
  return SpMat(dim(i + 1, j), dim(i, j));
}

std::vector<Bidegree> ChainComplex::bidegrees() const {
  std::vector<Bidegree> out;
  for (const auto& [deg, b] : basis_) out.push_back(deg);
  return out;
}

ChainComplex ChainComplex::shifted(int dh, int dq) const {
  std::map<Bidegree, std::vector<std::string>> basis;
  std::map<Bidegree, SpMat> diff;
  for (const auto& [deg, b] : basis_) basis[{deg.first + dh, deg.second + dq}] = b;
  const bool negate = dh & 1;
  for (const auto& [deg, m] : diff_) {
    SpMat blk = m;
    if (negate) blk = -blk;
    diff[{deg.first + dh, deg.second + dq}] = std::move(blk);
  }
  return ChainComplex(std::move(basis), std::move(diff), shift_h_ + dh, shift_q_ + dq);
}

int ChainComplex::total_dim(int i) const {
  int n = 0;
  for (const auto& [deg, b] : basis_)
    if (deg.first == i) n += static_cast<int>(b.size());
  return n;
}

std::vector<std::pair<int, std::string>> ChainComplex::degree_basis(int i) const {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& [deg, b] : basis_)
    if (deg.first == i)
      for (const std::string& label : b) out.emplace_back(deg.second, label);
  return out;
}

SpMat ChainComplex::full_differential(int i) const {
  std::vector<Triplet> ts;
  const int rows = total_dim(i + 1), cols = total_dim(i);
  int col0 = 0;
  for (const auto& [deg, b] : basis_) {
    if (deg.first != i) continue;
    const int j = deg.second;
    auto blk = diff_.find({i, j});
    if (blk != diff_.end()) {
      // row offset of the (i+1, j) block inside the concatenated degree i+1
      int row0 = 0;
      for (const auto& [deg2, b2] : basis_) {
        if (deg2.first != i + 1) continue;
        if (deg2.second == j) break;
        row0 += static_cast<int>(b2.size());
      }
      append_block(ts, blk->second, row0, col0);
    }
    col0 += static_cast<int>(b.size());
  }
  return sparse_from(rows, cols, ts);
}

std::string ChainComplex::matrix_dump() const {
  std::ostringstream out;
  out << "shift_h: " << shift_h_ << "\nshift_q: " << shift_q_ << "\n";
  for (const auto& [deg, b] : basis_) {
    out << "basis (" << deg.first << ", " << deg.second << "):";
    for (const std::string& label : b) out << " " << label;
    out << "\n";
  }
  for (const auto& [deg, m] : diff_) {
    out << "d (" << deg.first << ", " << deg.second << ") [" << m.rows() << "x" << m.cols()
        << "]:\n";
    for (int c = 0; c < m.outerSize(); ++c)
      for (SpMat::InnerIterator it(m, c); it; ++it)
        out << "  " << it.row() << " " << it.col() << " " << Int(it.value()).str() << "\n";
  }
  return out.str();
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::map<Bidegree, SpMat> blocks)
    : source_(std::move(source)), target_(std::move(target)), blocks_(std::move(blocks)) {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    const auto [i, j] = it->first;
    const SpMat& m = it->second;
    if (m.rows() != target_.dim(i, j) || m.cols() != source_.dim(i, j))
      throw ValidationError("chain map block at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") has shape " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
    it = is_zero(m) ? blocks_.erase(it) : std::next(it);
  }
  // commutes with the differentials, exactly
  for (const auto& deg : source_.bidegrees()) {
    const auto [i, j] = deg;
    SpMat lhs = target_.diff(i, j) * block(i, j);
    SpMat rhs = block(i + 1, j) * source_.diff(i, j);
    SpMat d = lhs - rhs;
    if (!is_zero(d))
      throw ValidationError("chain map does not commute with d at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
  }
}

SpMat ChainMap::block(int i, int j) const {
  auto it = blocks_.find({i, j});
  if (it != blocks_.end()) return it->second;
  return SpMat(target_.dim(i, j), source_.dim(i, j));
}

ChainMap identity_map(const ChainComplex& c) {
  std::map<Bidegree, SpMat> blocks;
  for (const auto& deg : c.bidegrees())
    blocks[deg] = sparse_identity(c.dim(deg.first, deg.second));
  return ChainMap(c, c, std::move(blocks));
}

ChainMap zero_map(ChainComplex source, ChainComplex target) {
  return ChainMap(std::move(source), std::move(target), {});
}

ChainComplex cone(const ChainMap& f) {
  const ChainComplex& x = f.source();
  const ChainComplex& y = f.target();

  std::map<Bidegree, std::vector<std::string>> basis;
  auto add_part = [&](const ChainComplex& c, int dh, const char* tag) {
    for (const auto& [deg, b] : c.basis()) {
      auto& out = basis[{deg.first + dh, deg.second}];
      for (const std::string& label : b) out.push_back(std::string(tag) + "|" + label);
    }
  };
  add_part(x, -1, "0");  // source lands one degree down: Cone^i ⊇ X^{i+1}
  add_part(y, 0, "1");

  std::map<Bidegree, SpMat> diff;
  for (const auto& [deg, b] : basis) {
    const auto [i, j] = deg;
    const int xc = x.dim(i + 1, j), yc = y.dim(i, j);
    const int xr = x.dim(i + 2, j), yr = y.dim(i + 1, j);
    std::vector<Triplet> ts;
    append_block(ts, x.diff(i + 1, j), 0, 0, /*negate=*/true);
    append_block(ts, f.block(i + 1, j), xr, 0);
    append_block(ts, y.diff(i, j), xr, xc);
    SpMat m = sparse_from(xr + yr, xc + yc, ts);
    if (!is_zero(m)) diff[deg] = std::move(m);
  }
  const bool same_shift = x.shift_h() == y.shift_h() && x.shift_q() == y.shift_q();
  return ChainComplex(std::move(basis), std::move(diff), same_shift ? x.shift_h() : 0,
                      same_shift ? x.shift_q() : 0);
}

namespace {

void check_cube(const Cube& cube) {
  const unsigned count = 1u << cube.dims;
  if (cube.vertices.size() != count)
    throw ValidationError("cube has " + std::to_string(cube.vertices.size()) +
                          " vertices, expected 2^" + std::to_string(cube.dims));
  for (unsigned mask = 0; mask < count; ++mask)
    for (int d = 0; d < cube.dims; ++d) {
      if (mask >> d & 1u) continue;
      auto it = cube.edges.find({mask, d});
      if (it == cube.edges.end())
        throw ValidationError("cube edge missing at mask " + std::to_string(mask) +
                              " direction " + std::to_string(d));
    }
  // exact commutation of every square face
  for (unsigned mask = 0; mask < count; ++mask)
    for (int k = 0; k < cube.dims; ++k) {
      if (mask >> k & 1u) continue;
      for (int l = k + 1; l < cube.dims; ++l) {
        if (mask >> l & 1u) continue;
        const ChainMap& ek = cube.edges.at({mask, k});
        const ChainMap& el = cube.edges.at({mask, l});
        const ChainMap& ek_then_l = cube.edges.at({mask | 1u << k, l});
        const ChainMap& el_then_k = cube.edges.at({mask | 1u << l, k});
        for (const auto& deg : cube.vertices[mask].bidegrees()) {
          const auto [i, j] = deg;
          SpMat a = ek_then_l.block(i, j) * ek.block(i, j);
          SpMat b = el_then_k.block(i, j) * el.block(i, j);
          SpMat d = a - b;
          if (!is_zero(d))
            throw ValidationError("cube face does not commute at mask " + std::to_string(mask) +
                                  " directions (" + std::to_string(k) + ", " + std::to_string(l) +
                                  ")");
        }
      }
    }
}

}  // namespace

ChainComplex cube_total(const Cube& cube, std::vector<int> fold_order) {
  if (cube.dims == 0) {
    if (cube.vertices.size() != 1) throw ValidationError("0-cube needs exactly one vertex");
    return cube.vertices[0];
  }
  check_cube(cube);

  if (fold_order.empty())
    for (int d = 0; d < cube.dims; ++d) fold_order.push_back(d);
  {
    std::vector<int> sorted = fold_order;
    std::sort(sorted.begin(), sorted.end());
    for (int d = 0; d < cube.dims; ++d)
      if (sorted[d] != d) throw ValidationError("fold order must be a permutation of the directions");
  }

  std::map<unsigned, ChainComplex> vertices;
  for (unsigned mask = 0; mask < (1u << cube.dims); ++mask) vertices[mask] = cube.vertices[mask];
  std::map<std::pair<unsigned, int>, ChainMap> edges = cube.edges;
  std::vector<int> remaining = fold_order;

  while (!remaining.empty()) {
    const int d = remaining.front();
    remaining.erase(remaining.begin());

    std::map<unsigned, ChainComplex> new_vertices;
    std::map<std::pair<unsigned, int>, ChainMap> new_edges;
    for (const auto& [mask, v] : vertices) {
      if (mask >> d & 1u) continue;
      new_vertices[mask] = cone(edges.at({mask, d}));
    }
    for (int l : remaining)
      for (const auto& [mask, v] : new_vertices) {
        if (mask >> l & 1u) continue;
        const ChainMap& f0 = edges.at({mask, l});
        const ChainMap& f1 = edges.at({mask | 1u << d, l});
        const ChainComplex& src = new_vertices.at(mask);
        const ChainComplex& dst = new_vertices.at(mask | 1u << l);
        std::map<Bidegree, SpMat> blocks;
        for (const auto& deg : src.bidegrees()) {
          const auto [i, j] = deg;
          std::vector<Triplet> ts;
          append_block(ts, f0.block(i + 1, j), 0, 0);
          append_block(ts, f1.block(i, j), f0.target().dim(i + 1, j), f0.source().dim(i + 1, j));
          SpMat m = sparse_from(dst.dim(i, j), src.dim(i, j), ts);
          if (!is_zero(m)) blocks[deg] = std::move(m);
        }
        new_edges.emplace(std::piecewise_construct, std::forward_as_tuple(mask, l),
                          std::forward_as_tuple(src, dst, std::move(blocks)));
      }
    vertices = std::move(new_vertices);
    edges = std::move(new_edges);
  }
  return vertices.at(0);
}

BigradedGroups homology(const ChainComplex& c, Coefficients coeff) {
  std::map<Bidegree, SmithSummary> smith;
  std::map<Bidegree, long> rank2;
  auto out_rank = [&](int i, int j) -> long {
    const Bidegree key{i, j};
    if (coeff == Coefficients::Z2) {
      auto it = rank2.find(key);
      if (it == rank2.end()) it = rank2.emplace(key, rank_mod2(c.diff(i, j))).first;
      return it->second;
    }
    auto it = smith.find(key);
    if (it == smith.end()) it = smith.emplace(key, smith_normal_form(c.diff(i, j))).first;
    return it->second.rank;
  };

  BigradedGroups h;
  for (const auto& [deg, basis] : c.basis()) {
    const auto [i, j] = deg;
    const long dim = static_cast<long>(basis.size());
    AbelianGroup g;
    g.rank = dim - out_rank(i, j) - out_rank(i - 1, j);
    if (coeff == Coefficients::Z) {
      auto in = smith.find({i - 1, j});
      g.torsion = in->second.invariants;
    }
    if (!g.trivial()) h.groups[deg] = std::move(g);
  }
  return h;
}

LaurentPoly euler_characteristic(const ChainComplex& c) {
  LaurentPoly chi;
  for (const auto& [deg, basis] : c.basis())
    chi.add_term(deg.second, (deg.first & 1) ? -Int(basis.size()) : Int(basis.size()));
  return chi;
}

bool is_acyclic(const ChainComplex& c) { return homology(c).trivial(); }

bool verify_contraction(const ChainComplex& c, const std::map<int, SpMat>& h) {
  std::vector<int> degrees;
  for (const auto& [deg, basis] : c.basis())
    if (degrees.empty() || degrees.back() != deg.first) degrees.push_back(deg.first);
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  auto h_at = [&](int i) -> SpMat {
    auto it = h.find(i);
    if (it == h.end()) return SpMat(c.total_dim(i - 1), c.total_dim(i));
    if (it->second.rows() != c.total_dim(i - 1) || it->second.cols() != c.total_dim(i))
      throw ValidationError("contraction block at degree " + std::to_string(i) +
                            " has shape " + std::to_string(it->second.rows()) + "x" +
                            std::to_string(it->second.cols()) + ", expected " +
                            std::to_string(c.total_dim(i - 1)) + "x" +
                            std::to_string(c.total_dim(i)));
    return it->second;
  };

  for (int i : degrees) {
    SpMat dh = c.full_differential(i - 1) * h_at(i);
    SpMat hd = h_at(i + 1) * c.full_differential(i);
    SpMat lhs = dh + hd;
    SpMat d = lhs - SpMat(sparse_identity(c.total_dim(i)));
    if (!is_zero(d)) return false;
  }
  return true;
}

}  // namespace khwb
