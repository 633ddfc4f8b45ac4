#include "khwb/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace khwb {

namespace {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Smoothing joins, as slot pairs: the 0-smoothing joins (0,1) and (2,3),
// the 1-smoothing joins (0,3) and (1,2).
constexpr int kJoins[2][2][2] = {{{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}};

}  // namespace

std::string Resolution::state_string() const {
  std::string s(crossing_count, '0');
  for (int k = 0; k < crossing_count; ++k)
    if (state >> k & 1u) s[k] = '1';
  return s;
}

KnotDiagram KnotDiagram::unlink(int circles) {
  if (circles < 0) throw ValidationError("unlink: negative circle count");
  return KnotDiagram({}, circles);
}

KnotDiagram::KnotDiagram(std::vector<Crossing> crossings, int free_circles, std::string name)
    : crossings_(std::move(crossings)), free_circles_(free_circles), name_(std::move(name)) {
  if (free_circles_ < 0) throw ValidationError("negative free circle count");
  arc_count_ = 2 * crossing_count();
  validate_labels();
  orient();
  count_components();
}

void KnotDiagram::validate_labels() const {
  std::vector<int> seen(arc_count_ + 1, 0);
  for (const Crossing& c : crossings_)
    for (int a : c.arc) {
      if (a < 1 || a > arc_count_)
        throw ValidationError("arc label " + std::to_string(a) + " outside 1.." +
                              std::to_string(arc_count_));
      ++seen[a];
    }
  for (int a = 1; a <= arc_count_; ++a)
    if (seen[a] != 2)
      throw ValidationError("arc label " + std::to_string(a) + " appears " +
                            std::to_string(seen[a]) + " times, expected 2");
}

// Solve for a coherent strand orientation.  Slot 0 is incoming and slot 2
// outgoing by the PD convention; the two occurrences of an arc must have
// opposite roles, and the over-strand slots 1,3 of a crossing must too.
void KnotDiagram::orient() {
  const int n = crossing_count();
  incoming_.assign(n, {false, false, false, false});
  if (n == 0) return;

  // occurrences[a] = up to two (crossing, slot) positions of arc a
  std::vector<std::vector<std::pair<int, int>>> occ(arc_count_ + 1);
  for (int k = 0; k < n; ++k)
    for (int s = 0; s < 4; ++s) occ[crossings_[k].arc[s]].push_back({k, s});

  std::vector<std::array<bool, 4>> known(n, {false, false, false, false});
  std::vector<std::pair<int, int>> work;

  auto assign = [&](int k, int s, bool in) {
    if (known[k][s]) {
      if (incoming_[k][s] != in)
        throw ValidationError("orientation inconsistency at crossing " + std::to_string(k));
      return;
    }
    known[k][s] = true;
    incoming_[k][s] = in;
    work.push_back({k, s});
  };

  for (int k = 0; k < n; ++k) {
    assign(k, 0, true);
    assign(k, 2, false);
  }
  std::size_t head = 0;
  auto propagate = [&] {
    while (head < work.size()) {
      auto [k, s] = work[head++];
      const bool in = incoming_[k][s];
      for (auto [k2, s2] : occ[crossings_[k].arc[s]])
        if (k2 != k || s2 != s) assign(k2, s2, !in);
      if (s == 1 || s == 3) assign(k, 4 - s, !in);
    }
  };
  propagate();

  // Strands passing over everywhere are unconstrained; fix a direction.
  for (int k = 0; k < n; ++k)
    if (!known[k][3]) {
      assign(k, 3, true);
      propagate();
    }
}

void KnotDiagram::count_components() {
  const int n = crossing_count();
  // successor along the orientation: arc entering a passage -> arc leaving it
  std::vector<int> succ(arc_count_ + 1, 0);
  for (int k = 0; k < n; ++k) {
    const Crossing& c = crossings_[k];
    succ[c.arc[0]] = c.arc[2];
    const int over_in = incoming_[k][3] ? 3 : 1;
    succ[c.arc[over_in]] = c.arc[4 - over_in];
  }
  std::vector<bool> visited(arc_count_ + 1, false);
  int cycles = 0;
  for (int a = 1; a <= arc_count_; ++a) {
    if (visited[a]) continue;
    ++cycles;
    for (int x = a; !visited[x]; x = succ[x]) visited[x] = true;
  }
  component_count_ = cycles + free_circles_;
}

int KnotDiagram::sign(int k) const {
  if (k < 0 || k >= crossing_count()) throw std::out_of_range("crossing index out of range");
  // over-strand entering at slot 3 crosses left-to-right under the strand
  // orientation frame, giving a positive crossing
  return incoming_[k][3] ? +1 : -1;
}

int KnotDiagram::writhe() const {
  int w = 0;
  for (int k = 0; k < crossing_count(); ++k) w += sign(k);
  return w;
}

int KnotDiagram::positive_crossings() const {
  return (crossing_count() + writhe()) / 2;
}

int KnotDiagram::negative_crossings() const {
  return (crossing_count() - writhe()) / 2;
}

bool KnotDiagram::incoming(int k, int slot) const {
  if (k < 0 || k >= crossing_count()) throw std::out_of_range("crossing index out of range");
  return incoming_[k][slot & 3];
}

KnotDiagram KnotDiagram::named(std::string name) const {
  KnotDiagram d = *this;
  d.name_ = std::move(name);
  return d;
}

KnotDiagram KnotDiagram::switched(int k) const {
  if (k < 0 || k >= crossing_count()) throw std::out_of_range("crossing index out of range");
  std::vector<Crossing> cs = crossings_;
  const auto& a = cs[k].arc;
  // re-root the tuple at the old over-strand entry, keeping the ccw order
  cs[k].arc = incoming_[k][3] ? std::array<int, 4>{a[3], a[0], a[1], a[2]}
                              : std::array<int, 4>{a[1], a[2], a[3], a[0]};
  return KnotDiagram(std::move(cs), free_circles_, name_);
}

KnotDiagram KnotDiagram::mirrored() const {
  std::vector<Crossing> cs = crossings_;
  for (int k = 0; k < crossing_count(); ++k) {
    const auto& a = crossings_[k].arc;
    cs[k].arc = incoming_[k][3] ? std::array<int, 4>{a[3], a[0], a[1], a[2]}
                                : std::array<int, 4>{a[1], a[2], a[3], a[0]};
  }
  return KnotDiagram(std::move(cs), free_circles_, name_);
}

Resolution KnotDiagram::resolve(std::uint32_t state) const {
  const int n = crossing_count();
  if (n > 31) throw GuardError("resolve: too many crossings for a state mask");
  if (n < 31 && state >= (1u << n)) throw ValidationError("resolve: state has bits beyond crossing count");

  UnionFind uf(arc_count_ + 1);
  for (int k = 0; k < n; ++k) {
    const int bit = state >> k & 1u;
    for (const auto& join : kJoins[bit])
      uf.unite(crossings_[k].arc[join[0]], crossings_[k].arc[join[1]]);
  }
  std::map<int, std::vector<int>> by_root;
  for (int a = 1; a <= arc_count_; ++a) by_root[uf.find(a)].push_back(a);

  Resolution r;
  r.state = state;
  r.crossing_count = n;
  for (auto& [root, arcs] : by_root) r.circles.push_back(std::move(arcs));
  std::sort(r.circles.begin(), r.circles.end(),
            [](const auto& x, const auto& y) { return x.front() < y.front(); });
  r.circle_count = static_cast<int>(r.circles.size()) + free_circles_;
  return r;
}

Resolution KnotDiagram::resolve(const std::vector<std::uint8_t>& state_bits) const {
  if (static_cast<int>(state_bits.size()) != crossing_count())
    throw ValidationError("resolve: state length " + std::to_string(state_bits.size()) +
                          " does not match crossing count " + std::to_string(crossing_count()));
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < state_bits.size(); ++i)
    if (state_bits[i]) mask |= 1u << i;
  return resolve(mask);
}

KnotDiagram KnotDiagram::smoothed(int k, int bit) const {
  if (k < 0 || k >= crossing_count()) throw std::out_of_range("crossing index out of range");
  if (bit != 0 && bit != 1) throw ValidationError("smoothing bit must be 0 or 1");

  const Crossing& cr = crossings_[k];
  const int pair_a[2] = {cr.arc[kJoins[bit][0][0]], cr.arc[kJoins[bit][0][1]]};
  const int pair_b[2] = {cr.arc[kJoins[bit][1][0]], cr.arc[kJoins[bit][1][1]]};
  const bool in_a0 = incoming_[k][kJoins[bit][0][0]], in_a1 = incoming_[k][kJoins[bit][0][1]];

  std::vector<Crossing> cs = crossings_;

  // The join is disoriented when it glues two incoming (or two outgoing)
  // ends; the strand section between the glue points must then be reversed,
  // which re-roots the under-strand tuples it passes through.
  const bool self_a = pair_a[0] == pair_a[1], self_b = pair_b[0] == pair_b[1];
  if (in_a0 == in_a1 && !self_a && !self_b) {
    std::vector<int> succ(arc_count_ + 1, 0);
    std::vector<std::pair<int, bool>> passage(arc_count_ + 1, {-1, false});  // (crossing, is_under)
    for (int c = 0; c < crossing_count(); ++c) {
      succ[crossings_[c].arc[0]] = crossings_[c].arc[2];
      passage[crossings_[c].arc[0]] = {c, true};
      const int oi = incoming_[c][3] ? 3 : 1;
      succ[crossings_[c].arc[oi]] = crossings_[c].arc[4 - oi];
      passage[crossings_[c].arc[oi]] = {c, false};
    }
    // walk from the outgoing end of one pair to an incoming end of the other,
    // re-rooting under-passages along the way
    const int start = in_a0 ? pair_b[0] : pair_a[0];
    const int head_a = in_a0 ? pair_a[0] : pair_b[0];
    const int head_b = in_a0 ? pair_a[1] : pair_b[1];
    for (int x = start; x != head_a && x != head_b;) {
      auto [c, under] = passage[x];
      if (c == k || c < 0)
        throw ValidationError("smoothing walk left the strand");  // cannot happen on valid input
      if (under) {
        auto& a = cs[c].arc;
        a = {a[2], a[3], a[0], a[1]};
      }
      x = succ[x];
    }
  }

  // glue the two pairs, drop crossing k, relabel contiguously
  UnionFind uf(arc_count_ + 1);
  uf.unite(pair_a[0], pair_a[1]);
  uf.unite(pair_b[0], pair_b[1]);
  cs.erase(cs.begin() + k);

  std::vector<bool> used(arc_count_ + 1, false);
  for (const Crossing& c : cs)
    for (int a : c.arc) used[uf.find(a)] = true;

  int closed = 0;
  std::map<int, int> relabel;
  for (int a = 1; a <= arc_count_; ++a) {
    if (uf.find(a) != a) continue;
    if (used[a])
      relabel[a] = static_cast<int>(relabel.size()) + 1;
    else
      ++closed;
  }
  for (Crossing& c : cs)
    for (int& a : c.arc) a = relabel.at(uf.find(a));

  return KnotDiagram(std::move(cs), free_circles_ + closed, name_);
}

std::string KnotDiagram::pd() const {
  std::ostringstream out;
  out << "PD[";
  bool first = true;
  for (const Crossing& c : crossings_) {
    if (!first) out << ",";
    first = false;
    out << "X(" << c.arc[0] << "," << c.arc[1] << "," << c.arc[2] << "," << c.arc[3] << ")";
  }
  // crossing-free circles render as O tokens; a bare PD[] is the unknot
  const int extra = (crossings_.empty() && free_circles_ == 1) ? 0 : free_circles_;
  for (int i = 0; i < extra; ++i) {
    if (!first) out << ",";
    first = false;
    out << "O";
  }
  out << "]";
  return out.str();
}

KnotDiagram KnotDiagram::parse(const std::string& text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (i >= text.size() || text[i] != c)
      throw ParseError(i, std::string("expected '") + c + "'");
    ++i;
  };
  auto parse_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError(i, "expected an arc label");
    if (i - start > 6) throw ParseError(start, "arc label too large");
    return std::stoi(text.substr(start, i - start));
  };

  expect('P');
  expect('D');
  expect('[');
  std::vector<Crossing> crossings;
  int circles = 0;
  skip_ws();
  if (i < text.size() && text[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == 'X') {
        ++i;
        expect('(');
        Crossing c{};
        for (int s = 0; s < 4; ++s) {
          if (s) expect(',');
          c.arc[s] = parse_int();
        }
        expect(')');
        crossings.push_back(c);
      } else if (i < text.size() && text[i] == 'O') {
        ++i;
        ++circles;
      } else {
        throw ParseError(i, "expected 'X' or 'O'");
      }
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(']');
      break;
    }
  }
  skip_ws();
  if (i != text.size()) throw ParseError(i, "trailing characters after PD code");
  if (crossings.empty() && circles == 0) circles = 1;  // PD[] is the unknot
  return KnotDiagram(std::move(crossings), circles);
}

std::string SingularDiagram::id() const {
  std::ostringstream out;
  out << (base.name().empty() ? base.pd() : base.name()) << "[d";
  for (std::size_t i = 0; i < doubled.size(); ++i) out << (i ? "," : "") << doubled[i];
  out << "]";
  return out.str();
}

SingularDiagram mark_singular(const KnotDiagram& d, std::vector<int> ks) {
  std::sort(ks.begin(), ks.end());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    if (ks[i] < 0 || ks[i] >= d.crossing_count())
      throw std::out_of_range("double point index out of range");
    if (i > 0 && ks[i] == ks[i - 1]) throw ValidationError("duplicate double point index");
  }
  return SingularDiagram{d, std::move(ks)};
}

}  // namespace khwb
