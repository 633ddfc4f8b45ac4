#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khwb/laurent.hpp"
#include "khwb/matrix.hpp"

namespace khwb {

// (homological degree i, quantum degree j)
using Bidegree = std::pair<int, int>;

struct AbelianGroup {
  long rank = 0;
  std::vector<Int> torsion;  // divisibility chain, entries > 1

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
};

struct BigradedGroups {
  std::map<Bidegree, AbelianGroup> groups;  // trivial groups omitted

  bool trivial() const { return groups.empty(); }
  bool operator==(const BigradedGroups&) const = default;
  std::string str() const;
};

struct GeneratorSpec {
  int h = 0;
  int q = 0;
  std::string label;
};

// Finitely generated free bigraded complex over Z.  Differentials raise the
// homological degree by one and preserve the quantum degree, so they are
// stored as one integer block per bidegree.  d composed with d is checked to
// vanish at construction.  shift_h/shift_q record how far the stored degrees
// have been translated from the raw ones.
class ChainComplex {
 public:
  ChainComplex() = default;  // zero complex

  ChainComplex(std::map<Bidegree, std::vector<std::string>> basis,
               std::map<Bidegree, SpMat> diff, int shift_h = 0, int shift_q = 0);

  // Build from generator list and one matrix per homological degree, whose
  // rows/columns follow the listed order.  Rejects entries between different
  // quantum degrees and nonzero d*d.
  static ChainComplex build(const std::vector<GeneratorSpec>& generators,
                            const std::map<int, SpMat>& differentials);

  int dim(int i, int j) const;
  long total_rank() const;
  const std::map<Bidegree, std::vector<std::string>>& basis() const { return basis_; }
  const std::vector<std::string>& labels(int i, int j) const;
  // block (i,j) -> (i+1,j); a zero matrix of the right shape when absent
  SpMat diff(int i, int j) const;
  const std::map<Bidegree, SpMat>& diff_blocks() const { return diff_; }

  std::vector<Bidegree> bidegrees() const;

  int shift_h() const { return shift_h_; }
  int shift_q() const { return shift_q_; }

  // Degrees translated by (dh, dq); the differential changes sign once per
  // odd dh; the recorded offsets accumulate.
  ChainComplex shifted(int dh, int dq) const;

  // whole homological degree i, all quantum degrees concatenated in j order
  int total_dim(int i) const;
  std::vector<std::pair<int, std::string>> degree_basis(int i) const;
  SpMat full_differential(int i) const;

  std::string matrix_dump() const;

 private:
  void normalize_and_validate();

  std::map<Bidegree, std::vector<std::string>> basis_;
  std::map<Bidegree, SpMat> diff_;
  int shift_h_ = 0;
  int shift_q_ = 0;
};

// Degree-preserving map of complexes; commutation with the differentials is
// verified exactly at construction.
class ChainMap {
 public:
  ChainMap(ChainComplex source, ChainComplex target, std::map<Bidegree, SpMat> blocks);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  SpMat block(int i, int j) const;
  const std::map<Bidegree, SpMat>& blocks() const { return blocks_; }

 private:
  ChainComplex source_, target_;
  std::map<Bidegree, SpMat> blocks_;
};

ChainMap identity_map(const ChainComplex& c);
ChainMap zero_map(ChainComplex source, ChainComplex target);

// Cone(f: X -> Y) with Cone^i = X^{i+1} (+) Y^i and d = [-d_X, 0; f, d_Y].
ChainComplex cone(const ChainMap& f);

// 2^dims complexes on the vertices, a chain map per edge; all square faces
// must commute exactly.
struct Cube {
  int dims = 0;
  std::vector<ChainComplex> vertices;              // index = direction bitmask
  std::map<std::pair<unsigned, int>, ChainMap> edges;  // (mask, dir), bit dir unset
};

// Iterated cone, folding one direction at a time (ascending by default).
// The result is independent of the fold order up to isomorphism; tests and
// the audit check this at the level of homology.
ChainComplex cube_total(const Cube& cube, std::vector<int> fold_order = {});

enum class Coefficients { Z, Z2 };

// Smith-normal-form homology: free rank and torsion per bidegree.  With Z2
// coefficients, dimensions over Z/2 are reported as ranks (no torsion).
BigradedGroups homology(const ChainComplex& c, Coefficients coeff = Coefficients::Z);

LaurentPoly euler_characteristic(const ChainComplex& c);

bool is_acyclic(const ChainComplex& c);

// Check d H + H d = I for a supplied degree -1 homotopy (one matrix per
// homological degree, on the concatenated bases); a passing H certifies that
// the complex is acyclic.
bool verify_contraction(const ChainComplex& c, const std::map<int, SpMat>& h);

}  // namespace khwb
