#pragma once

#include <Eigen/Dense>
#include <Eigen/SparseCore>
#include <boost/multiprecision/eigen.hpp>

#include "khwb/integers.hpp"

namespace khwb {

using SpMat = Eigen::SparseMatrix<Int>;
using DenseMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using Triplet = Eigen::Triplet<Int>;

inline SpMat sparse_from(int rows, int cols, const std::vector<Triplet>& ts) {
  SpMat m(rows, cols);
  m.setFromTriplets(ts.begin(), ts.end());
  m.prune([](int, int, const Int& v) { return v != 0; });
  return m;
}

inline SpMat sparse_identity(int n) {
  SpMat m(n, n);
  m.setIdentity();
  return m;
}

inline bool is_zero(const SpMat& m) {
  for (int c = 0; c < m.outerSize(); ++c)
    for (SpMat::InnerIterator it(m, c); it; ++it)
      if (it.value() != 0) return false;
  return true;
}

inline bool equal(const SpMat& a, const SpMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  SpMat d = a - b;
  return is_zero(d);
}

inline DenseMat to_dense(const SpMat& m) {
  DenseMat d = DenseMat::Zero(m.rows(), m.cols());
  for (int c = 0; c < m.outerSize(); ++c)
    for (SpMat::InnerIterator it(m, c); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

inline SpMat to_sparse(const DenseMat& d) {
  std::vector<Triplet> ts;
  for (int r = 0; r < d.rows(); ++r)
    for (int c = 0; c < d.cols(); ++c)
      if (d(r, c) != 0) ts.emplace_back(r, c, d(r, c));
  return sparse_from(static_cast<int>(d.rows()), static_cast<int>(d.cols()), ts);
}

inline void append_block(std::vector<Triplet>& ts, const SpMat& m, int row0, int col0,
                         bool negate = false) {
  for (int c = 0; c < m.outerSize(); ++c)
    for (SpMat::InnerIterator it(m, c); it; ++it)
      ts.emplace_back(row0 + static_cast<int>(it.row()), col0 + static_cast<int>(it.col()),
                      negate ? Int(-it.value()) : it.value());
}

}  // namespace khwb
