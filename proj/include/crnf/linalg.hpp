#pragma once

#include "crnf/scalar.hpp"

#include <Eigen/Core>

#include <vector>

namespace crnf {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
struct SolveResult {
  Matrix<Scalar> x;  // one column per right-hand side; free variables set to zero
  int rank = 0;
  bool consistent = true;
  bool unique() const { return consistent && rank == x.rows(); }
};

/// Solves A·X = B exactly.  Rectangular and rank-deficient A are allowed.
///
/// Forward elimination is Bareiss-style: every update is
///   a_ij ← (a_pp·a_ij − a_ip·a_pj) / previous pivot
/// which keeps integer data integral; over a field the division is exact anyway.
template <typename Scalar>
SolveResult<Scalar> bareiss_solve(Matrix<Scalar> a, Matrix<Scalar> b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  const Eigen::Index rhs = b.cols();
  Scalar prev(1);
  std::vector<Eigen::Index> pivot_cols;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      a.row(p).swap(a.row(r));
      b.row(p).swap(b.row(r));
    }
    const Scalar piv = a(r, c);
    for (Eigen::Index i = r + 1; i < rows; ++i) {
      const Scalar lead = a(i, c);
      for (Eigen::Index j = c + 1; j < cols; ++j) a(i, j) = (piv * a(i, j) - lead * a(r, j)) / prev;
      for (Eigen::Index j = 0; j < rhs; ++j) b(i, j) = (piv * b(i, j) - lead * b(r, j)) / prev;
      a(i, c) = Scalar(0);
    }
    prev = piv;
    pivot_cols.push_back(c);
    ++r;
  }
  SolveResult<Scalar> out;
  out.rank = int(r);
  for (Eigen::Index i = r; i < rows && out.consistent; ++i) {
    for (Eigen::Index j = 0; j < rhs; ++j) {
      if (!is_zero(b(i, j))) {
        out.consistent = false;
        break;
      }
    }
  }
  out.x = Matrix<Scalar>::Constant(cols, rhs, Scalar(0));
  for (Eigen::Index k = r - 1; k >= 0; --k) {
    const Eigen::Index c = pivot_cols[k];
    for (Eigen::Index j = 0; j < rhs; ++j) {
      Scalar acc = b(k, j);
      for (Eigen::Index q = c + 1; q < cols; ++q) {
        if (!is_zero(a(k, q)) && !is_zero(out.x(q, j))) acc -= a(k, q) * out.x(q, j);
      }
      out.x(c, j) = acc / a(k, c);
    }
  }
  return out;
}

}  // namespace crnf
