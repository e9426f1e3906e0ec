#pragma once

#include <utility>

#include <Eigen/Core>

#include "raypf/bigint.hpp"

namespace raypf {

/// Fraction-free (Bareiss) determinant. For integer scalars every division is
/// exact, so no intermediate leaves the ring. Zero pivots are resolved by a
/// row search below the pivot; a column with no nonzero pivot means the
/// determinant is exactly zero.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);

  DenseMatrix<Scalar> m = input;
  Scalar previous(1);
  bool negate = false;

  for (Eigen::Index p = 0; p + 1 < n; ++p) {
    if (m(p, p) == Scalar(0)) {
      Eigen::Index swap_row = p + 1;
      while (swap_row < n && m(swap_row, p) == Scalar(0)) ++swap_row;
      if (swap_row == n) return Scalar(0);
      m.row(p).swap(m.row(swap_row));
      negate = !negate;
    }
    for (Eigen::Index i = p + 1; i < n; ++i) {
      for (Eigen::Index j = p + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(p, p) - m(i, p) * m(p, j)) / previous;
      }
    }
    previous = m(p, p);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

}  // namespace raypf
