#pragma once

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "springer/rational.hpp"

namespace springer {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = DenseMatrix<GaussianRational>;
using Vector = DenseVector<GaussianRational>;
using Index = Eigen::Index;

template <typename Scalar>
bool is_zero_matrix(const DenseMatrix<Scalar>& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Scalar>
bool mat_equal(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

/// In-place Gauss-Jordan. Returns the pivot columns (strictly increasing).
/// Pivots are scaled to 1 with zeros above and below; row space is preserved.
template <typename Scalar>
std::vector<Index> rref_in_place(DenseMatrix<Scalar>& m) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot_row = -1;
    for (Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != Scalar(0)) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) m.row(pivot_row).swap(m.row(row));
    Scalar inv = Scalar(1) / m(row, col);
    for (Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      Scalar factor = m(r, col);
      for (Index j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Scalar>
DenseMatrix<Scalar> rref(DenseMatrix<Scalar> m) {
  rref_in_place(m);
  return m;
}

template <typename Scalar>
Index rank(DenseMatrix<Scalar> m) {
  return static_cast<Index>(rref_in_place(m).size());
}

/// Canonical basis (as rows, in reduced echelon form) of {v : Mv = 0}.
template <typename Scalar>
DenseMatrix<Scalar> kernel_basis(DenseMatrix<Scalar> m) {
  const Index n = m.cols();
  std::vector<Index> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index p : pivots) is_pivot[static_cast<size_t>(p)] = true;

  const Index k = n - static_cast<Index>(pivots.size());
  DenseMatrix<Scalar> basis(k, n);
  basis.setConstant(Scalar(0));
  Index out = 0;
  for (Index free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    basis(out, free_col) = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i)
      basis(out, pivots[i]) = -m(static_cast<Index>(i), free_col);
    ++out;
  }
  rref_in_place(basis);
  return basis;
}

/// Exact solve Ax = b; nullopt when inconsistent. Free variables are set to 0.
template <typename Scalar>
std::optional<DenseVector<Scalar>> solve_exact(const DenseMatrix<Scalar>& a,
                                               const DenseVector<Scalar>& b) {
  DenseMatrix<Scalar> aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  std::vector<Index> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  DenseVector<Scalar> x(a.cols());
  x.setConstant(Scalar(0));
  for (size_t i = 0; i < pivots.size(); ++i) x(pivots[i]) = aug(static_cast<Index>(i), a.cols());
  return x;
}

Matrix parse_matrix_rows(const std::vector<std::vector<std::string>>& rows);
std::vector<std::vector<std::string>> format_matrix_rows(const Matrix& m);

}  // namespace springer
