#include "springer/subspace.hpp"

#include <sstream>
#include <stdexcept>

namespace springer {

Subspace Subspace::span(Matrix vectors) {
  Index ambient = vectors.cols();
  std::vector<Index> pivots = rref_in_place(vectors);
  Matrix basis = vectors.topRows(static_cast<Index>(pivots.size()));
  return Subspace(ambient, std::move(basis));
}

Subspace Subspace::span_of(const std::vector<Vector>& vectors, Index ambient) {
  Matrix m(static_cast<Index>(vectors.size()), ambient);
  for (size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw std::invalid_argument("span_of: vector size mismatch");
    m.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return span(std::move(m));
}

bool contains(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("contains: ambient mismatch");
  Vector w = v;
  const Matrix& b = s.basis();
  for (Index r = 0; r < b.rows(); ++r) {
    Index pivot = -1;
    for (Index j = 0; j < b.cols(); ++j) {
      if (b(r, j) != GaussianRational(0)) {
        pivot = j;
        break;
      }
    }
    if (w(pivot) != GaussianRational(0)) {
      GaussianRational factor = w(pivot);
      for (Index j = pivot; j < w.size(); ++j) w(j) -= factor * b(r, j);
    }
  }
  for (Index j = 0; j < w.size(); ++j)
    if (w(j) != GaussianRational(0)) return false;
  return true;
}

bool contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    throw std::invalid_argument("contains: ambient mismatch");
  for (Index r = 0; r < inner.dim(); ++r)
    if (!contains(outer, inner.basis_vector(r))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
  stacked.topRows(a.dim()) = a.basis();
  stacked.bottomRows(b.dim()) = b.basis();
  return Subspace::span(std::move(stacked));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersect: ambient mismatch");
  const Index n = a.ambient_dim();
  // v in A cap B  <=>  v = A^T alpha = B^T beta; kernel of [A^T | -B^T].
  Matrix system(n, a.dim() + b.dim());
  system.leftCols(a.dim()) = a.basis().transpose();
  system.rightCols(b.dim()) = -b.basis().transpose();
  Matrix coeffs = kernel_basis(system);  // rows (alpha, beta)
  Matrix vectors(coeffs.rows(), n);
  for (Index r = 0; r < coeffs.rows(); ++r)
    vectors.row(r) = coeffs.row(r).head(a.dim()) * a.basis();
  return Subspace::span(std::move(vectors));
}

Subspace perp_hermitian(const Subspace& u) {
  // <v,u> = sum_j v_j conj(u_j) = 0 for every basis row u.
  Matrix conj_basis = u.basis().conjugate();
  Matrix k = kernel_basis(std::move(conj_basis));
  return Subspace::span(std::move(k));
}

Subspace perp_form(const Subspace& u, const Matrix& gram) {
  if (gram.rows() != u.ambient_dim() || gram.cols() != u.ambient_dim())
    throw std::invalid_argument("perp_form: gram size mismatch");
  // v^T G u = 0 for all basis u  <=>  (B G^T) v = 0.
  Matrix system = u.basis() * gram.transpose();
  return Subspace::span(kernel_basis(std::move(system)));
}

Subspace preimage(const Matrix& m, const Subspace& u) {
  if (m.rows() != u.ambient_dim() || m.cols() != u.ambient_dim())
    throw std::invalid_argument("preimage: dimension mismatch");
  // Mv in U  <=>  Q(Mv) = 0 where the rows of Q span the plain annihilator of U.
  Matrix annihilator = kernel_basis(Matrix(u.basis()));
  Matrix system = annihilator * m;
  return Subspace::span(kernel_basis(std::move(system)));
}

GaussianRational hermitian_dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw std::invalid_argument("hermitian_dot: size mismatch");
  GaussianRational acc(0);
  for (Index j = 0; j < u.size(); ++j) acc += u(j) * conj(v(j));
  return acc;
}

std::string to_string(const Subspace& s) {
  std::ostringstream os;
  os << "span{";
  for (Index r = 0; r < s.dim(); ++r) {
    if (r) os << "; ";
    os << "(";
    for (Index j = 0; j < s.ambient_dim(); ++j) {
      if (j) os << ",";
      os << s.basis()(r, j);
    }
    os << ")";
  }
  os << "} in C^" << s.ambient_dim();
  return os.str();
}

Matrix parse_matrix_rows(const std::vector<std::vector<std::string>>& rows) {
  Index r = static_cast<Index>(rows.size());
  Index c = r > 0 ? static_cast<Index>(rows[0].size()) : 0;
  Matrix m(r, c);
  for (Index i = 0; i < r; ++i) {
    if (static_cast<Index>(rows[static_cast<size_t>(i)].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (Index j = 0; j < c; ++j)
      m(i, j) = parse_scalar(rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return m;
}

std::vector<std::vector<std::string>> format_matrix_rows(const Matrix& m) {
  std::vector<std::vector<std::string>> rows(static_cast<size_t>(m.rows()));
  for (Index i = 0; i < m.rows(); ++i) {
    rows[static_cast<size_t>(i)].resize(static_cast<size_t>(m.cols()));
    for (Index j = 0; j < m.cols(); ++j)
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = format_scalar(m(i, j));
  }
  return rows;
}

}  // namespace springer
