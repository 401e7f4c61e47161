#include "springer/jordan.hpp"

#include <algorithm>
#include <stdexcept>

namespace springer {

Partition jordan_type(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("jordan_type: matrix not square");
  const Index dim = m.rows();
  if (dim == 0) return Partition{};
  std::vector<Index> kernel_dims;  // dim ker m^t for t = 1, 2, ...
  Matrix power = m;
  for (Index t = 1; t <= dim; ++t) {
    Index d = dim - rank(Matrix(power));
    kernel_dims.push_back(d);
    if (d == dim) break;
    power = power * m;
  }
  if (kernel_dims.empty() || kernel_dims.back() != dim)
    throw std::invalid_argument("jordan_type: matrix is not nilpotent");
  std::vector<Index> increments;
  Index prev = 0;
  for (Index d : kernel_dims) {
    increments.push_back(d - prev);
    prev = d;
  }
  // Conjugate partition of the (weakly decreasing) increments.
  std::vector<int> parts;
  for (Index j = 1; j <= increments.front(); ++j) {
    int count = 0;
    for (Index inc : increments) count += (inc >= j);
    parts.push_back(count);
  }
  return Partition(parts);
}

Matrix induced_map(const Matrix& z_E, const Subspace& u_E, const FormSpec& form) {
  for (Index r = 0; r < u_E.dim(); ++r)
    if (!contains(u_E, Vector(z_E * u_E.basis_vector(r))))
      throw std::invalid_argument("induced_map: U is not z-stable");
  Subspace perp = perp_form(u_E, form.gram);
  if (!contains(perp, u_E)) throw std::invalid_argument("induced_map: U is not isotropic");

  // Complement of U inside perp: the perp basis rows whose pivot is not a
  // pivot of U (both bases are canonical echelon, so this is a direct
  // complement).
  auto pivot_of = [](const Matrix& basis, Index row) {
    for (Index j = 0; j < basis.cols(); ++j)
      if (basis(row, j) != GaussianRational(0)) return j;
    throw std::logic_error("zero row in echelon basis");
  };
  std::vector<Index> u_pivots;
  for (Index r = 0; r < u_E.dim(); ++r) u_pivots.push_back(pivot_of(u_E.basis(), r));
  std::vector<Index> quotient_rows;
  for (Index r = 0; r < perp.dim(); ++r) {
    Index p = pivot_of(perp.basis(), r);
    if (std::find(u_pivots.begin(), u_pivots.end(), p) == u_pivots.end())
      quotient_rows.push_back(r);
  }
  const Index q = static_cast<Index>(quotient_rows.size());

  // Express (z * basis vector) mod U in the quotient basis: first eliminate
  // the U-pivot coordinates, then read off coefficients at the quotient
  // pivots and check the residual vanishes.
  Matrix result(q, q);
  result.setConstant(GaussianRational(0));
  for (Index col = 0; col < q; ++col) {
    Vector w = z_E * perp.basis_vector(quotient_rows[static_cast<size_t>(col)]);
    for (Index r = 0; r < u_E.dim(); ++r) {
      Index p = u_pivots[static_cast<size_t>(r)];
      if (w(p) != GaussianRational(0)) {
        GaussianRational factor = w(p);
        w -= factor * Vector(u_E.basis_vector(r));
      }
    }
    for (Index row = 0; row < q; ++row) {
      Index p = pivot_of(perp.basis(), quotient_rows[static_cast<size_t>(row)]);
      if (w(p) != GaussianRational(0)) {
        GaussianRational factor = w(p);
        result(row, col) = factor;
        w -= factor * Vector(perp.basis_vector(quotient_rows[static_cast<size_t>(row)]));
      }
    }
    for (Index j = 0; j < w.size(); ++j)
      if (w(j) != GaussianRational(0))
        throw std::logic_error("induced_map: image escapes U^perp");
  }
  return result;
}

}  // namespace springer
