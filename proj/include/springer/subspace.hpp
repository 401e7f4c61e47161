#pragma once

#include <string>
#include <vector>

#include "springer/linalg.hpp"

namespace springer {

/// Subspace of C^ambient with the canonical reduced row-echelon basis as its
/// only representation: pivot columns strictly increasing, pivots 1, zeros
/// above and below. Structural equality is therefore set equality.
class Subspace {
 public:
  Subspace() : ambient_(0), basis_(0, 0) {}

  static Subspace zero(Index ambient) { return Subspace(ambient, Matrix(0, ambient)); }

  static Subspace full(Index ambient) {
    Matrix id = Matrix::Identity(ambient, ambient);
    return Subspace(ambient, std::move(id));
  }

  /// Span of the rows of `vectors` (ambient = column count).
  static Subspace span(Matrix vectors);

  static Subspace span_of(const std::vector<Vector>& vectors, Index ambient);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(Index i) const { return basis_.row(i).transpose(); }

  bool is_zero() const { return basis_.rows() == 0; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && mat_equal(a.basis_, b.basis_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Index ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}

  Index ambient_;
  Matrix basis_;  // rows, reduced echelon, no zero rows
};

bool contains(const Subspace& s, const Vector& v);
bool contains(const Subspace& outer, const Subspace& inner);

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Orthogonal complement for the standard Hermitian form
/// <u,v> = sum_j u_j conj(v_j) (conjugate-linear in the second slot).
Subspace perp_hermitian(const Subspace& u);

/// {v : v^T G u = 0 for all u in U}; bilinear, no conjugation.
Subspace perp_form(const Subspace& u, const Matrix& gram);

/// {v : Mv in U}.
Subspace preimage(const Matrix& m, const Subspace& u);

GaussianRational hermitian_dot(const Vector& u, const Vector& v);

std::string to_string(const Subspace& s);

}  // namespace springer
