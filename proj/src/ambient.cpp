#include "springer/ambient.hpp"

#include <stdexcept>

namespace springer {

Vector Ambient::e(int i) const {
  if (i < 1 || i > N) throw std::invalid_argument("e index out of range");
  Vector v(dim());
  v.setConstant(GaussianRational(0));
  v(idx_e(i)) = GaussianRational(1);
  return v;
}

Vector Ambient::f(int j) const {
  if (j < 1 || j > N) throw std::invalid_argument("f index out of range");
  Vector v(dim());
  v.setConstant(GaussianRational(0));
  v(idx_f(j)) = GaussianRational(1);
  return v;
}

Ambient build_ambient(int m) {
  if (m < 1) throw std::invalid_argument("build_ambient: m must be positive");
  Ambient a;
  a.m = m;
  a.N = m + 1;
  const Index d = a.dim();
  a.z = Matrix(d, d);
  a.z.setConstant(GaussianRational(0));
  for (int i = 2; i <= a.N; ++i) {
    a.z(a.idx_e(i - 1), a.idx_e(i)) = GaussianRational(1);
    a.z(a.idx_f(i - 1), a.idx_f(i)) = GaussianRational(1);
  }
  a.C = Matrix(2, d);
  a.C.setConstant(GaussianRational(0));
  for (int i = 1; i <= a.N; ++i) {
    a.C(0, a.idx_e(i)) = GaussianRational(1);
    a.C(1, a.idx_f(i)) = GaussianRational(1);
  }
  return a;
}

}  // namespace springer
