#include "springer/form.hpp"

#include <stdexcept>

namespace springer {

namespace {

void check_form(const FormSpec& form) {
  const Index n = form.dim();
  const bool symmetric = form.flavor == Flavor::D;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      GaussianRational expected = symmetric ? form.gram(j, i) : -form.gram(j, i);
      if (form.gram(i, j) != expected)
        throw std::logic_error("form: (anti)symmetry violated");
    }
  if (rank(Matrix(form.gram)) != n) throw std::logic_error("form: degenerate Gram matrix");
  Matrix z = z_restricted(form);
  if (!is_zero_matrix(Matrix(z.transpose() * form.gram + form.gram * z)))
    throw std::logic_error("form: beta(zv,w) != -beta(v,zw)");
}

}  // namespace

FormSpec make_form(Flavor flavor, int n, int k) {
  if (n <= 0 || n % 2 != 0) throw std::invalid_argument("make_form: n must be even positive");
  const int m = n / 2;
  if (k < 1 || k > m) throw std::invalid_argument("make_form: k out of range");
  if (!(k == m || k % 2 == 1))
    throw std::invalid_argument("make_form: (n-k,k) is not type-D admissible");

  FormSpec form;
  form.flavor = flavor;
  if (flavor == Flavor::D) {
    form.a = n - k;
    form.b = k;
  } else {
    form.a = n - k - 1;
    form.b = k - 1;
  }
  const Index dim = form.dim();
  form.gram = Matrix(dim, dim);
  form.gram.setConstant(GaussianRational(0));

  auto neg_pow = [](int e) { return GaussianRational(e % 2 == 0 ? 1 : -1); };

  if (flavor == Flavor::D) {
    if (k == m) {
      // beta(e_{j'}, f_j) = beta(f_j, e_{j'}) = (-1)^{j-1} delta_{j+j', k+1}
      for (int j = 1; j <= k; ++j)
        for (int jp = 1; jp <= k; ++jp)
          if (j + jp == k + 1) {
            form.gram(form.idx_e(jp), form.idx_f(j)) = neg_pow(j - 1);
            form.gram(form.idx_f(j), form.idx_e(jp)) = neg_pow(j - 1);
          }
    } else {
      for (int i = 1; i <= form.a; ++i)
        for (int ip = 1; ip <= form.a; ++ip)
          if (i + ip == form.a + 1) form.gram(form.idx_e(i), form.idx_e(ip)) = neg_pow(i - 1);
      for (int j = 1; j <= form.b; ++j)
        for (int jp = 1; jp <= form.b; ++jp)
          if (j + jp == form.b + 1) form.gram(form.idx_f(j), form.idx_f(jp)) = neg_pow(j);
    }
  } else {
    if (k == m) {
      // beta(f_j, e_{j'}) = (-1)^{j-1} delta_{j+j', k} = -beta(e_{j'}, f_j)
      for (int j = 1; j <= form.b; ++j)
        for (int jp = 1; jp <= form.a; ++jp)
          if (j + jp == k) {
            form.gram(form.idx_f(j), form.idx_e(jp)) = neg_pow(j - 1);
            form.gram(form.idx_e(jp), form.idx_f(j)) = -neg_pow(j - 1);
          }
    } else {
      // (-1)^i delta_{i+i', n-k} for i < i', completed antisymmetrically.
      for (int i = 1; i <= form.a; ++i)
        for (int ip = i + 1; ip <= form.a; ++ip)
          if (i + ip == form.a + 1) {
            form.gram(form.idx_e(i), form.idx_e(ip)) = neg_pow(i);
            form.gram(form.idx_e(ip), form.idx_e(i)) = -neg_pow(i);
          }
      // (-1)^{j-1} delta_{j+j', k} for j < j', completed antisymmetrically.
      for (int j = 1; j <= form.b; ++j)
        for (int jp = j + 1; jp <= form.b; ++jp)
          if (j + jp == form.b + 1) {
            form.gram(form.idx_f(j), form.idx_f(jp)) = neg_pow(j - 1);
            form.gram(form.idx_f(jp), form.idx_f(j)) = -neg_pow(j - 1);
          }
    }
  }
  check_form(form);
  return form;
}

Matrix z_restricted(const FormSpec& form) {
  const Index dim = form.dim();
  Matrix z(dim, dim);
  z.setConstant(GaussianRational(0));
  for (int i = 2; i <= form.a; ++i) z(form.idx_e(i - 1), form.idx_e(i)) = GaussianRational(1);
  for (int j = 2; j <= form.b; ++j) z(form.idx_f(j - 1), form.idx_f(j)) = GaussianRational(1);
  return z;
}

bool contained_in_E(const FormSpec& form, const Subspace& s, int N) {
  const Index d = s.ambient_dim();
  if (d != 2 * N) throw std::invalid_argument("contained_in_E: ambient mismatch");
  for (Index r = 0; r < s.dim(); ++r) {
    for (int i = form.a + 1; i <= N; ++i)
      if (s.basis()(r, i - 1) != GaussianRational(0)) return false;
    for (int j = form.b + 1; j <= N; ++j)
      if (s.basis()(r, N + j - 1) != GaussianRational(0)) return false;
  }
  return true;
}

Vector project_to_E(const FormSpec& form, const Vector& v, int N) {
  Vector out(form.dim());
  out.setConstant(GaussianRational(0));
  for (int i = 1; i <= form.a; ++i)
    if (i <= N) out(form.idx_e(i)) = v(i - 1);
  for (int j = 1; j <= form.b; ++j)
    if (j <= N) out(form.idx_f(j)) = v(N + j - 1);
  return out;
}

Subspace project_to_E(const FormSpec& form, const Subspace& s, int N) {
  if (!contained_in_E(form, s, N))
    throw std::invalid_argument("project_to_E: subspace not contained in E");
  Matrix rows(s.dim(), form.dim());
  for (Index r = 0; r < s.dim(); ++r)
    rows.row(r) = project_to_E(form, Vector(s.basis_vector(r)), N).transpose();
  return Subspace::span(std::move(rows));
}

GaussianRational pair_E(const FormSpec& form, const Vector& u_E, const Vector& v_E) {
  GaussianRational acc(0);
  for (Index i = 0; i < form.dim(); ++i)
    for (Index j = 0; j < form.dim(); ++j) acc += u_E(i) * form.gram(i, j) * v_E(j);
  return acc;
}

bool isotropic_in_E(const FormSpec& form, const Subspace& s_E) {
  Matrix restricted = s_E.basis() * form.gram * s_E.basis().transpose();
  return is_zero_matrix(restricted);
}

IsotropyCheck isotropy(const FormSpec& form, const Subspace& s_ambient, int N) {
  if (!contained_in_E(form, s_ambient, N)) return IsotropyCheck::not_contained;
  return isotropic_in_E(form, project_to_E(form, s_ambient, N)) ? IsotropyCheck::isotropic
                                                                : IsotropyCheck::not_isotropic;
}

std::string to_string(IsotropyCheck c) {
  switch (c) {
    case IsotropyCheck::not_contained:
      return "not contained in E";
    case IsotropyCheck::not_isotropic:
      return "not isotropic";
    case IsotropyCheck::isotropic:
      return "isotropic";
  }
  return "?";
}

}  // namespace springer
