#pragma once

#include <string>

#include "springer/ambient.hpp"
#include "springer/partition.hpp"
#include "springer/subspace.hpp"

namespace springer {

/// Bilinear form beta_D^{a,b} or beta_C^{a,b} on E_{a,b} = span(e_1..e_a,
/// f_1..f_b), stored as a full (a+b)x(a+b) Gram matrix over the E-basis
/// labels. The E space is independent of any particular ambient C^{2N};
/// ambient vectors are projected into E-coordinates before pairing.
struct FormSpec {
  Flavor flavor = Flavor::D;
  int a = 0, b = 0;  // shape (a, b)
  Matrix gram;       // (a+b) x (a+b), label order e_1..e_a then f_1..f_b

  int dim() const { return a + b; }
  Index idx_e(int i) const { return i - 1; }
  Index idx_f(int j) const { return a + j - 1; }
  Partition shape() const {
    std::vector<int> parts;
    if (a > 0) parts.push_back(a);
    if (b > 0) parts.push_back(b);
    return Partition(parts);
  }
};

/// The four cases beta_D^{k,k}, beta_D^{n-k,k}, beta_C^{k-1,k-1},
/// beta_C^{n-k-1,k-1} for a type-D admissible (n-k, k), n = 2m. Checks at
/// construction: (anti)symmetry, nondegeneracy, beta(zv,w) = -beta(v,zw).
FormSpec make_form(Flavor flavor, int n, int k);

/// z restricted to E in E-coordinates: e_i -> e_{i-1}, f_j -> f_{j-1}.
Matrix z_restricted(const FormSpec& form);

/// Does the ambient subspace lie inside E (coordinates outside E vanish)?
bool contained_in_E(const FormSpec& form, const Subspace& s, int N);

/// E-coordinates of an ambient vector/subspace; requires containment.
Vector project_to_E(const FormSpec& form, const Vector& v, int N);
Subspace project_to_E(const FormSpec& form, const Subspace& s, int N);

GaussianRational pair_E(const FormSpec& form, const Vector& u_E, const Vector& v_E);

enum class IsotropyCheck { not_contained, not_isotropic, isotropic };

/// Tri-state so callers can distinguish "not even inside E" from a failed
/// isotropy test.
IsotropyCheck isotropy(const FormSpec& form, const Subspace& s_ambient, int N);

/// Same test for a subspace already in E-coordinates.
bool isotropic_in_E(const FormSpec& form, const Subspace& s_E);

std::string to_string(IsotropyCheck c);

}  // namespace springer
