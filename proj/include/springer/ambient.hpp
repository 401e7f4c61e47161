#pragma once

#include "springer/linalg.hpp"
#include "springer/subspace.hpp"

namespace springer {

/// C^{2N} with the nilpotent z of two equal Jordan blocks
/// (z e_1 = z f_1 = 0, z e_j = e_{j-1}, z f_j = f_{j-1}) and the collapse
/// map C: e_i -> e, f_i -> f onto C^2. The basis e_1..e_N, f_1..f_N is
/// declared orthonormal for the Hermitian structure.
struct Ambient {
  int m = 0;
  int N = 0;  // N = m+1 keeps every flag space of Y_m inside im(z)
  Matrix z;   // 2N x 2N
  Matrix C;   // 2 x 2N

  Index dim() const { return 2 * N; }
  Index idx_e(int i) const { return i - 1; }
  Index idx_f(int j) const { return N + j - 1; }

  Vector e(int i) const;
  Vector f(int j) const;
};

Ambient build_ambient(int m);

}  // namespace springer
