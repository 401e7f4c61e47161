#pragma once

#include "springer/form.hpp"
#include "springer/linalg.hpp"
#include "springer/partition.hpp"
#include "springer/subspace.hpp"

namespace springer {

/// Jordan type of a nilpotent endomorphism: the conjugate of the sequence of
/// kernel-dimension increments of its powers. Throws when M^dim != 0.
Partition jordan_type(const Matrix& m);

/// Matrix of the endomorphism induced by z on U^{perp_beta}/U, written in the
/// echelon-extension basis of U inside its perp. U is given in E-coordinates
/// and must be z-stable and isotropic.
Matrix induced_map(const Matrix& z_E, const Subspace& u_E, const FormSpec& form);

}  // namespace springer
