#pragma once

#include <vector>

#include "springer/domino.hpp"
#include "springer/form.hpp"
#include "springer/jordan.hpp"

namespace springer {

/// A nested flag F_1 c F_2 c ... given by canonical subspaces of a common
/// ambient space, dim F_i = i.
struct Flag {
  std::vector<Subspace> spaces;

  int length() const { return static_cast<int>(spaces.size()); }
  const Subspace& space(int i) const { return spaces[static_cast<size_t>(i - 1)]; }

  friend bool operator==(const Flag&, const Flag&) = default;
};

void validate_flag_shape(const Flag& flag);

struct SpaltensteinResult {
  SignedDominoTableau tableau;        // unsigned, flavor = form flavor
  std::vector<Partition> jordan_seq;  // J(x^(l)), ..., J(x^(0)), growing
};

/// The Spaltenstein map: Jordan types of the maps induced by z on
/// F_i^{perp_beta}/F_i grow by one domino per step; the domino added between
/// J(x^{(i+1)}) and J(x^{(i)}) is labelled i+1. The flag lives in an ambient
/// C^{2N} (N = ambient_dim/2) and must be contained in E and isotropic.
SpaltensteinResult spaltenstein(const Flag& flag, const FormSpec& form);

}  // namespace springer
