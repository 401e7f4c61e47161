#pragma once

#include <cstdint>
#include <vector>

#include "springer/ambient.hpp"
#include "springer/proj_line.hpp"
#include "springer/spaltenstein.hpp"

namespace springer {

/// Does the flag satisfy z F_i <= F_{i-1} (with F_0 = 0)?
bool z_compatible(const Ambient& ambient, const Flag& flag);

/// (C(F_1), C(F_2 cap F_1^perp), ..., C(F_m cap F_{m-1}^perp)); the Hermitian
/// complement makes each intersection a line, mapped isomorphically by C.
std::vector<ProjLine> phi(const Ambient& ambient, const Flag& flag);

/// Constructive inverse: F_i = F_{i-1} + the unique line of
/// z^{-1}F_{i-1} cap F_{i-1}^perp that C maps onto lines[i].
Flag phi_inverse(const Ambient& ambient, const std::vector<ProjLine>& lines);

/// Forget the last space.
Flag pi_map(const Flag& flag);

/// A seeded point of T_a: rays take their fixed lines; each cup's left
/// endpoint takes a pseudorandom Gaussian-rational line (numerators and
/// denominators bounded by 7, never one of the fixed constants) and the right
/// endpoint its perp/same partner. The output satisfies translate_to_p1(a).
std::vector<ProjLine> sample_T_a(const CupDiagram& a, std::uint64_t seed);

}  // namespace springer
