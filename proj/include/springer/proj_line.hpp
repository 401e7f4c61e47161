#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springer/cup_diagram.hpp"
#include "springer/linalg.hpp"

namespace springer {

/// Point of P^1: the line spanned by (alpha, beta) != 0, stored with the
/// leading nonzero coordinate scaled to 1 so equality is structural.
struct ProjLine {
  GaussianRational alpha;
  GaussianRational beta;

  ProjLine() : alpha(1), beta(0) {}
  ProjLine(GaussianRational a, GaussianRational b);

  /// Hermitian orthocomplement in C^2: (alpha:beta) -> (-conj(beta):conj(alpha)).
  ProjLine perp() const;

  Vector representative() const;  // 2-vector

  friend bool operator==(const ProjLine&, const ProjLine&) = default;
};

ProjLine line_e();                           // span(e) = (1:0)
ProjLine line_f();                           // span(f) = (0:1)
ProjLine line_e_plus_f(int sign);            // span(e + sign*f)
ProjLine line_ie_plus_f(int sign);           // span(i*e + sign*f)

std::string to_string(const ProjLine& l);
ProjLine parse_proj_line(const std::string& alpha, const std::string& beta);

/// Relation attached to a diagram component in the P^1 model.
struct ProjRelation {
  enum class Kind { perp, same, fixed };
  Kind kind = Kind::fixed;
  int i = 0, j = 0;  // vertices; j unused for fixed
  ProjLine line;     // used for fixed

  friend bool operator==(const ProjRelation&, const ProjRelation&) = default;
};

std::string to_string(const ProjRelation& r);

/// The relations cutting T_a out of (P^1)^m for a in B^{n-k,k}:
/// undotted cup -> perp, dotted cup -> same; with k = m rays map to span(f)
/// (undotted) or span(e) (dotted); with k < m non-rightmost rays map to
/// span(e) and the rightmost ray to span(e+(-1)^eps f) or span(ie+(-1)^eps f)
/// according to the parity of m-k, eps = 0 iff dotted.
std::vector<ProjRelation> translate_to_p1(const CupDiagram& a, int k, int m);

/// First violated relation, or nullopt when all hold. `lines` is 1-based via
/// lines[v-1].
std::optional<ProjRelation> first_violation(const std::vector<ProjLine>& lines,
                                            const std::vector<ProjRelation>& relations);

}  // namespace springer
