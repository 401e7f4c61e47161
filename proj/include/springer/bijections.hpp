#pragma once

#include "springer/cup_diagram.hpp"
#include "springer/domino.hpp"
#include "springer/syt.hpp"

namespace springer {

/// Standard tableau -> undecorated cup diagram on n vertices: the lower-row
/// entries are exactly the left endpoints of cups, matched by the
/// nearest-unmatched-right rule.
CupDiagram psi(const StandardYoungTableau& t);

/// Inverse of psi on undecorated diagrams.
StandardYoungTableau psi_inverse(const CupDiagram& d);

/// Signed type-D tableau -> cup diagram in B^{n-k,k}: clusters map to pieces
/// placed left to right starting with the rightmost cluster; a closed cluster
/// becomes an enclosing cup (dotted iff its left vertical is signed -), an
/// open cluster appends a ray (dotted under the same rule).
CupDiagram Psi(const SignedDominoTableau& t);

/// Inverse of Psi; throws on diagrams that are not valid members of any
/// B^{n-k,k}.
SignedDominoTableau Psi_inverse(const CupDiagram& d);

}  // namespace springer
