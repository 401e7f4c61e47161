#pragma once

#include <string>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

/// Cup diagram on vertices 1..m: disjoint non-crossing cups plus rays, every
/// vertex used exactly once. A component may carry a dot only when it has an
/// unobstructed path to the right edge: cups must not be nested and must have
/// no ray to their right; only the rightmost ray is dottable.
struct CupDiagram {
  struct Cup {
    int from = 0, to = 0;  // from < to
    bool dot = false;
    friend bool operator==(const Cup&, const Cup&) = default;
  };
  struct Ray {
    int at = 0;
    bool dot = false;
    friend bool operator==(const Ray&, const Ray&) = default;
  };

  int m = 0;
  std::vector<Cup> cups;  // sorted by `from`
  std::vector<Ray> rays;  // sorted by `at`

  int cup_count() const { return static_cast<int>(cups.size()); }
  int ray_count() const { return static_cast<int>(rays.size()); }
  int dot_count() const;

  friend bool operator==(const CupDiagram&, const CupDiagram&) = default;
};

/// Throws std::invalid_argument describing the first violated invariant.
void validate(const CupDiagram& d);

Parity parity(const CupDiagram& d);

/// k with d in B^{n-k,k} (n = 2m): k = 2*cups when there is no ray,
/// otherwise 2*cups + 1.
int k_of(const CupDiagram& d);

/// All diagrams on m vertices with c cups, even dot-parity block first; within
/// a parity block ordered by undecorated base, then dot count, then dotted
/// positions. For B^{5,3} this reproduces the order a..h of the eight diagrams.
std::vector<CupDiagram> enumerate_cup_diagrams(int m, int c);

/// Text grammar: `(i,j)` cup, `(i,j)*` dotted cup, `|i` ray, `|i*` dotted ray,
/// whitespace-separated, 1-based vertices.
std::string to_string(const CupDiagram& d);
CupDiagram parse_cup_diagram(const std::string& text);

/// Flip the dot on the component whose leftmost vertex is `vertex`
/// (validates the result).
CupDiagram flip_dot(const CupDiagram& d, int vertex);

}  // namespace springer
