#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springer/circle.hpp"
#include "springer/cup_diagram.hpp"

namespace springer {

/// The two sphere constants p=(0,0,1) and q=(1,0,0), kept symbolic. The ray
/// relations can be read with either constant assignment; the two versions
/// differ by the coordinate swap exchanging p and q and give identical
/// intersection combinatorics, so both are carried through the oracle.
enum class SphereConstant { p, q };
enum class SphereConvention {
  // dotted ray -> p, undotted rightmost ray -> -p, other rays -> q
  definition,
  // the p<->q swap of the above (used in the worked examples)
  swapped,
};

struct SphereConstraint {
  enum class Kind { equal, negate, constant };
  Kind kind = Kind::equal;
  int i = 0, j = 0;          // vertices for equal/negate
  SphereConstant constant = SphereConstant::p;
  int constant_sign = +1;

  friend bool operator==(const SphereConstraint&, const SphereConstraint&) = default;
};

std::string to_string(const SphereConstraint& c);

/// Relations cutting S_a out of (S^2)^m: x_i = -x_j per undotted cup,
/// x_i = x_j per dotted cup, plus the ray constants of the convention.
std::vector<SphereConstraint> relations_of(const CupDiagram& a, SphereConvention conv);

/// Signed union-find solve of the combined relation set of two diagrams.
struct SolveResult {
  bool consistent = false;
  int free_count = 0;
  // Per vertex (1-based, index 0 unused): "p", "-q", "s1", "-s2", ...
  std::vector<std::string> witness;
};

SolveResult solve(const CupDiagram& a, const CupDiagram& b, SphereConvention conv);

/// Equivalence harness: solver verdict and free count must match the
/// (I1)/(I2) predictor under both constant conventions.
struct CrossCheckReport {
  bool ok = true;
  std::string mismatch;  // empty when ok
};

CrossCheckReport oracle_cross_check(const CupDiagram& a, const CupDiagram& b);

}  // namespace springer
