#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "springer/cup_diagram.hpp"
#include "springer/form.hpp"

namespace springer {

struct CheckEntry {
  int sample = 0;  // -1 for per-diagram checks
  std::string assertion;
  bool pass = true;
  std::string detail;  // counterexample payload when failing
};

struct VerifyReport {
  std::string subject;
  std::uint64_t seed = 0;
  bool pass = true;
  bool vacuous = false;
  std::vector<CheckEntry> entries;

  void add(int sample, const std::string& assertion, bool ok, const std::string& detail = "");
};

/// Per sampled T_a point: lift with phi_inverse and assert z-compatibility,
/// containment in E_{n-k,k}, beta_D-isotropy, the unsigned Spaltenstein
/// tableau of the lift, and the phi round trip; diagrams without undotted
/// cups additionally pin the whole Jordan-type sequence. `form_override`
/// substitutes the D form (negative controls).
VerifyReport verify_component(const CupDiagram& a, int samples, std::uint64_t seed,
                              const FormSpec* form_override = nullptr);

/// For odd-parity a: the pi-image of each lift lies in E_{n-k-1,k-1}, is
/// beta_C-isotropic, has Spaltenstein tableau d_to_c of the type-D tableau,
/// and distinct sampled flags have distinct pi-images.
VerifyReport verify_theorem2(const CupDiagram& a, int samples, std::uint64_t seed,
                             const FormSpec* form_override = nullptr);

/// Random z-preimages U of seeded isotropic subspaces of E_{n-k-2,k-2} (or
/// the C analogue) must land in E_{n-k,k} and be isotropic there.
VerifyReport isotropy_propagation(int n, int k, Flavor flavor, int trials, std::uint64_t seed);

}  // namespace springer
