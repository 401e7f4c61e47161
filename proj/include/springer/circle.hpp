#pragma once

#include <optional>
#include <string>
#include <vector>

#include "springer/cup_diagram.hpp"

namespace springer {

/// Connected components of the glued diagram \bar{a} b (a reflected on top
/// of b). Closed components have no ray ends; a line segment is propagating
/// when its two ray ends come one from \bar{a} and one from b.
struct CircleComponent {
  std::vector<int> vertices;  // ascending
  bool closed = false;
  int dots = 0;
  bool propagating = false;  // meaningful for open components only

  friend bool operator==(const CircleComponent&, const CircleComponent&) = default;
};

struct CircleDiagram {
  std::vector<CircleComponent> components;  // ordered by smallest vertex

  int closed_count() const {
    int c = 0;
    for (const auto& comp : components) c += comp.closed;
    return c;
  }
};

CircleDiagram circle_diagram(const CupDiagram& a, const CupDiagram& b);

/// Empty when (I1) even-dots or (I2) propagating fails; otherwise the number
/// of closed components, predicting an (S^2)^circ intersection.
struct IntersectionResult {
  bool nonempty = false;
  int circ = 0;

  friend bool operator==(const IntersectionResult&, const IntersectionResult&) = default;
};

IntersectionResult intersection_type(const CupDiagram& a, const CupDiagram& b);

std::string to_string(const IntersectionResult& r);

/// Pairwise intersection structure over a family of diagrams, with canonical
/// names following enumeration order (a, b, c, ...).
struct IntersectionGraph {
  std::vector<CupDiagram> nodes;
  std::vector<std::string> names;
  std::vector<std::vector<IntersectionResult>> edge;  // symmetric, incl. diagonal

  std::vector<std::vector<int>> connected_components() const;
  std::string to_dot() const;
};

IntersectionGraph intersection_graph(const std::vector<CupDiagram>& diagrams);

std::string canonical_name(size_t index);

}  // namespace springer
