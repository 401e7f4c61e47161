#pragma once

#include <string>

#include "springer/cup_diagram.hpp"

namespace springer {

/// SVG picture of a cup diagram: vertices on a baseline, cups as semicircular
/// arcs below it, rays as vertical segments, dots as filled circles.
std::string render_svg(const CupDiagram& d);

}  // namespace springer
