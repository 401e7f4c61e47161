#include "springer/svg.hpp"

#include <sstream>

namespace springer {

std::string render_svg(const CupDiagram& d) {
  const int unit = 40;
  const int margin = 30;
  const int baseline = 30;
  const int depth = 30 + 15 * d.m;  // enough room below the deepest cup
  const int width = 2 * margin + unit * (d.m > 0 ? d.m - 1 : 0);
  const int height = baseline + depth + 20;
  auto x_of = [&](int v) { return margin + unit * (v - 1); };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  svg << "  <line x1=\"" << margin - 15 << "\" y1=\"" << baseline << "\" x2=\""
      << width - margin + 15 << "\" y2=\"" << baseline
      << "\" stroke=\"#999\" stroke-width=\"1\"/>\n";
  for (int v = 1; v <= d.m; ++v) {
    svg << "  <circle cx=\"" << x_of(v) << "\" cy=\"" << baseline << "\" r=\"3\" fill=\"#000\"/>\n";
    svg << "  <text x=\"" << x_of(v) << "\" y=\"" << baseline - 10
        << "\" font-size=\"13\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  for (const auto& c : d.cups) {
    int r = (x_of(c.to) - x_of(c.from)) / 2;
    svg << "  <path d=\"M " << x_of(c.from) << " " << baseline << " A " << r << " " << r
        << " 0 0 0 " << x_of(c.to) << " " << baseline
        << "\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    if (c.dot) {
      int cx = (x_of(c.from) + x_of(c.to)) / 2;
      svg << "  <circle cx=\"" << cx << "\" cy=\"" << baseline + r << "\" r=\"4\" fill=\"#000\"/>\n";
    }
  }
  for (const auto& r : d.rays) {
    svg << "  <line x1=\"" << x_of(r.at) << "\" y1=\"" << baseline << "\" x2=\"" << x_of(r.at)
        << "\" y2=\"" << baseline + depth << "\" stroke=\"#000\" stroke-width=\"2\"/>\n";
    if (r.dot)
      svg << "  <circle cx=\"" << x_of(r.at) << "\" cy=\"" << baseline + depth / 2
          << "\" r=\"4\" fill=\"#000\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace springer
