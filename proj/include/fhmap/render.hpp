#ifndef FHMAP_RENDER_HPP
#define FHMAP_RENDER_HPP

#include "fhmap/harmap.hpp"

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fhmap {

enum class RenderStyle {
  grid_image,      // images of concentric circles and radial segments
  boundary_curve,  // closed image of |z| = 1 with cusps marked
};

std::optional<RenderStyle> parse_render_style(std::string_view name);

struct Rendering {
  std::string svg;
  double boundary_length = 0.0;               // polyline length of the boundary image
  std::vector<std::complex<double>> cusps;    // boundary points where d/dtheta f nearly vanishes
};

/// Static SVG of the map. Coordinates are printed with fixed precision, so the
/// bytes depend only on the map and the style.
Rendering render_svg(const HarmonicPolyMap<double>& f, RenderStyle style);

}  // namespace fhmap

#endif  // FHMAP_RENDER_HPP
