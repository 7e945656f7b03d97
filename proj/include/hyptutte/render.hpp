#pragma once

// Poincare-disk SVG rendering: lifts project via (x,y)/(1+z), geodesic edges
// are drawn as exact circular arcs orthogonal to the unit circle.

#include <string>

#include "hyptutte/gmap.hpp"

namespace hyptutte {

struct RenderStyle {
  double radius_px = 400.0;     // disk radius in pixels
  double stroke_width = 1.0;    // edge stroke width in pixels
  bool draw_polygon = false;    // draw the fundamental 4g-gon
  double translate_dist = 0.0;  // draw Gamma-translates within this distance

  void check() const;
};

std::string render_svg(const GeodesicMapping& m, const RenderStyle& style);

}  // namespace hyptutte
