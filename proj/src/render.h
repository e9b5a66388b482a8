// Figure-style SVG output: the outer silhouette as a stroked outline and the
// mu-scaled inner silhouette as a filled hole region, no axes or chrome.
#pragma once

#include <string>

#include "mu.h"

namespace rupert {

struct RenderSpec {
  double size_px = 640;       // square canvas side
  double margin_frac = 0.08;  // padding around the outer hull, as a fraction
  std::string outer_stroke = "#1f3b73";
  double stroke_width = 2.0;
  std::string hole_fill = "#7ea6e0";
};

// Renders the passage at scale mu: the hole is the convex hull of the
// mu-scaled transformed inner vertices. Coordinates are emitted at 15
// significant digits with the y axis flipped once into screen orientation.
// Throws kInvalid on nonpositive dimensions or a nonfinite mu, kDegenerate
// when either silhouette collapses.
std::string render_svg(const Polyhedron& p, const Passage& x, double mu,
                       const RenderSpec& spec = {});

}  // namespace rupert
