#include "render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "error.h"
#include "projection.h"

namespace rupert {
namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string path_data(const std::vector<Vec2>& pts) {
  std::ostringstream os;
  for (size_t k = 0; k < pts.size(); ++k) {
    os << (k == 0 ? "M " : " L ") << fmt(pts[k].x) << ' ' << fmt(pts[k].y);
  }
  os << " Z";
  return os.str();
}

}  // namespace

std::string render_svg(const Polyhedron& p, const Passage& x, double mu,
                       const RenderSpec& spec) {
  if (!(spec.size_px > 0) || !(spec.stroke_width > 0) || !(spec.margin_frac >= 0) ||
      !(spec.margin_frac < 0.5))
    fail(ErrorCode::kInvalid, "render: nonpositive canvas or stroke dimensions");
  if (!(mu > 0) || !std::isfinite(mu))
    fail(ErrorCode::kInvalid, "render: mu must be finite and positive");

  const PlanarPolygon outer = silhouette(p, {x.theta_q, x.phi_q});

  std::vector<Vec2> scaled;
  scaled.reserve(p.vertices.size());
  for (const Vec2& q : apply_inner(p, x)) scaled.push_back({mu * q.x, mu * q.y});
  double inner_scale = 0;
  for (const Vec2& q : scaled)
    inner_scale = std::max({inner_scale, std::abs(q.x), std::abs(q.y)});
  if (!(inner_scale > 0))
    fail(ErrorCode::kDegenerate, p.name + ": hole collapses to a point");
  const std::vector<int> hole_ids =
      hull_indices(scaled, 1e-12 * inner_scale * inner_scale, 1e-14 * inner_scale);
  if (hole_ids.size() < 3)
    fail(ErrorCode::kDegenerate, p.name + ": hole hull has fewer than 3 points");

  double xmin = outer.hull[0].x, xmax = xmin, ymin = outer.hull[0].y, ymax = ymin;
  for (const Vec2& q : outer.hull) {
    xmin = std::min(xmin, q.x);
    xmax = std::max(xmax, q.x);
    ymin = std::min(ymin, q.y);
    ymax = std::max(ymax, q.y);
  }
  const double extent = std::max(xmax - xmin, ymax - ymin);
  if (!(extent > 0)) fail(ErrorCode::kDegenerate, p.name + ": zero-extent silhouette");
  const double scale = spec.size_px * (1.0 - 2.0 * spec.margin_frac) / extent;
  const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  // The single y flip: world counter-clockwise becomes screen clockwise.
  const auto to_screen = [&](const Vec2& q) -> Vec2 {
    return {spec.size_px / 2 + (q.x - cx) * scale, spec.size_px / 2 - (q.y - cy) * scale};
  };

  std::vector<Vec2> outer_px, hole_px;
  for (const Vec2& q : outer.hull) outer_px.push_back(to_screen(q));
  for (int id : hole_ids) hole_px.push_back(to_screen(scaled[id]));

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(spec.size_px)
     << "\" height=\"" << fmt(spec.size_px) << "\" viewBox=\"0 0 " << fmt(spec.size_px)
     << ' ' << fmt(spec.size_px) << "\">\n";
  os << "  <path d=\"" << path_data(outer_px) << "\" fill=\"none\" stroke=\""
     << spec.outer_stroke << "\" stroke-width=\"" << fmt(spec.stroke_width)
     << "\"/>\n";
  os << "  <path d=\"" << path_data(hole_px) << "\" fill=\"" << spec.hole_fill
     << "\" stroke=\"none\"/>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace rupert
