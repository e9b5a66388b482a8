#include "hull3.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <utility>

#include "error.h"

namespace rupert {
namespace {

struct Tri {
  int a, b, c;
  Vec3 n;       // unit outward normal
  double off;   // n . x = off on the plane
  bool alive = true;
};

Tri make_tri(const std::vector<Vec3>& pts, int a, int b, int c) {
  Tri t{a, b, c, {}, 0.0, true};
  Vec3 n = cross(pts[b] - pts[a], pts[c] - pts[a]);
  const double len = norm(n);
  if (!(len > 0.0)) fail(ErrorCode::kDegenerate, "convex_hull_3d: zero-area face");
  t.n = (1.0 / len) * n;
  t.off = dot(t.n, pts[a]);
  return t;
}

double plane_dist(const Tri& t, const Vec3& p) { return dot(t.n, p) - t.off; }

}  // namespace

Hull3 convex_hull_3d(const std::vector<Vec3>& pts, double rel_eps) {
  const int n = static_cast<int>(pts.size());
  if (n < 4) fail(ErrorCode::kDegenerate, "convex_hull_3d: fewer than 4 points");

  double scale = 0.0;
  for (const Vec3& p : pts) {
    scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  }
  if (!(scale > 0.0)) fail(ErrorCode::kDegenerate, "convex_hull_3d: all points at origin");
  const double eps = rel_eps * scale;

  // Initial simplex: spread apart in each dimension in turn.
  int i0 = 0;
  for (int i = 1; i < n; ++i) {
    if (pts[i].x < pts[i0].x || (pts[i].x == pts[i0].x && pts[i].y < pts[i0].y)) i0 = i;
  }
  int i1 = -1;
  double best = eps;
  for (int i = 0; i < n; ++i) {
    const double d = norm(pts[i] - pts[i0]);
    if (d > best) {
      best = d;
      i1 = i;
    }
  }
  if (i1 < 0) fail(ErrorCode::kDegenerate, "convex_hull_3d: points coincide");
  int i2 = -1;
  best = eps;
  const Vec3 axis = pts[i1] - pts[i0];
  const double axis_len = norm(axis);
  for (int i = 0; i < n; ++i) {
    const double d = norm(cross(axis, pts[i] - pts[i0])) / axis_len;
    if (d > best) {
      best = d;
      i2 = i;
    }
  }
  if (i2 < 0) fail(ErrorCode::kDegenerate, "convex_hull_3d: points are collinear");
  int i3 = -1;
  best = eps;
  Vec3 nrm = cross(pts[i1] - pts[i0], pts[i2] - pts[i0]);
  nrm = (1.0 / norm(nrm)) * nrm;
  for (int i = 0; i < n; ++i) {
    const double d = std::abs(dot(nrm, pts[i] - pts[i0]));
    if (d > best) {
      best = d;
      i3 = i;
    }
  }
  if (i3 < 0) fail(ErrorCode::kDegenerate, "convex_hull_3d: points are coplanar");

  if (dot(nrm, pts[i3] - pts[i0]) > 0.0) std::swap(i1, i2);
  std::vector<Tri> tris;
  tris.push_back(make_tri(pts, i0, i1, i2));
  tris.push_back(make_tri(pts, i0, i2, i3));
  tris.push_back(make_tri(pts, i2, i1, i3));
  tris.push_back(make_tri(pts, i1, i0, i3));

  for (int p = 0; p < n; ++p) {
    if (p == i0 || p == i1 || p == i2 || p == i3) continue;
    std::vector<int> visible;
    for (int f = 0; f < static_cast<int>(tris.size()); ++f) {
      if (tris[f].alive && plane_dist(tris[f], pts[p]) > eps) visible.push_back(f);
    }
    if (visible.empty()) continue;

    // Horizon edges appear in exactly one visible triangle (directed).
    std::map<std::pair<int, int>, int> edge_count;
    for (int f : visible) {
      const Tri& t = tris[f];
      for (auto [a, b] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
        auto key = std::minmax(a, b);
        edge_count[{key.first, key.second}] += 1;
      }
    }
    std::vector<std::pair<int, int>> horizon;  // directed as in the visible tri
    for (int f : visible) {
      const Tri& t = tris[f];
      for (auto [a, b] : {std::pair{t.a, t.b}, std::pair{t.b, t.c}, std::pair{t.c, t.a}}) {
        auto key = std::minmax(a, b);
        if (edge_count[{key.first, key.second}] == 1) horizon.emplace_back(a, b);
      }
    }
    for (int f : visible) tris[f].alive = false;
    // New triangle (a, b, p) keeps the outward orientation: the dead face had
    // (a, b) in CCW order seen from outside, and p is on its outside.
    for (auto [a, b] : horizon) tris.push_back(make_tri(pts, a, b, p));
  }

  std::vector<const Tri*> live;
  for (const Tri& t : tris) {
    if (t.alive) live.push_back(&t);
  }

  Hull3 hull;
  {
    std::vector<char> used(n, 0);
    for (const Tri* t : live) used[t->a] = used[t->b] = used[t->c] = 1;
    for (int i = 0; i < n; ++i) {
      if (used[i]) hull.extreme.push_back(i);
    }
  }

  // Merge coplanar triangles into facets, keyed by supporting plane.
  std::vector<char> grouped(live.size(), 0);
  for (size_t f = 0; f < live.size(); ++f) {
    if (grouped[f]) continue;
    Vec3 gn = live[f]->n;
    double goff = live[f]->off;
    grouped[f] = 1;
    for (size_t g = f + 1; g < live.size(); ++g) {
      if (grouped[g]) continue;
      if (dot(gn, live[g]->n) > 1.0 - 1e-9 && std::abs(live[g]->off - goff) < 4.0 * eps) {
        grouped[g] = 1;
      }
    }
    HullFacet facet;
    facet.normal = gn;
    facet.offset = goff;
    for (int i : hull.extreme) {
      if (std::abs(dot(gn, pts[i]) - goff) <= 4.0 * eps) facet.vertex_ids.push_back(i);
    }
    // Order the facet CCW seen from outside (right-handed around the normal).
    Vec3 centroid{};
    for (int i : facet.vertex_ids) centroid = centroid + pts[i];
    centroid = (1.0 / facet.vertex_ids.size()) * centroid;
    Vec3 ax = pts[facet.vertex_ids[0]] - centroid;
    ax = (1.0 / norm(ax)) * ax;
    const Vec3 ay = cross(gn, ax);
    std::sort(facet.vertex_ids.begin(), facet.vertex_ids.end(), [&](int i, int j) {
      const Vec3 pi = pts[i] - centroid;
      const Vec3 pj = pts[j] - centroid;
      return std::atan2(dot(pi, ay), dot(pi, ax)) < std::atan2(dot(pj, ay), dot(pj, ax));
    });
    hull.facets.push_back(std::move(facet));
  }
  return hull;
}

}  // namespace rupert
