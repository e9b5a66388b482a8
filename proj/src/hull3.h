#pragma once

#include <vector>

#include "vec.h"

namespace rupert {

struct HullFacet {
  Vec3 normal;                  // unit outward normal
  double offset = 0.0;          // plane is normal . x = offset
  std::vector<int> vertex_ids;  // input indices on the plane, CCW seen from outside
};

struct Hull3 {
  std::vector<int> extreme;       // input indices appearing as hull vertices
  std::vector<HullFacet> facets;  // coplanar triangles merged
};

// Incremental convex hull. Plane tests use eps = rel_eps * max|coordinate|.
// Throws Error(kDegenerate) when the points do not span three dimensions.
Hull3 convex_hull_3d(const std::vector<Vec3>& pts, double rel_eps = 1e-9);

}  // namespace rupert
