// Polyhedron inputs: the built-in solid table and mesh files. A polyhedron
// is a plain vertex list; faces are never materialized because only the 2D
// silhouette faces enter the objective.
#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "vec.h"

namespace rupert {

struct Polyhedron {
  std::string name;
  std::vector<std::string> tags;
  // Recentred double-precision coordinates: vertex centroid at the origin,
  // which puts the origin strictly inside the hull.
  std::vector<Vec3> vertices;
  // Source coordinates as decimal strings, before recentring. One source of
  // truth for both precisions: the multiprecision verifier re-parses these
  // at its own precision and recentres there.
  std::vector<std::array<std::string, 3>> vertex_strings;
};

// Invariants: >= 4 vertices spanning 3D, every vertex extreme, origin
// strictly interior. Throws Error(kDegenerate) on violation.
void validate_polyhedron(const Polyhedron& p);

std::vector<std::string> catalog_names();

// Throws Error(kUnknownName) listing available identifiers.
Polyhedron builtin(std::string_view name);

// OFF or JSON by extension. Redundant (non-extreme) points are dropped;
// degenerate geometry (coplanar, < 4 extreme points) is an error. OFF faces
// are read only to validate convexity.
Polyhedron load_mesh(const std::string& path);

// Translates so the vertex centroid is the origin. Idempotent.
Polyhedron normalize(Polyhedron p);

// JSON document in the same schema load_mesh reads.
std::string serialize(const Polyhedron& p);

}  // namespace rupert
