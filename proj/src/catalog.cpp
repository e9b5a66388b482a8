#include "catalog.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "catalog_data.h"
#include "error.h"
#include "hull3.h"

namespace rupert {
namespace {

// Tolerance for the extreme-point filter: a vertex within this distance of
// the hull of the others is treated as redundant.
constexpr double kExtremeEps = 1e-12;

double parse_coord(const std::string& s, const std::string& where) {
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) fail(ErrorCode::kParse, where + ": trailing characters in number '" + s + "'");
    if (!std::isfinite(v)) fail(ErrorCode::kParse, where + ": non-finite coordinate '" + s + "'");
    return v;
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::kParse, where + ": bad number '" + s + "'");
  } catch (const std::out_of_range&) {
    fail(ErrorCode::kParse, where + ": number out of range '" + s + "'");
  }
}

struct RawMesh {
  std::string name;
  std::vector<std::string> tags;
  std::vector<std::array<std::string, 3>> vertex_strings;
  std::vector<std::vector<int>> faces;  // optional, for convexity validation
};

// Line-oriented OFF reader. Faces are kept for the convexity check.
RawMesh read_off(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  RawMesh mesh;
  mesh.name = std::filesystem::path(path).stem().string();

  int lineno = 0;
  auto next_tokens = [&](std::vector<std::string>* out) -> bool {
    std::string line;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.resize(hash);
      std::istringstream ls(line);
      std::string tok;
      out->clear();
      while (ls >> tok) out->push_back(tok);
      if (!out->empty()) return true;
    }
    return false;
  };
  auto where = [&] { return path + ":" + std::to_string(lineno); };

  std::vector<std::string> toks;
  if (!next_tokens(&toks) || toks[0] != "OFF") {
    fail(ErrorCode::kParse, where() + ": expected OFF header");
  }
  if (toks.size() != 1 && toks.size() != 4) {
    fail(ErrorCode::kParse, where() + ": malformed OFF header line");
  }
  if (toks.size() == 1 && !next_tokens(&toks)) {
    fail(ErrorCode::kParse, path + ": missing counts line");
  }
  const int off = toks.size() == 4 ? 1 : 0;
  if (static_cast<int>(toks.size()) != off + 3) {
    fail(ErrorCode::kParse, where() + ": counts line needs 3 numbers");
  }
  const int nv = std::atoi(toks[off + 0].c_str());
  const int nf = std::atoi(toks[off + 1].c_str());
  if (nv <= 0 || nf < 0) fail(ErrorCode::kParse, where() + ": bad counts");

  for (int i = 0; i < nv; ++i) {
    if (!next_tokens(&toks) || toks.size() != 3) {
      fail(ErrorCode::kParse, where() + ": expected vertex line with 3 coordinates");
    }
    for (const std::string& t : toks) parse_coord(t, where());
    mesh.vertex_strings.push_back({toks[0], toks[1], toks[2]});
  }
  for (int i = 0; i < nf; ++i) {
    if (!next_tokens(&toks)) fail(ErrorCode::kParse, path + ": missing face line");
    const int k = std::atoi(toks[0].c_str());
    if (k < 3 || static_cast<int>(toks.size()) < k + 1) {
      fail(ErrorCode::kParse, where() + ": malformed face line");
    }
    std::vector<int> face;
    for (int j = 1; j <= k; ++j) {
      const int id = std::atoi(toks[j].c_str());
      if (id < 0 || id >= nv) fail(ErrorCode::kParse, where() + ": vertex index out of range");
      face.push_back(id);
    }
    mesh.faces.push_back(std::move(face));
  }
  return mesh;
}

RawMesh read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, path + ": " + e.what());
  }
  RawMesh mesh;
  try {
    mesh.name = j.value("name", std::filesystem::path(path).stem().string());
    if (j.contains("tags")) {
      for (const auto& t : j.at("tags")) mesh.tags.push_back(t.get<std::string>());
    }
    for (const auto& vert : j.at("vertices")) {
      if (!vert.is_array() || vert.size() != 3) {
        fail(ErrorCode::kParse, path + ": vertex entries must be 3-element arrays");
      }
      std::array<std::string, 3> coords;
      for (int k = 0; k < 3; ++k) {
        coords[k] = vert[k].is_string() ? vert[k].get<std::string>() : vert[k].dump();
      }
      mesh.vertex_strings.push_back(std::move(coords));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, path + ": " + e.what());
  }
  return mesh;
}

// Every face must have all vertices on its plane and every other vertex on
// one common side of it.
void validate_convex_faces(const RawMesh& mesh, const std::vector<Vec3>& pts) {
  double scale = 0;
  for (const Vec3& p : pts) scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  const double tol = 1e-9 * scale;
  for (size_t f = 0; f < mesh.faces.size(); ++f) {
    const std::vector<int>& face = mesh.faces[f];
    Vec3 n{};  // Newell normal
    Vec3 centroid{};
    const int k = static_cast<int>(face.size());
    for (int i = 0; i < k; ++i) {
      const Vec3& a = pts[face[i]];
      const Vec3& b = pts[face[(i + 1) % k]];
      n.x += (a.y - b.y) * (a.z + b.z);
      n.y += (a.z - b.z) * (a.x + b.x);
      n.z += (a.x - b.x) * (a.y + b.y);
      centroid = centroid + a;
    }
    const double len = norm(n);
    if (!(len > tol * tol)) {
      fail(ErrorCode::kDegenerate, mesh.name + ": face " + std::to_string(f) + " is degenerate");
    }
    n = (1.0 / len) * n;
    centroid = (1.0 / k) * centroid;
    std::vector<char> on_face(pts.size(), 0);
    for (int id : face) {
      on_face[id] = 1;
      if (std::abs(dot(n, pts[id] - centroid)) > tol) {
        fail(ErrorCode::kDegenerate, mesh.name + ": face " + std::to_string(f) + " is not planar");
      }
    }
    bool above = false, below = false;
    for (size_t id = 0; id < pts.size(); ++id) {
      if (on_face[id]) continue;
      const double d = dot(n, pts[id] - centroid);
      above = above || d > tol;
      below = below || d < -tol;
    }
    if (above && below) {
      fail(ErrorCode::kDegenerate, mesh.name + ": vertices on both sides of face " + std::to_string(f));
    }
  }
}

Polyhedron finish(RawMesh mesh, bool drop_redundant) {
  Polyhedron p;
  p.name = std::move(mesh.name);
  p.tags = std::move(mesh.tags);
  p.vertex_strings = std::move(mesh.vertex_strings);
  for (const auto& vs : p.vertex_strings) {
    p.vertices.push_back({parse_coord(vs[0], p.name), parse_coord(vs[1], p.name),
                          parse_coord(vs[2], p.name)});
  }
  if (p.vertices.size() < 4) {
    fail(ErrorCode::kDegenerate, p.name + ": fewer than 4 vertices");
  }
  if (!mesh.faces.empty()) validate_convex_faces(mesh, p.vertices);

  const Hull3 hull = convex_hull_3d(p.vertices, kExtremeEps);
  if (hull.extreme.size() < p.vertices.size()) {
    if (!drop_redundant) {
      fail(ErrorCode::kDegenerate, p.name + ": redundant (non-extreme) vertex present");
    }
    std::vector<Vec3> verts;
    std::vector<std::array<std::string, 3>> strings;
    for (int id : hull.extreme) {
      verts.push_back(p.vertices[id]);
      strings.push_back(p.vertex_strings[id]);
    }
    p.vertices = std::move(verts);
    p.vertex_strings = std::move(strings);
  }
  if (p.vertices.size() < 4) {
    fail(ErrorCode::kDegenerate, p.name + ": fewer than 4 extreme points");
  }
  p = normalize(std::move(p));
  validate_polyhedron(p);
  return p;
}

}  // namespace

void validate_polyhedron(const Polyhedron& p) {
  if (p.vertices.size() < 4) {
    fail(ErrorCode::kDegenerate, p.name + ": fewer than 4 vertices");
  }
  const Hull3 hull = convex_hull_3d(p.vertices, kExtremeEps);
  if (hull.extreme.size() != p.vertices.size()) {
    fail(ErrorCode::kDegenerate, p.name + ": redundant (non-extreme) vertex present");
  }
  double scale = 0;
  for (const Vec3& v : p.vertices) scale = std::max({scale, std::abs(v.x), std::abs(v.y), std::abs(v.z)});
  for (const auto& f : hull.facets) {
    if (!(f.offset > 1e-12 * scale)) {
      fail(ErrorCode::kDegenerate, p.name + ": origin not strictly interior");
    }
  }
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (int i = 0; i < kCatalogSolidCount; ++i) names.push_back(kCatalogSolids[i].name);
  return names;
}

Polyhedron builtin(std::string_view name) {
  for (int i = 0; i < kCatalogSolidCount; ++i) {
    const CatalogSolid& s = kCatalogSolids[i];
    if (name != s.name) continue;
    RawMesh mesh;
    mesh.name = s.name;
    mesh.tags = {s.family};
    for (int v = 0; v < s.vertex_count; ++v) {
      mesh.vertex_strings.push_back(
          {s.coords[3 * v], s.coords[3 * v + 1], s.coords[3 * v + 2]});
    }
    return finish(std::move(mesh), /*drop_redundant=*/false);
  }
  std::string msg = "unknown solid '" + std::string(name) + "'; available:";
  for (int i = 0; i < kCatalogSolidCount; ++i) {
    msg += ' ';
    msg += kCatalogSolids[i].name;
  }
  fail(ErrorCode::kUnknownName, msg);
}

Polyhedron load_mesh(const std::string& path) {
  const std::string ext = std::filesystem::path(path).extension().string();
  RawMesh mesh;
  if (ext == ".off" || ext == ".OFF") {
    mesh = read_off(path);
  } else if (ext == ".json") {
    mesh = read_json(path);
  } else {
    fail(ErrorCode::kParse, path + ": unsupported extension '" + ext + "' (want .off or .json)");
  }
  return finish(std::move(mesh), /*drop_redundant=*/true);
}

Polyhedron normalize(Polyhedron p) {
  if (p.vertices.empty()) fail(ErrorCode::kDegenerate, "normalize: empty vertex list");
  Vec3 c{};
  for (const Vec3& v : p.vertices) c = c + v;
  c = (1.0 / p.vertices.size()) * c;
  for (Vec3& v : p.vertices) v = v - c;
  return p;
}

std::string serialize(const Polyhedron& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["tags"] = p.tags;
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& vs : p.vertex_strings) verts.push_back({vs[0], vs[1], vs[2]});
  j["vertices"] = verts;
  return j.dump(1) + "\n";
}

}  // namespace rupert
