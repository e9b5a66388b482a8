// Generates the solid catalog: data/solids/*.json plus the embedded table
// src/catalog_data.cpp. Coordinates are built in multiprecision arithmetic
// from closed forms; the Catalan solids are polar duals of the Archimedean
// ones (facet plane w with w.v = 1 refit in high precision on combinatorics
// taken from the double-precision hull). Every solid is validated against
// its expected vertex/face counts, edge uniformity where applicable, and
// origin interiority before anything is written.

#include <bit>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "bigfloat.h"
#include "error.h"
#include "hull3.h"
#include "vec.h"

using nlohmann::json;
using rupert::BigFloat;
using rupert::Hull3;
using rupert::P3;
using rupert::Vec3;

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      std::fprintf(stderr, "CHECK failed at %s:%d: %s\n", __FILE__,        \
                   __LINE__, #cond);                                       \
      std::abort();                                                        \
    }                                                                      \
  } while (0)

namespace {

using V3 = P3<BigFloat>;

struct Solid {
  std::string name;
  std::string family;
  int faces = 0;           // expected facet count
  bool uniform_edges = false;
  std::vector<V3> verts;
};

BigFloat bf(long n) { return BigFloat(n); }

BigFloat golden() { return (1 + sqrt(bf(5))) / 2; }

void push_unique(std::vector<V3>* out, const V3& p) {
  for (const V3& q : *out) {
    if (q.x == p.x && q.y == p.y && q.z == p.z) return;
  }
  out->push_back(p);
}

// Cyclic rotations (a,b,c), (b,c,a), (c,a,b).
void add_even_perms(std::vector<V3>* out, const BigFloat& a, const BigFloat& b,
                    const BigFloat& c) {
  push_unique(out, {a, b, c});
  push_unique(out, {b, c, a});
  push_unique(out, {c, a, b});
}

void add_odd_perms(std::vector<V3>* out, const BigFloat& a, const BigFloat& b,
                   const BigFloat& c) {
  push_unique(out, {a, c, b});
  push_unique(out, {b, a, c});
  push_unique(out, {c, b, a});
}

// All 6 permutations under all 8 sign choices, duplicates dropped.
void add_all_perms_all_signs(std::vector<V3>* out, const BigFloat& a,
                             const BigFloat& b, const BigFloat& c) {
  for (int bits = 0; bits < 8; ++bits) {
    const BigFloat sa = (bits & 4) ? -a : a;
    const BigFloat sb = (bits & 2) ? -b : b;
    const BigFloat sc = (bits & 1) ? -c : c;
    add_even_perms(out, sa, sb, sc);
    add_odd_perms(out, sa, sb, sc);
  }
}

// Cyclic permutations under all 8 sign choices.
void add_even_perms_all_signs(std::vector<V3>* out, const BigFloat& a,
                              const BigFloat& b, const BigFloat& c) {
  for (int bits = 0; bits < 8; ++bits) {
    add_even_perms(out, (bits & 4) ? -a : a, (bits & 2) ? -b : b,
                   (bits & 1) ? -c : c);
  }
}

std::vector<V3> tetrahedron() {
  const BigFloat s18 = sqrt(bf(1) / 8);
  const BigFloat s34 = sqrt(bf(3) / 4);
  return {{bf(0), bf(1), -s18},
          {s34, bf(-1) / 2, -s18},
          {-s34, bf(-1) / 2, -s18},
          {bf(0), bf(0), sqrt(bf(9) / 8)}};
}

std::vector<V3> cube() {
  std::vector<V3> v;
  for (int bits = 0; bits < 8; ++bits) {
    v.push_back({bf((bits & 4) ? -1 : 1), bf((bits & 2) ? -1 : 1),
                 bf((bits & 1) ? -1 : 1)});
  }
  return v;
}

std::vector<V3> octahedron() {
  std::vector<V3> v;
  for (int s : {1, -1}) {
    v.push_back({bf(s), bf(0), bf(0)});
    v.push_back({bf(0), bf(s), bf(0)});
    v.push_back({bf(0), bf(0), bf(s)});
  }
  return v;
}

std::vector<V3> icosahedron() {
  std::vector<V3> v;
  add_even_perms_all_signs(&v, bf(0), bf(1), golden());
  return v;
}

std::vector<V3> dodecahedron() {
  std::vector<V3> v = cube();
  const BigFloat phi = golden();
  add_even_perms_all_signs(&v, bf(0), 1 / phi, phi);
  return v;
}

std::vector<V3> truncated_tetrahedron() {
  // Permutations of (3,1,1)*sqrt(2)/4 with an even number of minus signs.
  const BigFloat q = sqrt(bf(2)) / 4;
  const BigFloat a = 3 * q;
  std::vector<V3> v;
  for (int bits = 0; bits < 8; ++bits) {
    if (std::popcount(static_cast<unsigned>(bits)) & 1) continue;
    const BigFloat sa = (bits & 4) ? -a : a;
    const BigFloat sb = (bits & 2) ? -q : q;
    const BigFloat sc = (bits & 1) ? -q : q;
    add_even_perms(&v, sa, sb, sc);
    add_odd_perms(&v, sa, sb, sc);
  }
  return v;
}

std::vector<V3> cuboctahedron() {
  std::vector<V3> v;
  add_all_perms_all_signs(&v, bf(1), bf(1), bf(0));
  return v;
}

std::vector<V3> truncated_cube() {
  std::vector<V3> v;
  add_all_perms_all_signs(&v, sqrt(bf(2)) - 1, bf(1), bf(1));
  return v;
}

std::vector<V3> truncated_octahedron() {
  std::vector<V3> v;
  add_all_perms_all_signs(&v, bf(0), bf(1), bf(2));
  return v;
}

std::vector<V3> rhombicuboctahedron() {
  std::vector<V3> v;
  add_all_perms_all_signs(&v, bf(1), bf(1), 1 + sqrt(bf(2)));
  return v;
}

std::vector<V3> truncated_cuboctahedron() {
  const BigFloat r2 = sqrt(bf(2));
  std::vector<V3> v;
  add_all_perms_all_signs(&v, bf(1), 1 + r2, 1 + 2 * r2);
  return v;
}

std::vector<V3> snub_cube() {
  const BigFloat t =
      (1 + cbrt(19 + 3 * sqrt(bf(33))) + cbrt(19 - 3 * sqrt(bf(33)))) / 3;
  const BigFloat a = bf(1), b = 1 / t, c = t;
  std::vector<V3> v;
  for (int s : {0b100, 0b010, 0b001, 0b111}) {
    add_even_perms(&v, (s & 4) ? -a : a, (s & 2) ? -b : b, (s & 1) ? -c : c);
  }
  for (int s : {0b011, 0b110, 0b101, 0b000}) {
    add_odd_perms(&v, (s & 4) ? -a : a, (s & 2) ? -b : b, (s & 1) ? -c : c);
  }
  return v;
}

std::vector<V3> icosidodecahedron() {
  const BigFloat phi = golden();
  std::vector<V3> v;
  for (int s : {1, -1}) {
    const BigFloat c = s * phi;
    v.push_back({bf(0), bf(0), c});
    v.push_back({bf(0), c, bf(0)});
    v.push_back({c, bf(0), bf(0)});
  }
  add_even_perms_all_signs(&v, bf(1) / 2, phi / 2, phi * phi / 2);
  return v;
}

std::vector<V3> truncated_dodecahedron() {
  const BigFloat phi = golden();
  std::vector<V3> v;
  add_even_perms_all_signs(&v, bf(0), 1 / phi, 2 + phi);
  add_even_perms_all_signs(&v, 1 / phi, phi, 2 * phi);
  add_even_perms_all_signs(&v, phi, bf(2), phi + 1);
  return v;
}

std::vector<V3> truncated_icosahedron() {
  const BigFloat phi = golden();
  std::vector<V3> v;
  add_even_perms_all_signs(&v, bf(0), bf(1), 3 * phi);
  add_even_perms_all_signs(&v, bf(1), 2 + phi, 2 * phi);
  add_even_perms_all_signs(&v, phi, bf(2), 2 * phi + 1);
  return v;
}

std::vector<V3> rhombicosidodecahedron() {
  const BigFloat phi = golden();
  std::vector<V3> v;
  add_even_perms_all_signs(&v, bf(1), bf(1), phi * phi * phi);
  add_even_perms_all_signs(&v, phi * phi, phi, 2 * phi);
  add_even_perms_all_signs(&v, 2 + phi, bf(0), phi * phi);
  return v;
}

std::vector<V3> truncated_icosidodecahedron() {
  const BigFloat phi = golden();
  std::vector<V3> v;
  add_even_perms_all_signs(&v, 1 / phi, 1 / phi, 3 + phi);
  add_even_perms_all_signs(&v, 2 / phi, phi, 1 + 2 * phi);
  add_even_perms_all_signs(&v, 1 / phi, phi * phi, 3 * phi - 1);
  add_even_perms_all_signs(&v, 2 * phi - 1, bf(2), 2 + phi);
  add_even_perms_all_signs(&v, phi, bf(3), 2 * phi);
  return v;
}

std::vector<V3> snub_dodecahedron() {
  // Edge length 2. xi is the real solution of xi^3 - 2 xi = phi.
  const BigFloat phi = golden();
  const BigFloat term = sqrt(phi - bf(5) / 27);
  const BigFloat xi = cbrt((phi + term) / 2) + cbrt((phi - term) / 2);
  const BigFloat xi2 = xi * xi;
  const BigFloat inv_xi = 1 / xi;
  std::vector<V3> v;
  for (int bits = 0; bits < 8; ++bits) {
    const BigFloat s1 = bf((bits & 4) ? -1 : 1);
    const BigFloat s2 = bf((bits & 2) ? -1 : 1);
    const BigFloat s3 = bf((bits & 1) ? -1 : 1);
    if (std::popcount(static_cast<unsigned>(bits)) & 1) {
      add_even_perms(&v, s1 * phi * sqrt(phi * (xi - 1 - inv_xi)),
                     s2 * xi * phi * sqrt(3 - xi2),
                     s3 * phi * sqrt(xi * (xi + phi) + 1));
      add_even_perms(&v, s1 * phi * sqrt(3 - xi2),
                     s2 * xi * phi * sqrt(1 - xi + (1 + phi) / xi),
                     s3 * phi * sqrt(xi * (xi + 1)));
      add_even_perms(&v, s1 * xi2 * phi * sqrt(phi * (xi - 1 - inv_xi)),
                     s2 * phi * sqrt(xi + 1 - phi),
                     s3 * sqrt(xi2 * (1 + 2 * phi) - phi));
    } else {
      add_even_perms(&v, s1 * xi2 * phi * sqrt(3 - xi2),
                     s2 * xi * phi * sqrt(phi * (xi - 1 - inv_xi)),
                     s3 * phi * phi * inv_xi * sqrt(xi * (xi + phi) + 1));
      add_even_perms(&v, s1 * sqrt(phi * (xi + 2) + 2),
                     s2 * phi * sqrt(1 - xi + (1 + phi) / xi),
                     s3 * xi * sqrt(xi * (1 + phi) - phi));
    }
  }
  return v;
}

std::vector<Vec3> to_double(const std::vector<V3>& verts) {
  std::vector<Vec3> d;
  d.reserve(verts.size());
  for (const V3& p : verts) {
    d.push_back({p.x.convert_to<double>(), p.y.convert_to<double>(),
                 p.z.convert_to<double>()});
  }
  return d;
}

// Validates counts/edges/interiority and returns the hull for reuse.
Hull3 validate(const Solid& s) {
  const std::vector<Vec3> d = to_double(s.verts);
  const Hull3 hull = rupert::convex_hull_3d(d);
  CHECK(hull.extreme.size() == s.verts.size());
  CHECK(static_cast<int>(hull.facets.size()) == s.faces);

  std::set<std::pair<int, int>> edges;
  double emin = 0, emax = 0;
  for (const auto& f : hull.facets) {
    CHECK(f.offset > 1e-9);  // origin strictly inside
    const int k = static_cast<int>(f.vertex_ids.size());
    for (int i = 0; i < k; ++i) {
      const int a = f.vertex_ids[i], b = f.vertex_ids[(i + 1) % k];
      edges.insert({std::min(a, b), std::max(a, b)});
      const double len = norm(d[a] - d[b]);
      if (emin == 0 || len < emin) emin = len;
      if (len > emax) emax = len;
    }
  }
  const size_t euler_edges = s.verts.size() + hull.facets.size() - 2;
  CHECK(edges.size() == euler_edges);
  if (s.uniform_edges) CHECK(emax - emin <= 1e-12 * emax);
  return hull;
}

// Polar dual: one vertex w per facet, solving w.v = 1 in high precision on
// three spread facet vertices, then checked against every vertex.
std::vector<V3> polar_dual(const Solid& s, const Hull3& hull) {
  std::vector<V3> dual;
  for (const auto& f : hull.facets) {
    const int k = static_cast<int>(f.vertex_ids.size());
    CHECK(k >= 3);
    const V3& v0 = s.verts[f.vertex_ids[0]];
    const V3& v1 = s.verts[f.vertex_ids[k / 3]];
    const V3& v2 = s.verts[f.vertex_ids[(2 * k) / 3]];
    const BigFloat det = dot(v0, cross(v1, v2));
    CHECK(det != 0);
    const V3 sum = cross(v1, v2) + cross(v2, v0) + cross(v0, v1);
    const BigFloat inv_det = 1 / det;
    const V3 w = inv_det * sum;
    for (int id : f.vertex_ids) {
      CHECK(abs(dot(w, s.verts[id]) - 1) < 1e-60);
    }
    for (size_t id = 0; id < s.verts.size(); ++id) {
      CHECK(dot(w, s.verts[id]) - 1 < 1e-60);
    }
    dual.push_back(w);
  }
  return dual;
}

std::string fmt(const BigFloat& x) {
  if (x == 0) return "0";
  return x.str(50);
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path root = argc > 1 ? argv[1] : ".";
  rupert::PrecisionGuard guard(80);

  std::vector<Solid> solids;
  auto add = [&](const char* name, const char* family, int faces, bool uniform,
                 std::vector<V3> verts) {
    solids.push_back({name, family, faces, uniform, std::move(verts)});
  };

  add("tetrahedron", "platonic", 4, true, tetrahedron());
  add("cube", "platonic", 6, true, cube());
  add("octahedron", "platonic", 8, true, octahedron());
  add("dodecahedron", "platonic", 12, true, dodecahedron());
  add("icosahedron", "platonic", 20, true, icosahedron());

  struct ArchSpec {
    const char* name;
    const char* dual_name;
    int faces;
    std::vector<V3> verts;
  };
  std::vector<ArchSpec> arch;
  arch.push_back({"truncated_tetrahedron", "triakis_tetrahedron", 8,
                  truncated_tetrahedron()});
  arch.push_back({"cuboctahedron", "rhombic_dodecahedron", 14, cuboctahedron()});
  arch.push_back({"truncated_cube", "triakis_octahedron", 14, truncated_cube()});
  arch.push_back({"truncated_octahedron", "tetrakis_hexahedron", 14,
                  truncated_octahedron()});
  arch.push_back({"rhombicuboctahedron", "deltoidal_icositetrahedron", 26,
                  rhombicuboctahedron()});
  arch.push_back({"truncated_cuboctahedron", "disdyakis_dodecahedron", 26,
                  truncated_cuboctahedron()});
  arch.push_back({"snub_cube", "pentagonal_icositetrahedron", 38, snub_cube()});
  arch.push_back({"icosidodecahedron", "rhombic_triacontahedron", 32,
                  icosidodecahedron()});
  arch.push_back({"truncated_dodecahedron", "triakis_icosahedron", 32,
                  truncated_dodecahedron()});
  arch.push_back({"truncated_icosahedron", "pentakis_dodecahedron", 32,
                  truncated_icosahedron()});
  arch.push_back({"rhombicosidodecahedron", "deltoidal_hexecontahedron", 62,
                  rhombicosidodecahedron()});
  arch.push_back({"truncated_icosidodecahedron", "disdyakis_triacontahedron", 62,
                  truncated_icosidodecahedron()});
  arch.push_back({"snub_dodecahedron", "pentagonal_hexecontahedron", 92,
                  snub_dodecahedron()});

  for (auto& a : arch) {
    solids.push_back({a.name, "archimedean", a.faces, true, a.verts});
  }
  // Catalan duals: vertex count = facet count of the base and vice versa.
  for (auto& a : arch) {
    Solid base{a.name, "archimedean", a.faces, true, a.verts};
    const Hull3 hull = validate(base);
    Solid dual;
    dual.name = a.dual_name;
    dual.family = "catalan";
    dual.faces = static_cast<int>(a.verts.size());
    dual.uniform_edges = false;
    dual.verts = polar_dual(base, hull);
    solids.push_back(std::move(dual));
  }

  std::filesystem::create_directories(root / "data" / "solids");
  std::ofstream table(root / "src" / "catalog_data.cpp");
  CHECK(table.good());
  table << "// Generated by tools/gen_catalog. Do not edit by hand.\n"
        << "#include \"catalog_data.h\"\n\nnamespace rupert {\nnamespace {\n";

  for (const Solid& s : solids) {
    validate(s);

    json j;
    j["name"] = s.name;
    j["tags"] = {s.family};
    json verts = json::array();
    for (const V3& p : s.verts) {
      verts.push_back({fmt(p.x), fmt(p.y), fmt(p.z)});
    }
    j["vertices"] = verts;
    std::ofstream out(root / "data" / "solids" / (s.name + ".json"));
    CHECK(out.good());
    out << j.dump(1) << "\n";

    table << "const char* const k_" << s.name << "[] = {\n";
    for (const V3& p : s.verts) {
      table << "    \"" << fmt(p.x) << "\", \"" << fmt(p.y) << "\", \""
            << fmt(p.z) << "\",\n";
    }
    table << "};\n";
  }

  table << "}  // namespace\n\nconst CatalogSolid kCatalogSolids[] = {\n";
  for (const Solid& s : solids) {
    table << "    {\"" << s.name << "\", \"" << s.family << "\", "
          << s.verts.size() << ", k_" << s.name << "},\n";
  }
  table << "};\nconst int kCatalogSolidCount = " << solids.size()
        << ";\n\n}  // namespace rupert\n";

  std::printf("wrote %zu solids\n", solids.size());
  return 0;
}
