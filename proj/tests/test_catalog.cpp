#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "catalog.h"
#include "error.h"

using namespace rupert;

namespace {

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  out.close();
  return path;
}

const char* kPyramidOff =
    "OFF\n"
    "# square pyramid with unit-slant edges\n"
    "5 5 8\n"
    "1 1 0\n"
    "-1 1 0\n"
    "-1 -1 0\n"
    "1 -1 0\n"
    "0 0 1.4142135623730951\n"
    "4 3 2 1 0\n"
    "3 0 1 4\n"
    "3 1 2 4\n"
    "3 2 3 4\n"
    "3 3 0 4\n";

}  // namespace

TEST_CASE("catalog lists the five Platonic solids among its names") {
  const std::vector<std::string> names = catalog_names();
  CHECK(names.size() == 31);
  for (const char* want : {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron",
                           "truncated_tetrahedron", "cuboctahedron", "snub_dodecahedron",
                           "rhombic_triacontahedron"})
    CHECK(std::count(names.begin(), names.end(), want) == 1);
}

TEST_CASE("builtin solids come out centred and fully extreme") {
  for (const std::string& name : catalog_names()) {
    const Polyhedron p = builtin(name);
    CHECK(p.name == name);
    CHECK(p.vertices.size() >= 4);
    CHECK(p.vertices.size() == p.vertex_strings.size());
    Vec3 sum{0, 0, 0};
    for (const Vec3& v : p.vertices) sum = sum + v;
    CHECK(norm(sum) <= 1e-12 * static_cast<double>(p.vertices.size()));
    validate_polyhedron(p);
  }
}

TEST_CASE("builtin rejects unknown names and lists the catalog") {
  try {
    builtin("nosuchshape");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownName);
    CHECK(std::string(e.what()).find("tetrahedron") != std::string::npos);
  }
}

TEST_CASE("tetrahedron matches its exact coordinates") {
  const Polyhedron p = builtin("tetrahedron");
  REQUIRE(p.vertices.size() == 4);
  // edge length sqrt(3), circumradius 3/sqrt(8)
  const double r = std::sqrt(9.0 / 8.0);
  for (const Vec3& v : p.vertices) CHECK(norm(v) == doctest::Approx(r).epsilon(1e-13));
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = i + 1; j < 4; ++j)
      CHECK(norm(p.vertices[i] - p.vertices[j]) ==
            doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
}

TEST_CASE("OFF meshes load, validate, and drop redundant points") {
  const auto path = temp_file("rupert_j1.off", kPyramidOff);
  const Polyhedron p = load_mesh(path.string());
  CHECK(p.name == "rupert_j1");
  CHECK(p.vertices.size() == 5);
  // recentred: apex sits at 4/5 of its original height above the centroid
  const double zc = 1.4142135623730951 / 5.0;
  bool found_apex = false;
  for (const Vec3& v : p.vertices)
    if (std::abs(v.x) < 1e-12 && std::abs(v.y) < 1e-12) {
      CHECK(v.z == doctest::Approx(1.4142135623730951 - zc).epsilon(1e-12));
      found_apex = true;
    }
  CHECK(found_apex);

  SUBCASE("an interior point disappears in loading") {
    std::string with_interior =
        "OFF\n6 5 8\n1 1 0\n-1 1 0\n-1 -1 0\n1 -1 0\n0 0 1.4142135623730951\n0 0 0.2\n"
        "4 3 2 1 0\n3 0 1 4\n3 1 2 4\n3 2 3 4\n3 3 0 4\n";
    const auto path2 = temp_file("rupert_j1_interior.off", with_interior);
    const Polyhedron q = load_mesh(path2.string());
    CHECK(q.vertices.size() == 5);
  }
}

TEST_CASE("JSON meshes round-trip through serialize") {
  const Polyhedron p = builtin("octahedron");
  const auto path = temp_file("rupert_octa_roundtrip.json", serialize(p));
  const Polyhedron q = load_mesh(path.string());
  CHECK(q.name == p.name);
  CHECK(q.tags == p.tags);
  REQUIRE(q.vertices.size() == p.vertices.size());
  for (size_t i = 0; i < p.vertices.size(); ++i)
    CHECK(norm(q.vertices[i] - p.vertices[i]) <= 1e-15);
}

TEST_CASE("JSON meshes accept numeric coordinate entries") {
  const auto path = temp_file("rupert_numeric.json",
                              R"({"name":"box","vertices":[[1,1,1],[1,1,-1],[1,-1,1],[1,-1,-1],
                                  [-1,1,1],[-1,1,-1],[-1,-1,1],[-1,-1,-1]]})");
  const Polyhedron p = load_mesh(path.string());
  CHECK(p.name == "box");
  CHECK(p.vertices.size() == 8);
}

TEST_CASE("mesh loading rejects malformed and degenerate inputs") {
  const auto bad_number = temp_file("rupert_bad_number.off", "OFF\n4 0 0\n0 0 zebra\n1 0 0\n0 1 0\n0 0 1\n");
  CHECK_THROWS_AS(load_mesh(bad_number.string()), Error);

  const auto too_few = temp_file("rupert_too_few.json", R"({"vertices":[[0,0,0],[1,0,0],[0,1,0]]})");
  try {
    load_mesh(too_few.string());
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerate);
  }

  const auto coplanar = temp_file("rupert_coplanar.json",
                                  R"({"vertices":[[0,0,0],[1,0,0],[0,1,0],[1,1,0]]})");
  CHECK_THROWS_AS(load_mesh(coplanar.string()), Error);

  CHECK_THROWS_AS(load_mesh("/nonexistent/path/shape.off"), Error);
  const auto unknown_ext = temp_file("rupert_unknown.stl", "solid\n");
  CHECK_THROWS_AS(load_mesh(unknown_ext.string()), Error);
}

TEST_CASE("normalize recentres and is idempotent") {
  Polyhedron p = builtin("cube");
  for (Vec3& v : p.vertices) v = v + Vec3{0.25, -0.5, 0.125};
  const Polyhedron q = normalize(p);
  Vec3 sum{0, 0, 0};
  for (const Vec3& v : q.vertices) sum = sum + v;
  CHECK(norm(sum) <= 1e-14);
  const Polyhedron r = normalize(q);
  for (size_t i = 0; i < q.vertices.size(); ++i) CHECK(norm(r.vertices[i] - q.vertices[i]) == 0.0);
}

TEST_CASE("every builtin solid records a family tag") {
  for (const std::string& name : catalog_names()) {
    const Polyhedron p = builtin(name);
    REQUIRE(p.tags.size() >= 1);
    const std::string& family = p.tags[0];
    CHECK((family == "platonic" || family == "archimedean" || family == "catalan"));
  }
}
