#include <doctest.h>

#include <cmath>

#include "catalog.h"
#include "error.h"
#include "projection.h"
#include "search.h"

using namespace rupert;

namespace {

Vec3 row(const Mat23<double>& m, int r) { return {m.m[r][0], m.m[r][1], m.m[r][2]}; }

Pose random_pose(TrialRng& rng) {
  return {rng.uniform(0.0, 3.141592653589793), rng.uniform(0.0, 6.283185307179586)};
}

}  // namespace

TEST_CASE("projection rows are orthonormal at random poses") {
  TrialRng rng(11, 0);
  for (int k = 0; k < 200; ++k) {
    const Pose pose = random_pose(rng);
    const Mat23<double> m = projection_matrix(pose);
    CHECK(dot(row(m, 0), row(m, 0)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(dot(row(m, 1), row(m, 1)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(dot(row(m, 0), row(m, 1))) <= 1e-14);
  }
}

TEST_CASE("pose derivatives of the projection match finite differences") {
  TrialRng rng(12, 0);
  const double h = 1e-6;
  for (int k = 0; k < 50; ++k) {
    const Pose pose = random_pose(rng);
    const Mat23<double> dt = projection_dtheta(pose);
    const Mat23<double> dp = projection_dphi(pose);
    const Mat23<double> tp = projection_matrix({pose.theta + h, pose.phi});
    const Mat23<double> tm = projection_matrix({pose.theta - h, pose.phi});
    const Mat23<double> pp = projection_matrix({pose.theta, pose.phi + h});
    const Mat23<double> pm = projection_matrix({pose.theta, pose.phi - h});
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 3; ++c) {
        CHECK(dt.m[r][c] == doctest::Approx((tp.m[r][c] - tm.m[r][c]) / (2 * h)).epsilon(1e-8));
        CHECK(dp.m[r][c] == doctest::Approx((pp.m[r][c] - pm.m[r][c]) / (2 * h)).epsilon(1e-8));
      }
  }
}

TEST_CASE("planar rotation and its derivative agree with the closed forms") {
  const double a = 0.7;
  const Vec2 p{0.3, -1.2};
  const Vec2 r = rotate(std::cos(a), std::sin(a), p);
  CHECK(r.x == doctest::Approx(std::cos(a) * p.x - std::sin(a) * p.y).epsilon(1e-15));
  CHECK(r.y == doctest::Approx(std::sin(a) * p.x + std::cos(a) * p.y).epsilon(1e-15));
  const double h = 1e-6;
  const Vec2 rp = rotate(std::cos(a + h), std::sin(a + h), p);
  const Vec2 rm = rotate(std::cos(a - h), std::sin(a - h), p);
  const Vec2 d = rotate_dalpha(std::cos(a), std::sin(a), p);
  CHECK(d.x == doctest::Approx((rp.x - rm.x) / (2 * h)).epsilon(1e-8));
  CHECK(d.y == doctest::Approx((rp.y - rm.y) / (2 * h)).epsilon(1e-8));
}

TEST_CASE("hull_indices walks a square counter-clockwise and drops clutter") {
  const std::vector<Vec2> pts = {{1, 1},   {-1, 1}, {-1, -1}, {1, -1},
                                 {0, 0},   {0, 1},  {1, 1},   // duplicate corner
                                 {0.5, 0.5}};
  const std::vector<int> hull = hull_indices(pts, 0.0, 1e-14);
  REQUIRE(hull.size() == 4);
  // counter-clockwise: every consecutive turn is a left turn
  for (size_t k = 0; k < hull.size(); ++k) {
    const Vec2& a = pts[hull[k]];
    const Vec2& b = pts[hull[(k + 1) % hull.size()]];
    const Vec2& c = pts[hull[(k + 2) % hull.size()]];
    CHECK(cross(b - a, c - b) > 0.0);
  }
  for (int id : hull) CHECK(id < 4);  // interior, edge, duplicate points all gone
}

TEST_CASE("edge_face solves the two-point unit conditions") {
  TrialRng rng(13, 0);
  for (int k = 0; k < 100; ++k) {
    const Vec2 a{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Vec2 b{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    if (std::abs(cross(a, b)) < 1e-3) continue;
    const Vec2 w = edge_face(a, b, 1e-14);
    CHECK(dot(w, a) == doctest::Approx(1.0).epsilon(1e-11));
    CHECK(dot(w, b) == doctest::Approx(1.0).epsilon(1e-11));
  }
  CHECK_THROWS_AS(edge_face(Vec2{1, 1}, Vec2{-1, -1}, 1e-14), Error);
}

TEST_CASE("silhouette of an axis-aligned cube view is the unit square") {
  const Polyhedron cube = builtin("cube");
  const PlanarPolygon sil = silhouette(cube, Pose{0.0, 1.5707963267948966});
  REQUIRE(sil.hull.size() == 4);
  REQUIRE(sil.faces.size() == 4);
  for (const Vec2& p : sil.hull) {
    CHECK(std::abs(p.x) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(p.y) == doctest::Approx(1.0).epsilon(1e-12));
  }
  for (const PlanarFace& f : sil.faces) {
    CHECK(std::abs(f.w.x) + std::abs(f.w.y) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("silhouette faces support their edge and bound all vertices") {
  for (const char* name : {"tetrahedron", "icosahedron", "truncated_octahedron"}) {
    const Polyhedron p = builtin(name);
    TrialRng rng(14, 0);
    for (int k = 0; k < 20; ++k) {
      const Pose pose = random_pose(rng);
      const PlanarPolygon sil = silhouette(p, pose);
      REQUIRE(sil.hull.size() >= 3);
      REQUIRE(sil.faces.size() == sil.hull.size());
      REQUIRE(sil.provenance.size() == sil.hull.size());
      const int n = static_cast<int>(sil.hull.size());
      for (int j = 0; j < n; ++j) {
        const PlanarFace& f = sil.faces[j];
        CHECK(dot(f.w, sil.hull[j]) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(dot(f.w, sil.hull[(j + 1) % n]) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(f.a == sil.provenance[j]);
        CHECK(f.b == sil.provenance[(j + 1) % n]);
        for (const Vec2& q : sil.hull) CHECK(dot(f.w, q) <= 1.0 + 1e-10);
      }
    }
  }
}

TEST_CASE("face pose derivatives match finite differences") {
  const Polyhedron p = builtin("icosahedron");
  TrialRng rng(15, 0);
  int checked = 0;
  for (int k = 0; k < 40 && checked < 25; ++k) {
    const Pose pose = random_pose(rng);
    const PlanarPolygon sil = silhouette(p, pose);
    const PlanarFace& f = sil.faces[k % sil.faces.size()];
    const double h = 1e-6;
    const auto w_at = [&](const Pose& q) -> Vec2 {
      const Mat23<double> m = projection_matrix(q);
      Vec2 pa, pb;
      pa = mat_apply(m, p.vertices[f.a]);
      pb = mat_apply(m, p.vertices[f.b]);
      return edge_face(pa, pb, 0.0);
    };
    FaceJacobian jac;
    try {
      jac = face_pose_jacobian(p, pose, f.a, f.b);
    } catch (const Error&) {
      continue;  // near-singular geometry: skip this draw
    }
    const Vec2 td = (1.0 / (2 * h)) * (w_at({pose.theta + h, pose.phi}) - w_at({pose.theta - h, pose.phi}));
    const Vec2 pd = (1.0 / (2 * h)) * (w_at({pose.theta, pose.phi + h}) - w_at({pose.theta, pose.phi - h}));
    const double scale = std::max({1.0, norm(jac.dtheta), norm(jac.dphi)});
    CHECK(norm(td - jac.dtheta) <= 1e-6 * scale);
    CHECK(norm(pd - jac.dphi) <= 1e-6 * scale);
    ++checked;
  }
  CHECK(checked >= 25);
}

TEST_CASE("passage round-trips through its vector form") {
  const Passage x{0.1, -0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  const Vec7 v = to_vec7(x);
  CHECK(v == Vec7{0.1, -0.2, 0.3, 0.4, 0.5, 0.6, 0.7});
  const Passage y = to_passage(v);
  CHECK(to_vec7(y) == v);
}
