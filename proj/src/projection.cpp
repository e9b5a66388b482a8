#include "projection.h"

namespace rupert {

Mat23<double> projection_matrix(const Pose& pose) {
  return projection_matrix_t(pose.theta, pose.phi);
}
Mat23<double> projection_dtheta(const Pose& pose) {
  return projection_dtheta_t(pose.theta, pose.phi);
}
Mat23<double> projection_dphi(const Pose& pose) {
  return projection_dphi_t(pose.theta, pose.phi);
}

std::vector<Vec2> apply_inner(const Polyhedron& p, const Passage& x) {
  const Mat23<double> m = projection_matrix_t(x.theta_p, x.phi_p);
  const double c = std::cos(x.alpha), s = std::sin(x.alpha);
  std::vector<Vec2> out;
  out.reserve(p.vertices.size());
  for (const Vec3& vert : p.vertices) {
    const Vec2 r = rotate(c, s, mat_apply(m, vert));
    out.push_back({r.x + x.u, r.y + x.v});
  }
  return out;
}

PlanarPolygon silhouette(const Polyhedron& p, const Pose& pose,
                         double collinear_tol) {
  const Mat23<double> m = projection_matrix_t(pose.theta, pose.phi);
  std::vector<Vec2> pts;
  pts.reserve(p.vertices.size());
  double scale = 0;
  for (const Vec3& vert : p.vertices) {
    const Vec2 q = mat_apply(m, vert);
    scale = std::max({scale, std::abs(q.x), std::abs(q.y)});
    pts.push_back(q);
  }
  if (!(scale > 0)) fail(ErrorCode::kDegenerate, p.name + ": silhouette collapses to a point");

  PlanarPolygon poly;
  poly.provenance = hull_indices(pts, collinear_tol * scale * scale, 1e-14 * scale);
  const int n = static_cast<int>(poly.provenance.size());
  if (n < 3) fail(ErrorCode::kDegenerate, p.name + ": silhouette hull has fewer than 3 points");
  poly.hull.reserve(n);
  for (int id : poly.provenance) poly.hull.push_back(pts[id]);
  poly.faces.reserve(n);
  const double det_tol = 1e-14 * scale * scale;
  for (int k = 0; k < n; ++k) {
    const int k2 = (k + 1) % n;
    PlanarFace f;
    f.w = edge_face(poly.hull[k], poly.hull[k2], det_tol);
    f.a = poly.provenance[k];
    f.b = poly.provenance[k2];
    poly.faces.push_back(f);
  }
  return poly;
}

FaceJacobian face_pose_jacobian(const Polyhedron& p, const Pose& pose, int a_idx,
                                int b_idx) {
  const Mat23<double> m = projection_matrix_t(pose.theta, pose.phi);
  const Vec3& a3 = p.vertices[a_idx];
  const Vec3& b3 = p.vertices[b_idx];
  const Vec2 pa = mat_apply(m, a3);
  const Vec2 pb = mat_apply(m, b3);
  const double det = cross(pa, pb);
  const double limit = 1e-14 * (norm(pa) * norm(pb) + 1e-300);
  if (std::abs(det) <= limit) {
    fail(ErrorCode::kDegenerate, p.name + ": singular face system (projected pair nearly parallel)");
  }
  const Vec2 w = {(pb.y - pa.y) / det, (pa.x - pb.x) / det};

  // dw/ds = -K^inv (dK/ds) w, K = [pa^T; pb^T].
  const auto solve = [&](const Vec2& rhs) -> Vec2 {
    // K^inv rhs with K rows pa, pb.
    return {(pb.y * rhs.x - pa.y * rhs.y) / det, (-pb.x * rhs.x + pa.x * rhs.y) / det};
  };
  const auto column = [&](const Mat23<double>& dm) -> Vec2 {
    const Vec2 da = mat_apply(dm, a3);
    const Vec2 db = mat_apply(dm, b3);
    const Vec2 rhs = {dot(da, w), dot(db, w)};
    const Vec2 sol = solve(rhs);
    return {-sol.x, -sol.y};
  };
  return {column(projection_dtheta_t(pose.theta, pose.phi)),
          column(projection_dphi_t(pose.theta, pose.phi))};
}

}  // namespace rupert
