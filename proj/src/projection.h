// The maps taking a polyhedron to its 2D shadow: rotation-projection
// M_{theta,phi}, planar rotation R_alpha, translation T_{u,v}, silhouette
// hulls with provenance, and silhouette-face pose derivatives. The scalar-
// templated pieces are shared with the multiprecision verifier.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "catalog.h"
#include "error.h"
#include "vec.h"

namespace rupert {

struct Pose {
  double theta = 0, phi = 0;
};

// The seven passage parameters: inner-shape orientation (theta_p, phi_p),
// planar spin alpha, translation (u, v), outer-shape orientation
// (theta_q, phi_q). Component order in Vec7 form: (u, v, theta_p, phi_p,
// alpha, theta_q, phi_q).
struct Passage {
  double u = 0, v = 0;
  double theta_p = 0, phi_p = 0;
  double alpha = 0;
  double theta_q = 0, phi_q = 0;
};

inline Vec7 to_vec7(const Passage& x) {
  return {x.u, x.v, x.theta_p, x.phi_p, x.alpha, x.theta_q, x.phi_q};
}
inline Passage to_passage(const Vec7& a) {
  return {a[0], a[1], a[2], a[3], a[4], a[5], a[6]};
}

template <class S>
struct Mat23 {
  S m[2][3];
};

// Row 1 = (sin phi, sin theta cos phi, cos theta cos phi),
// row 2 = (0, cos theta, -sin theta). Rows are orthonormal.
template <class S>
Mat23<S> projection_matrix_t(const S& theta, const S& phi) {
  using std::cos;
  using std::sin;
  const S st = sin(theta), ct = cos(theta), sp = sin(phi), cp = cos(phi);
  Mat23<S> r;
  r.m[0][0] = sp;
  r.m[0][1] = st * cp;
  r.m[0][2] = ct * cp;
  r.m[1][0] = S(0);
  r.m[1][1] = ct;
  r.m[1][2] = -st;
  return r;
}

template <class S>
Mat23<S> projection_dtheta_t(const S& theta, const S& phi) {
  using std::cos;
  using std::sin;
  const S st = sin(theta), ct = cos(theta), cp = cos(phi);
  Mat23<S> r;
  r.m[0][0] = S(0);
  r.m[0][1] = ct * cp;
  r.m[0][2] = -st * cp;
  r.m[1][0] = S(0);
  r.m[1][1] = -st;
  r.m[1][2] = -ct;
  return r;
}

template <class S>
Mat23<S> projection_dphi_t(const S& theta, const S& phi) {
  using std::cos;
  using std::sin;
  const S st = sin(theta), ct = cos(theta), sp = sin(phi), cp = cos(phi);
  Mat23<S> r;
  r.m[0][0] = cp;
  r.m[0][1] = -st * sp;
  r.m[0][2] = -ct * sp;
  r.m[1][0] = S(0);
  r.m[1][1] = S(0);
  r.m[1][2] = S(0);
  return r;
}

template <class S>
P2<S> mat_apply(const Mat23<S>& a, const P3<S>& p) {
  return {a.m[0][0] * p.x + a.m[0][1] * p.y + a.m[0][2] * p.z,
          a.m[1][0] * p.x + a.m[1][1] * p.y + a.m[1][2] * p.z};
}

template <class S>
P2<S> rotate(const S& cos_a, const S& sin_a, const P2<S>& p) {
  return {cos_a * p.x - sin_a * p.y, sin_a * p.x + cos_a * p.y};
}

// Derivative of R_alpha p with respect to alpha.
template <class S>
P2<S> rotate_dalpha(const S& cos_a, const S& sin_a, const P2<S>& p) {
  return {-sin_a * p.x - cos_a * p.y, cos_a * p.x - sin_a * p.y};
}

// Strictly convex hull of 2D points by monotone chain, counter-clockwise.
// Returns indices into pts. Coincident points (within dedup_tol per axis)
// collapse to the lowest index; a turn whose cross product is <= turn_tol is
// treated as collinear and the middle point dropped.
template <class S>
std::vector<int> hull_indices(const std::vector<P2<S>>& pts, const S& turn_tol,
                              const S& dedup_tol) {
  std::vector<int> order(pts.size());
  for (size_t i = 0; i < pts.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (pts[i].x != pts[j].x) return pts[i].x < pts[j].x;
    if (pts[i].y != pts[j].y) return pts[i].y < pts[j].y;
    return i < j;
  });
  std::vector<int> kept;
  for (int id : order) {
    if (!kept.empty()) {
      const P2<S>& prev = pts[kept.back()];
      using std::abs;
      if (abs(pts[id].x - prev.x) <= dedup_tol && abs(pts[id].y - prev.y) <= dedup_tol) {
        if (id < kept.back()) kept.back() = id;
        continue;
      }
    }
    kept.push_back(id);
  }
  if (kept.size() < 3) return kept;

  auto build = [&](std::vector<int>& chain, int id) {
    while (chain.size() >= 2) {
      const P2<S>& a = pts[chain[chain.size() - 2]];
      const P2<S>& b = pts[chain[chain.size() - 1]];
      if (cross(b - a, pts[id] - b) > turn_tol) break;
      chain.pop_back();
    }
    chain.push_back(id);
  };
  std::vector<int> lower, upper;
  for (int id : kept) build(lower, id);
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) build(upper, *it);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

// Face vector w of the edge through pa, pb: the solution of
// w.pa = w.pb = 1. Requires the origin off the edge's line.
template <class S>
P2<S> edge_face(const P2<S>& pa, const P2<S>& pb, const S& det_tol) {
  const S det = cross(pa, pb);
  using std::abs;
  if (abs(det) <= det_tol) {
    fail(ErrorCode::kDegenerate, "edge through the origin: face vector undefined");
  }
  return {(pb.y - pa.y) / det, (pa.x - pb.x) / det};
}

struct PlanarFace {
  Vec2 w;     // w . p <= 1 over the hull, equality on this edge
  int a, b;   // 3D source vertex indices of the edge endpoints
};

struct PlanarPolygon {
  std::vector<Vec2> hull;        // counter-clockwise, strictly convex
  std::vector<int> provenance;   // hull[k] is the projection of vertex provenance[k]
  std::vector<PlanarFace> faces; // faces[k] spans hull[k] -> hull[(k+1) % n]
};

Mat23<double> projection_matrix(const Pose& pose);
Mat23<double> projection_dtheta(const Pose& pose);
Mat23<double> projection_dphi(const Pose& pose);

// T_{u,v}(R_alpha(M_{theta_p,phi_p} V_i)) for every vertex, in order.
std::vector<Vec2> apply_inner(const Polyhedron& p, const Passage& x);

// Outer silhouette at a pose. collinear_tol is relative: the turn tolerance
// is collinear_tol * scale^2 with scale the largest projected magnitude.
PlanarPolygon silhouette(const Polyhedron& p, const Pose& pose,
                         double collinear_tol = 1e-12);

struct FaceJacobian {
  Vec2 dtheta, dphi;  // columns d w / d theta, d w / d phi
};

// Pose derivative of the face vector w defined by 3D vertices (a_idx, b_idx):
// with K = [(M A)^T; (M B)^T] and K w = (1,1)^T, dw/ds = -K^inv (dK/ds) w.
// Throws Error(kDegenerate) when K is singular.
FaceJacobian face_pose_jacobian(const Polyhedron& p, const Pose& pose, int a_idx,
                                int b_idx);

}  // namespace rupert
