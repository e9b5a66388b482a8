#include "verify.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "error.h"
#include "projection.h"

namespace rupert {
namespace {

using HP2 = P2<BigFloat>;
using HP3 = P3<BigFloat>;
using Mat3 = std::array<HP3, 3>;  // columns

int checked_digits(const PrecisionContext& ctx) {
  if (ctx.digits < 30)
    fail(ErrorCode::kInvalid, "verify: precision below 30 significant digits");
  return ctx.digits;
}

BigFloat working_tol(int digits) {
  return BigFloat(pow(BigFloat(10), 5 - digits));
}

// Source vertices re-read at the current precision and recentred there.
std::vector<HP3> parse_vertices(const Polyhedron& p) {
  if (p.vertex_strings.size() != p.vertices.size() || p.vertex_strings.empty())
    fail(ErrorCode::kInvalid, p.name + ": no decimal vertex strings to reverify");
  std::vector<HP3> verts;
  verts.reserve(p.vertex_strings.size());
  HP3 sum{BigFloat(0), BigFloat(0), BigFloat(0)};
  for (const auto& vs : p.vertex_strings) {
    HP3 v{BigFloat(vs[0]), BigFloat(vs[1]), BigFloat(vs[2])};
    sum = sum + v;
    verts.push_back(v);
  }
  const BigFloat inv = BigFloat(1) / BigFloat(static_cast<int>(verts.size()));
  const HP3 centroid = inv * sum;
  for (HP3& v : verts) v = v - centroid;
  return verts;
}

struct ShadowFit {
  std::vector<int> hull;                    // provenance into the outer points
  std::vector<HP2> faces;                   // w of edge hull[k] -> hull[k+1]
  std::vector<std::vector<BigFloat>> dots;  // dots[i][j] = w_j . inner_i
  BigFloat dmax = BigFloat(0);
  std::pair<int, int> argmax{-1, -1};       // (inner index, face index)
};

ShadowFit fit_shadow(const std::vector<HP2>& outer, const std::vector<HP2>& inner,
                     const BigFloat& tol, const std::string& what) {
  BigFloat scale(0);
  for (const HP2& q : outer) {
    const BigFloat ax = abs(q.x), ay = abs(q.y);
    if (ax > scale) scale = ax;
    if (ay > scale) scale = ay;
  }
  if (!(scale > 0)) fail(ErrorCode::kDegenerate, what + ": silhouette collapses to a point");

  ShadowFit fit;
  const BigFloat turn_tol = tol * scale * scale;
  const BigFloat dedup_tol = tol * scale;
  fit.hull = hull_indices(outer, turn_tol, dedup_tol);
  const int n = static_cast<int>(fit.hull.size());
  if (n < 3) fail(ErrorCode::kDegenerate, what + ": silhouette hull has fewer than 3 points");
  fit.faces.reserve(n);
  for (int k = 0; k < n; ++k) {
    const int k2 = (k + 1) % n;
    fit.faces.push_back(edge_face(outer[fit.hull[k]], outer[fit.hull[k2]], turn_tol));
  }

  fit.dots.resize(inner.size());
  for (int i = 0; i < static_cast<int>(inner.size()); ++i) {
    fit.dots[i].reserve(n);
    for (int j = 0; j < n; ++j) {
      BigFloat d = dot(fit.faces[j], inner[i]);
      if (fit.argmax.first < 0 || d > fit.dmax) {
        fit.dmax = d;
        fit.argmax = {i, j};
      }
      fit.dots[i].push_back(std::move(d));
    }
  }
  if (!(fit.dmax > 0))
    fail(ErrorCode::kUnbounded, what + ": no blocking pair at this passage (mu is infinite)");
  return fit;
}

std::vector<int> canonical_cycle(std::vector<int> v) {
  if (v.empty()) return v;
  std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
  return v;
}

RecheckResult recheck_core(const Polyhedron& p, const PassageHp& x,
                           const Passage& x_double, int digits) {
  for (const BigFloat& xi : x)
    if (isnan(xi) || isinf(xi)) fail(ErrorCode::kInvalid, "recheck: passage not finite");
  const BigFloat tol = working_tol(digits);
  const std::vector<HP3> verts = parse_vertices(p);

  const Mat23<BigFloat> mq = projection_matrix_t(x[5], x[6]);
  std::vector<HP2> outer;
  outer.reserve(verts.size());
  for (const HP3& v : verts) outer.push_back(mat_apply(mq, v));

  const Mat23<BigFloat> mp = projection_matrix_t(x[2], x[3]);
  const BigFloat ca = cos(x[4]), sa = sin(x[4]);
  std::vector<HP2> inner;
  inner.reserve(verts.size());
  for (const HP3& v : verts) {
    HP2 q = rotate(ca, sa, mat_apply(mp, v));
    inner.push_back({q.x + x[0], q.y + x[1]});
  }

  const ShadowFit fit = fit_shadow(outer, inner, tol, p.name);

  RecheckResult out;
  out.mu = BigFloat(1) / fit.dmax;
  // Snap by the working tolerance before truncating: a mu that is an exact
  // 12-digit value in exact arithmetic must not print its predecessor just
  // because the last multiprecision digit dithered low.
  out.mu_12 = floor_fixed(BigFloat(out.mu + tol), 12);
  out.certificate.mu = out.mu;
  BigFloat min_slack(0);
  for (int i = 0; i < static_cast<int>(fit.dots.size()); ++i) {
    for (int j = 0; j < static_cast<int>(fit.dots[i].size()); ++j) {
      BigFloat slack = BigFloat(1) - out.mu * fit.dots[i][j];
      if (out.certificate.min_slack_index.first < 0 || slack < min_slack) {
        min_slack = slack;
        out.certificate.min_slack_index = {i, j};
      }
      out.certificate.slacks.emplace_back(i, j, std::move(slack));
    }
  }

  // The double pipeline sees the same geometry through rounded coordinates;
  // a different hull is worth a flag but not an error.
  try {
    const TermTable table = evaluate(p, x_double);
    out.combinatorics_mismatch =
        canonical_cycle(table.outer.provenance) != canonical_cycle(fit.hull);
  } catch (const Error&) {
    out.combinatorics_mismatch = true;
  }
  return out;
}

struct TetraPair {
  std::array<HP3, 4> t1, t2;
};

// Two regular tetrahedra with edge length sqrt(3), given by closed forms.
TetraPair theorem2_solids() {
  const BigFloat s2 = sqrt(BigFloat(2)), s3 = sqrt(BigFloat(3)), s6 = sqrt(BigFloat(6));
  const BigFloat z8 = sqrt(BigFloat(1) / 8), half = BigFloat(1) / 2;
  TetraPair tp;
  tp.t1 = {HP3{BigFloat(0), BigFloat(1), -z8},
           HP3{sqrt(BigFloat(3) / 4), -half, -z8},
           HP3{-sqrt(BigFloat(3) / 4), -half, -z8},
           HP3{BigFloat(0), BigFloat(0), sqrt(BigFloat(9) / 8)}};
  const BigFloat ap = (2 + s2) / 4, am = (2 - s2) / 4;
  const BigFloat yu = (5 * s6 - 2 * s3) / 12, yd = -(2 * s3 + s6) / 12;
  tp.t2 = {HP3{am, yu, ap}, HP3{-am, yu, -ap}, HP3{ap, yd, -am}, HP3{-ap, yd, am}};
  return tp;
}

BigFloat tetra_ratio_target() {
  return BigFloat(sqrt(BigFloat(6)) / (1 + sqrt(BigFloat(2))));
}

HP3 mat3_mul(const Mat3& q, const HP3& v) {
  return {q[0].x * v.x + q[1].x * v.y + q[2].x * v.z,
          q[0].y * v.x + q[1].y * v.y + q[2].y * v.z,
          q[0].z * v.x + q[1].z * v.y + q[2].z * v.z};
}

BigFloat mat3_det(const Mat3& q) { return dot(q[0], cross(q[1], q[2])); }

// Solves B y = rhs by Cramer's rule; B given by columns.
HP3 mat3_solve(const Mat3& b, const HP3& rhs, const BigFloat& det) {
  return {dot(rhs, cross(b[1], b[2])) / det, dot(b[0], cross(rhs, b[2])) / det,
          dot(b[0], cross(b[1], rhs)) / det};
}

}  // namespace

PassageHp promote(const Passage& x) {
  const Vec7 v = to_vec7(x);
  PassageHp out;
  for (int i = 0; i < 7; ++i) out[i] = BigFloat(v[i]);
  return out;
}

RecheckResult recheck(const Polyhedron& p, const Passage& x, const PrecisionContext& ctx) {
  const int digits = checked_digits(ctx);
  PrecisionGuard guard(static_cast<unsigned>(digits));
  return recheck_core(p, promote(x), x, digits);
}

RecheckResult recheck(const Polyhedron& p, const PassageHp& x, const PrecisionContext& ctx) {
  const int digits = checked_digits(ctx);
  PrecisionGuard guard(static_cast<unsigned>(digits));
  Vec7 xd;
  for (int i = 0; i < 7; ++i) xd[i] = static_cast<double>(x[i]);
  return recheck_core(p, x, to_passage(xd), digits);
}

Theorem2Result verify_theorem2(const PrecisionContext& ctx) {
  const int digits = checked_digits(ctx);
  PrecisionGuard guard(static_cast<unsigned>(digits));
  const BigFloat tol = working_tol(digits);
  const TetraPair tp = theorem2_solids();

  // Both shadows drop the z coordinate.
  std::vector<HP2> outer, inner;
  for (const HP3& v : tp.t1) outer.push_back({v.x, v.y});
  for (const HP3& v : tp.t2) inner.push_back({v.x, v.y});

  const ShadowFit fit = fit_shadow(outer, inner, tol, "theorem2");
  Theorem2Result out;
  out.mu = BigFloat(1) / fit.dmax;

  const BigFloat target = tetra_ratio_target();
  bool first = true;
  for (const auto& row : fit.dots) {
    for (const BigFloat& d : row) {
      BigFloat slack = BigFloat(1) - target * d;
      if (first || slack < out.margin) out.margin = slack;
      first = false;
    }
  }
  if (out.margin < -tol)
    fail(ErrorCode::kDegenerate, "theorem2: a scaled extreme point escapes the shadow");
  return out;
}

PassageHp theorem2_passage(const PrecisionContext& ctx) {
  const int digits = checked_digits(ctx);
  PrecisionGuard guard(static_cast<unsigned>(digits));
  const BigFloat tol = working_tol(digits);
  const TetraPair tp = theorem2_solids();

  const BigFloat quarter = BigFloat(1) / 4;
  HP3 c2{BigFloat(0), BigFloat(0), BigFloat(0)};
  for (const HP3& v : tp.t2) c2 = c2 + v;
  c2 = quarter * c2;

  std::array<HP3, 4> t2c;
  for (int i = 0; i < 4; ++i) t2c[i] = tp.t2[i] - c2;

  // The rotation taking the first tetrahedron onto the recentred second one
  // exists for some vertex correspondence; find it by trying all of them and
  // keeping the first orthogonal, orientation-preserving candidate.
  std::array<int, 4> perm{0, 1, 2, 3};
  Mat3 q;
  bool found = false;
  do {
    Mat3 b;
    for (int i = 0; i < 3; ++i) b[i] = tp.t1[perm[i]] - tp.t1[perm[3]];
    const BigFloat det = mat3_det(b);
    if (abs(det) <= tol) continue;
    Mat3 binv_cols;  // columns of B^-1 via solves against unit vectors
    binv_cols[0] = mat3_solve(b, HP3{BigFloat(1), BigFloat(0), BigFloat(0)}, det);
    binv_cols[1] = mat3_solve(b, HP3{BigFloat(0), BigFloat(1), BigFloat(0)}, det);
    binv_cols[2] = mat3_solve(b, HP3{BigFloat(0), BigFloat(0), BigFloat(1)}, det);
    Mat3 a;
    for (int i = 0; i < 3; ++i) a[i] = t2c[i] - t2c[3];
    for (int i = 0; i < 3; ++i)
      q[i] = {a[0].x * binv_cols[i].x + a[1].x * binv_cols[i].y + a[2].x * binv_cols[i].z,
              a[0].y * binv_cols[i].x + a[1].y * binv_cols[i].y + a[2].y * binv_cols[i].z,
              a[0].z * binv_cols[i].x + a[1].z * binv_cols[i].y + a[2].z * binv_cols[i].z};
    BigFloat err(0);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const BigFloat gram = dot(q[i], q[j]) - (i == j ? 1 : 0);
        if (abs(gram) > err) err = abs(gram);
      }
    }
    if (err <= tol && abs(mat3_det(q) - 1) <= tol) found = true;
  } while (!found && std::next_permutation(perm.begin(), perm.end()));
  if (!found) fail(ErrorCode::kDegenerate, "theorem2: no rotation matches the tetrahedra");

  // Split the top two rows of Q into a planar spin and a projection pose.
  // The pose is fixed by the rows' common unit normal n = r1 x r2, which for
  // a projection at (theta, phi) reads (-cos phi, sin phi sin theta,
  // sin phi cos theta).
  const HP3 r1{q[0].x, q[1].x, q[2].x};
  const HP3 r2{q[0].y, q[1].y, q[2].y};
  const HP3 n = cross(r1, r2);
  const BigFloat phi = acos(BigFloat(-n.x));
  const BigFloat splane = sqrt(BigFloat(n.y * n.y + n.z * n.z));
  const BigFloat theta = splane <= tol ? BigFloat(0) : BigFloat(atan2(n.y, n.z));
  const Mat23<BigFloat> m = projection_matrix_t(theta, phi);
  // R = N M^T is the leftover in-plane rotation.
  const BigFloat r00 = r1.x * m.m[0][0] + r1.y * m.m[0][1] + r1.z * m.m[0][2];
  const BigFloat r10 = r2.x * m.m[0][0] + r2.y * m.m[0][1] + r2.z * m.m[0][2];
  const BigFloat alpha = atan2(r10, r00);

  const BigFloat half_pi = acos(BigFloat(-1)) / 2;
  return {c2.x, c2.y, theta, phi, alpha, BigFloat(0), half_pi};
}

BigFloat check_conjecture_values(const BigFloat& mu, ConjectureTarget target) {
  if (!(mu > 0)) fail(ErrorCode::kInvalid, "conjecture check: mu must be positive");
  PrecisionGuard guard(std::max<unsigned>(mu.precision(), 50));
  switch (target) {
    case ConjectureTarget::kTetraRatio:
      return BigFloat(abs(mu - tetra_ratio_target()));
    case ConjectureTarget::kCubeRatio:
      return BigFloat(abs(mu - 3 * sqrt(BigFloat(2)) / 4));
    case ConjectureTarget::kRhoPoly: {
      const BigFloat y = mu * mu;
      return BigFloat(abs((((2025 * y - 11970) * y + 17009) * y - 9000) * y + 2000));
    }
  }
  fail(ErrorCode::kInvalid, "conjecture check: unknown target");
}

}  // namespace rupert
