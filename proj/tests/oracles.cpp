#include "oracles.h"

#include <cmath>
#include <limits>
#include <random>

#include "error.h"
#include "projection.h"

namespace rupert::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Projection re-typed from the angle definitions rather than shared with
// projection.h, so the two paths can disagree.
Vec2 project_dir(const Vec3& p, double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  return {sp * p.x + st * cp * p.y + ct * cp * p.z, ct * p.y - st * p.z};
}

struct HalfPlane {
  Vec2 a;  // point on the boundary
  Vec2 t;  // edge tangent; inside is the left side
};

// Every directed pair whose line has all points on its left. Plain sign
// tests: fine for generic inputs, which is all this oracle promises.
std::vector<HalfPlane> supporting_edges(const std::vector<Vec2>& pts) {
  const int n = static_cast<int>(pts.size());
  std::vector<HalfPlane> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec2 t = pts[j] - pts[i];
      bool all_left = true;
      for (int k = 0; k < n && all_left; ++k)
        all_left = cross(t, pts[k] - pts[i]) >= 0.0;
      if (all_left) edges.push_back({pts[i], t});
    }
  }
  return edges;
}

std::optional<double> pinned_term_value(const Polyhedron& p, const Passage& xx,
                                        int inner_index, int edge_a, int edge_b) {
  PlanarPolygon sil;
  try {
    sil = silhouette(p, Pose{xx.theta_q, xx.phi_q});
  } catch (const Error&) {
    return std::nullopt;
  }
  for (const PlanarFace& f : sil.faces) {
    if ((f.a == edge_a && f.b == edge_b) || (f.a == edge_b && f.b == edge_a)) {
      const double d = dot(f.w, apply_inner(p, xx)[inner_index]);
      if (d == 0.0) return std::nullopt;
      return 1.0 / d;
    }
  }
  return std::nullopt;
}

}  // namespace

double mu_by_containment(const std::vector<Vec3>& vertices, const Passage& x,
                         int bisections) {
  std::vector<Vec2> outer(vertices.size());
  std::vector<Vec2> inner(vertices.size());
  const double ca = std::cos(x.alpha), sa = std::sin(x.alpha);
  for (size_t i = 0; i < vertices.size(); ++i) {
    outer[i] = project_dir(vertices[i], x.theta_q, x.phi_q);
    const Vec2 q = project_dir(vertices[i], x.theta_p, x.phi_p);
    inner[i] = {ca * q.x - sa * q.y + x.u, sa * q.x + ca * q.y + x.v};
  }
  const std::vector<HalfPlane> edges = supporting_edges(outer);
  const auto contains = [&](double m) {
    for (const HalfPlane& e : edges)
      for (const Vec2& z : inner)
        if (cross(e.t, m * z - e.a) < 0.0) return false;
    return true;
  };
  if (!contains(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  while (contains(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 0x1p40) return kInf;
  }
  for (int b = 0; b < bisections; ++b) {
    const double mid = 0.5 * (lo + hi);
    (contains(mid) ? lo : hi) = mid;
  }
  return lo;
}

std::optional<Vec7> term_gradient_fd(const Polyhedron& p, const Passage& x,
                                     int inner_index, int edge_a, int edge_b,
                                     double h) {
  Vec7 grad{};
  const Vec7 x0 = to_vec7(x);
  for (int k = 0; k < 7; ++k) {
    Vec7 e{};
    e[k] = 1.0;
    const auto fp = pinned_term_value(p, to_passage(x0 + h * e), inner_index, edge_a, edge_b);
    const auto fm = pinned_term_value(p, to_passage(x0 + (-h) * e), inner_index, edge_a, edge_b);
    if (!fp || !fm) return std::nullopt;
    grad[k] = (*fp - *fm) / (2.0 * h);
  }
  return grad;
}

std::optional<double> directional_derivative_fd(const Polyhedron& p, const Passage& x,
                                                const Vec7& d, double t, double agree_tol) {
  const Vec7 x0 = to_vec7(x);
  const auto mu_at = [&](double s) -> std::optional<double> {
    try {
      return evaluate(p, to_passage(x0 + s * d)).mu;
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  const auto f0 = mu_at(0.0);
  if (!f0) return std::nullopt;
  double slope[3];
  double ts = t;
  for (int k = 0; k < 3; ++k, ts /= 10.0) {
    const auto fk = mu_at(ts);
    if (!fk) return std::nullopt;
    slope[k] = (*fk - *f0) / ts;
  }
  // slope(h) = D + O(h), so two step decades give first-order extrapolants;
  // their disagreement flags a kink inside the stencil.
  const double d01 = (10.0 * slope[1] - slope[0]) / 9.0;
  const double d12 = (10.0 * slope[2] - slope[1]) / 9.0;
  if (std::abs(d01 - d12) > agree_tol * std::max(1.0, std::abs(d12))) return std::nullopt;
  return d12;
}

double subproblem_lower_bound(const std::vector<double>& c, const std::vector<Vec7>& g,
                              double delta, std::uint64_t seed, int rounds,
                              int directions_per_round) {
  const int T = static_cast<int>(c.size());
  double best_val = -kInf;
  {
    double m = kInf;
    for (int t = 0; t < T; ++t) m = std::min(m, c[t]);
    best_val = m;  // s = 0
  }
  Vec7 best_s{};

  // The envelope r -> min_t(c_t + r b_t) is concave piecewise linear, so its
  // max over [0, delta] sits at an endpoint or a pairwise line crossing.
  const auto max_along = [&](const Vec7& dir) {
    std::vector<double> b(T);
    for (int t = 0; t < T; ++t) b[t] = dot(g[t], dir);
    const auto consider = [&](double r) {
      double v = kInf;
      for (int t = 0; t < T; ++t) v = std::min(v, c[t] + r * b[t]);
      if (v > best_val) {
        best_val = v;
        best_s = r * dir;
      }
    };
    consider(0.0);
    consider(delta);
    for (int i = 0; i < T; ++i)
      for (int j = i + 1; j < T; ++j) {
        const double db = b[i] - b[j];
        if (db == 0.0) continue;
        const double r = (c[j] - c[i]) / db;
        if (r > 0.0 && r < delta) consider(r);
      }
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  const auto span_vec = [&]() {
    Vec7 s{};
    for (int t = 0; t < T; ++t) s = s + nd(rng) * g[t];
    return s;
  };

  for (int t = 0; t < T; ++t) {
    const double n = norm(g[t]);
    if (n > 0.0) max_along((1.0 / n) * g[t]);
  }
  double radius = 1.0;
  for (int round = 0; round < rounds; ++round, radius *= 0.5) {
    Vec7 center{};
    const double cn = norm(best_s);
    if (cn > 0.0) center = (1.0 / cn) * best_s;
    for (int k = 0; k < directions_per_round; ++k) {
      Vec7 cand = span_vec();
      const double n1 = norm(cand);
      if (n1 == 0.0) continue;
      cand = (1.0 / n1) * cand;
      if (round > 0 && cn > 0.0) cand = center + radius * cand;
      const double n2 = norm(cand);
      if (n2 > 0.0) max_along((1.0 / n2) * cand);
    }
  }
  return best_val;
}

}  // namespace rupert::oracle
