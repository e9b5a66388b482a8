#include "mu.h"

#include <map>

namespace rupert {

TermTable evaluate(const Polyhedron& p, const Passage& x, double tau_tie) {
  TermTable t;
  t.outer = silhouette(p, {x.theta_q, x.phi_q});
  t.inner = apply_inner(p, x);

  const int nfaces = static_cast<int>(t.outer.faces.size());
  const int nverts = static_cast<int>(t.inner.size());
  for (int i = 0; i < nverts; ++i) {
    for (int j = 0; j < nfaces; ++j) {
      const double d = dot(t.outer.faces[j].w, t.inner[i]);
      if (d > 0) {
        const double value = 1.0 / d;
        if (t.argmin < 0 || value < t.mu) {
          t.mu = value;
          t.argmin = static_cast<int>(t.terms.size());
        }
        t.terms.push_back({i, j, value});
      }
    }
  }
  if (t.argmin < 0) {
    fail(ErrorCode::kUnbounded,
         p.name + ": no blocking pair at this passage (mu is infinite)");
  }
  const double cutoff = t.mu * (1.0 + tau_tie);
  for (size_t k = 0; k < t.terms.size(); ++k) {
    if (t.terms[k].value <= cutoff) t.active.push_back(static_cast<int>(k));
  }
  return t;
}

std::vector<Vec7> term_gradients(const Polyhedron& p, const Passage& x,
                                 const TermTable& table,
                                 const std::vector<int>& term_indices) {
  const Mat23<double> mp = projection_matrix_t(x.theta_p, x.phi_p);
  const Mat23<double> mp_dt = projection_dtheta_t(x.theta_p, x.phi_p);
  const Mat23<double> mp_dp = projection_dphi_t(x.theta_p, x.phi_p);
  const double ca = std::cos(x.alpha), sa = std::sin(x.alpha);
  const Pose outer_pose{x.theta_q, x.phi_q};

  std::map<int, FaceJacobian> jacobians;
  for (int k : term_indices) {
    const int j = table.terms[k].j;
    if (!jacobians.count(j)) {
      const PlanarFace& f = table.outer.faces[j];
      jacobians.emplace(j, face_pose_jacobian(p, outer_pose, f.a, f.b));
    }
  }

  std::vector<Vec7> grads;
  grads.reserve(term_indices.size());
  for (int k : term_indices) {
    const MuTerm& term = table.terms[k];
    const Vec3& v3 = p.vertices[term.i];
    const Vec2& w = table.outer.faces[term.j].w;
    const Vec2& v = table.inner[term.i];
    const FaceJacobian& jac = jacobians.at(term.j);

    const Vec2 q = mat_apply(mp, v3);  // before spin and translation
    Vec7 dd;                           // gradient of w . v
    dd[0] = w.x;
    dd[1] = w.y;
    dd[2] = dot(w, rotate(ca, sa, mat_apply(mp_dt, v3)));
    dd[3] = dot(w, rotate(ca, sa, mat_apply(mp_dp, v3)));
    dd[4] = dot(w, rotate_dalpha(ca, sa, q));
    dd[5] = dot(jac.dtheta, v);
    dd[6] = dot(jac.dphi, v);

    const double neg_mu2 = -term.value * term.value;
    grads.push_back(neg_mu2 * dd);
  }
  return grads;
}

Vec7 term_gradient(const Polyhedron& p, const Passage& x, const TermTable& table,
                   int term_index) {
  return term_gradients(p, x, table, {term_index})[0];
}

Vec7 term_gradient(const Polyhedron& p, const Passage& x, int i, int j,
                   double tau_tie) {
  const TermTable table = evaluate(p, x, tau_tie);
  for (size_t k = 0; k < table.terms.size(); ++k) {
    if (table.terms[k].i == i && table.terms[k].j == j) {
      return term_gradient(p, x, table, static_cast<int>(k));
    }
  }
  fail(ErrorCode::kInvalid, p.name + ": term (" + std::to_string(i) + "," +
                                std::to_string(j) + ") not present at this passage");
}

double directional_derivative(const Polyhedron& p, const Passage& x, const Vec7& d,
                              double tau_tie) {
  const TermTable table = evaluate(p, x, tau_tie);
  const std::vector<Vec7> grads = term_gradients(p, x, table, table.active);
  double best = 0;
  bool first = true;
  for (const Vec7& g : grads) {
    const double slope = dot(g, d);
    if (first || slope < best) {
      best = slope;
      first = false;
    }
  }
  return best;
}

}  // namespace rupert
