#include "solver.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "error.h"
#include "simplex_qp.h"

namespace rupert {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Eigen::MatrixXd gradient_matrix(const std::vector<Vec7>& g) {
  Eigen::MatrixXd G(7, static_cast<int>(g.size()));
  for (int t = 0; t < static_cast<int>(g.size()); ++t)
    G.col(t) = Eigen::Map<const Eigen::VectorXd>(g[t].data(), 7);
  return G;
}

Vec7 from_eigen(const Eigen::VectorXd& s) {
  Vec7 v;
  for (int i = 0; i < 7; ++i) v[i] = s(i);
  return v;
}

// Compensated dot product (error-free transforms): the duality-gap check
// compares quantities that agree to ~1e-15 relative, which plain double
// accumulation cannot resolve once delta * gmax reaches O(10).
double dot2(const Eigen::VectorXd& x, const Eigen::VectorXd& y) {
  double s = 0.0, comp = 0.0;
  for (int i = 0; i < x.size(); ++i) {
    const double p = x[i] * y[i];
    const double pe = std::fma(x[i], y[i], -p);
    const double t = s + p;
    const double bb = t - s;
    const double se = (s - (t - bb)) + (p - bb);
    s = t;
    comp += pe + se;
  }
  return s + comp;
}

// Weights summing to 1 that minimize ||B w||, via the KKT system so a
// rank-deficient B still yields a point. Sign constraints are the caller's.
Eigen::VectorXd affine_min_norm_weights(const Eigen::MatrixXd& B) {
  const int m = static_cast<int>(B.cols());
  Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(m + 1, m + 1);
  kkt.topLeftCorner(m, m) = 2.0 * (B.transpose() * B);
  kkt.topRightCorner(m, 1).setOnes();
  kkt.bottomLeftCorner(1, m).setOnes();
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
  rhs(m) = 1.0;
  const Eigen::VectorXd sol = kkt.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(m);
}

}  // namespace

SubproblemResult subproblem(const std::vector<double>& c, const std::vector<Vec7>& g,
                            double delta, double dual_tol) {
  const int T = static_cast<int>(c.size());
  if (T == 0 || g.size() != c.size())
    fail(ErrorCode::kInvalid, "subproblem: model needs matching values and gradients");
  if (!(delta > 0) || !std::isfinite(delta))
    fail(ErrorCode::kInvalid, "subproblem: trust radius must be positive");

  const Eigen::MatrixXd G = gradient_matrix(g);
  const Eigen::VectorXd cv = Eigen::Map<const Eigen::VectorXd>(c.data(), T);
  double gmax = 0.0;
  for (int t = 0; t < T; ++t) gmax = std::max(gmax, G.col(t).norm());

  SubproblemResult out;
  out.lambda.assign(T, 0.0);

  if (gmax == 0.0) {
    // Flat model: every s scores min c, so stay put.
    int t0 = 0;
    for (int t = 1; t < T; ++t)
      if (c[t] < c[t0]) t0 = t;
    out.model_value = c[t0];
    out.lambda[t0] = 1.0;
    return out;
  }
  if (T == 1) {
    out.s = from_eigen((delta / gmax) * G.col(0));
    out.model_value = c[0] + delta * gmax;
    out.lambda[0] = 1.0;
    return out;
  }

  const auto scan = [&](const Eigen::VectorXd& s) {
    double m = kInf;
    for (int t = 0; t < T; ++t) m = std::min(m, c[t] + dot2(G.col(t), s));
    return m;
  };
  // Any simplex point lam bounds the optimum above by c.lam + delta*||G lam||
  // and any feasible s bounds it below by the model scan; accept their meet.
  const auto accept = [&](const Eigen::VectorXd& lam, const Eigen::VectorXd& s) {
    Eigen::VectorXd d(7);
    for (int i = 0; i < 7; ++i) d[i] = dot2(G.row(i).transpose(), lam);
    const double dual = dot2(cv, lam) + delta * std::sqrt(dot2(d, d));
    const double model = scan(s);
    if (dual - model > dual_tol * std::max(1.0, std::abs(dual))) return false;
    out.s = from_eigen(s);
    out.model_value = model;
    for (int t = 0; t < T; ++t) out.lambda[t] = lam(t);
    return true;
  };
  // The boundary step is rebuilt from lam with compensated dots rather than
  // taken from the solver's image: the image accumulates cancellation error
  // that tilts the recovered direction by ~1e-15 relative, which the model
  // scan then sees as a phantom duality gap.
  const auto boundary_from = [&](const Eigen::VectorXd& lam) -> Eigen::VectorXd {
    Eigen::VectorXd d(7);
    for (int i = 0; i < 7; ++i) d[i] = dot2(G.row(i).transpose(), lam);
    const double dn = std::sqrt(dot2(d, d));
    if (dn == 0.0) return Eigen::VectorXd::Zero(7);
    return (delta / dn) * d;
  };
  // Even an exactly rounded lam cannot place s better than ~1e-13 of model
  // value when ||G lam|| is far shorter than the gradients, so polish s with
  // Newton on the tie system: equal term values on the support, norm delta.
  // That system sees the gradients at full scale and stays well conditioned.
  const auto tie_polish = [&](const Eigen::VectorXd& lam,
                              const Eigen::VectorXd& s0) -> Eigen::VectorXd {
    std::vector<int> sup;
    for (int t = 0; t < T; ++t)
      if (lam(t) > 1e-12) sup.push_back(t);
    const int m = static_cast<int>(sup.size());
    if (m == 0) return s0;
    Eigen::VectorXd s = s0;
    double mv = kInf;
    for (int t : sup) mv = std::min(mv, c[t] + dot2(G.col(t), s));
    Eigen::MatrixXd J(m + 1, 8);
    Eigen::VectorXd F(m + 1);
    for (int round = 0; round < 3; ++round) {
      for (int i = 0; i < m; ++i) {
        F(i) = c[sup[i]] + dot2(G.col(sup[i]), s) - mv;
        J.row(i).head(7) = G.col(sup[i]).transpose();
        J(i, 7) = -1.0;
      }
      F(m) = (dot2(s, s) - delta * delta) / (2.0 * delta);
      J.row(m).head(7) = s.transpose() / delta;
      J(m, 7) = 0.0;
      const Eigen::VectorXd dx = J.completeOrthogonalDecomposition().solve(F);
      s -= dx.head(7);
      mv -= dx(7);
    }
    const double sn = std::sqrt(dot2(s, s));
    if (sn > delta) s *= delta / sn;
    return s;
  };
  const auto try_boundary = [&](const Eigen::VectorXd& lam) {
    const Eigen::VectorXd s0 = boundary_from(lam);
    if (accept(lam, s0)) return true;
    return accept(lam, tie_polish(lam, s0));
  };

  // The surrogate min over the simplex of c.lam + sigma*||G lam||^2 solves
  // the trust-region dual for radius 2*sigma*||G lam||, nondecreasing in
  // sigma. sigma0 sits at or below every target radius, so scan up from it
  // and bisect the bracket; warm starts keep each solve near-incremental.
  std::vector<int> warm;
  const auto solve_at = [&](double sigma) {
    SimplexQpResult r = simplex_qp_min(G, cv, sigma, 1e-15, 0, warm.empty() ? nullptr : &warm);
    warm = r.support;
    return r;
  };

  const double sigma0 = delta / (2.0 * gmax);
  const double sigma_cap = std::max(1.0, sigma0) * 1e12;
  const double noise_floor = 2e-13 * gmax;

  double lo = sigma0;
  SimplexQpResult r = solve_at(lo);
  if (try_boundary(r.lambda)) return out;

  double hi = lo;
  bool bracketed = false;
  while (true) {
    const double dn = r.image.norm();
    if (dn <= noise_floor) break;  // pinned at the min-norm point already
    if (2.0 * hi * dn >= delta) { bracketed = true; break; }
    if (hi > sigma_cap) break;
    hi *= 16.0;
    r = solve_at(hi);
    if (try_boundary(r.lambda)) return out;
  }

  if (bracketed) {
    // Bisect sigma to machine resolution: the achievable duality gap scales
    // with the relative sigma error, and dual_tol sits near 1e-14.
    for (int i = 0; i < 300 && hi > lo * (1.0 + 4e-16); ++i) {
      const double mid = std::sqrt(lo * hi);
      SimplexQpResult rm = solve_at(mid);
      if (try_boundary(rm.lambda)) return out;
      if (2.0 * mid * rm.image.norm() >= delta) {
        hi = mid;
        r = rm;
      } else {
        lo = mid;
      }
    }
  }

  // Interior regime: the radius never binds, so the maximizer solves the tie
  // equations (g_t - g_t0).s = c_t0 - c_t on the active support. The
  // surrogate weights at huge sigma identify a candidate support; polish it
  // by alternating the tie solve with the true active set at the solved
  // point, and re-derive weights aiming at G lam = 0 to certify, since the
  // surrogate's own weights carry too much noise in G lam.
  std::vector<int> sup;
  for (int t : r.support)
    if (r.lambda(t) > 1e-12) sup.push_back(t);
  if (sup.empty()) sup = r.support;
  for (int round = 0; round < 8 && !sup.empty(); ++round) {
    const int m = static_cast<int>(sup.size());
    Eigen::VectorXd s = Eigen::VectorXd::Zero(7);
    if (m > 1) {
      Eigen::MatrixXd B(m - 1, 7);
      Eigen::VectorXd rhs(m - 1);
      for (int i = 1; i < m; ++i) {
        B.row(i - 1) = (G.col(sup[i]) - G.col(sup[0])).transpose();
        rhs(i - 1) = c[sup[0]] - c[sup[i]];
      }
      s = B.completeOrthogonalDecomposition().solve(rhs);
    }
    if (s.norm() <= delta * (1.0 + 1e-12)) {
      Eigen::MatrixXd Gs(7, m);
      for (int i = 0; i < m; ++i) Gs.col(i) = G.col(sup[i]);
      const Eigen::VectorXd w = affine_min_norm_weights(Gs);
      if (w.minCoeff() > -1e-9) {
        Eigen::VectorXd lam = Eigen::VectorXd::Zero(T);
        double sum = 0.0;
        for (int i = 0; i < m; ++i) {
          lam(sup[i]) = std::max(w(i), 0.0);
          sum += lam(sup[i]);
        }
        lam /= sum;
        if (accept(lam, s)) return out;
      }
      if (accept(r.lambda, s)) return out;
    }
    // Re-derive the active set at s and go again; stop once it stabilizes.
    double mval = kInf;
    for (int t = 0; t < T; ++t) mval = std::min(mval, c[t] + dot2(G.col(t), s));
    std::vector<int> act;
    const double win = 1e-9 * std::max(1.0, std::abs(mval));
    for (int t = 0; t < T; ++t)
      if (c[t] + dot2(G.col(t), s) <= mval + win) act.push_back(t);
    if (act == sup) break;
    sup = std::move(act);
  }

  fail(ErrorCode::kNonconvergence, "subproblem: duality gap did not close");
}

Iterate step(const Polyhedron& p, const Iterate& it, const SolverConfig& cfg) {
  const TermTable tt = evaluate(p, it.x, cfg.tau_tie);
  std::vector<int> ids;
  for (int t = 0; t < static_cast<int>(tt.terms.size()); ++t)
    if (std::isfinite(tt.terms[t].value) &&
        tt.terms[t].value <= tt.mu * (1.0 + cfg.tau_model))
      ids.push_back(t);
  std::vector<Vec7> g = term_gradients(p, it.x, tt, ids);
  // Near-perpendicular pairs overflow 1/(w.v); they cannot be the min but
  // their gradients would poison the model, so drop them.
  std::vector<double> c;
  c.reserve(ids.size());
  size_t kept = 0;
  for (size_t i = 0; i < ids.size(); ++i) {
    bool finite = true;
    for (double gi : g[i])
      if (!std::isfinite(gi)) finite = false;
    if (!finite) continue;
    g[kept] = g[i];
    c.push_back(tt.terms[ids[i]].value);
    ++kept;
  }
  g.resize(kept);

  const Iterate halved{it.x, it.mu, it.delta / 2.0, it.k + 1};
  SubproblemResult sp;
  try {
    sp = subproblem(c, g, it.delta, cfg.dual_tol);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNonconvergence) return halved;
    throw;
  }
  if (norm(sp.s) == 0.0) return halved;

  double scale = 1.0;
  for (int n = 0; n <= cfg.n_max; ++n, scale /= 2.0) {
    const Passage xn = to_passage(to_vec7(it.x) + scale * sp.s);
    double mu_n;
    try {
      mu_n = evaluate(p, xn, cfg.tau_tie).mu;
    } catch (const Error& e) {
      // A step into an unbounded or degenerate pose is a failed ascent.
      if (e.code() == ErrorCode::kUnbounded || e.code() == ErrorCode::kDegenerate) continue;
      throw;
    }
    if (mu_n >= it.mu) return Iterate{xn, mu_n, 2.0 * scale * it.delta, it.k + 1};
  }
  return halved;
}

RunResult run(const Polyhedron& p, const Passage& x0, const SolverConfig& cfg) {
  const TermTable t0 = evaluate(p, x0, cfg.tau_tie);
  Iterate it{x0, t0.mu, cfg.delta0, 0};
  RunResult res;
  res.status = RunStatus::kConverged;
  int equal_streak = 0;
  while (it.delta >= cfg.delta_min) {
    if (res.iters >= cfg.max_iters) {
      res.status = RunStatus::kBudget;
      break;
    }
    Iterate next = step(p, it, cfg);
    const bool moved = to_vec7(next.x) != to_vec7(it.x);
    if (moved && next.mu == it.mu) {
      // A flat ridge doubles delta on every accepted step; once the plateau
      // is established, contract instead so the run can terminate.
      if (++equal_streak >= 20) next.delta = it.delta / 2.0;
    } else {
      equal_streak = 0;
    }
    it = next;
    ++res.iters;
  }
  res.it = it;
  res.cert = stationarity(p, it.x, cfg.tau_tie);
  return res;
}

Certificate stationarity(const Polyhedron& p, const Passage& x, double tau_tie) {
  const TermTable tt = evaluate(p, x, tau_tie);
  const std::vector<Vec7> g = term_gradients(p, x, tt, tt.active);
  const Eigen::MatrixXd G = gradient_matrix(g);
  const int m = static_cast<int>(g.size());
  const SimplexQpResult r = simplex_qp_min(G, Eigen::VectorXd::Zero(m), 1.0, 1e-14);
  Certificate cert;
  cert.norm = r.image.norm();
  cert.active_count = m;
  cert.lambda.assign(m, 0.0);
  for (int i = 0; i < m; ++i) cert.lambda[i] = r.lambda(i);
  return cert;
}

RunResult simple_ascent(const Polyhedron& p, const Passage& x0, const SolverConfig& cfg) {
  const TermTable t0 = evaluate(p, x0, cfg.tau_tie);
  Iterate it{x0, t0.mu, 0.0, 0};
  RunResult res;
  res.status = RunStatus::kConverged;
  int plateau = 0;
  while (true) {
    if (res.iters >= cfg.max_iters) {
      res.status = RunStatus::kBudget;
      break;
    }
    const TermTable tt = evaluate(p, it.x, cfg.tau_tie);
    const std::vector<Vec7> g = term_gradients(p, it.x, tt, tt.active);
    const Eigen::MatrixXd G = gradient_matrix(g);
    double gmax = 0.0;
    for (int i = 0; i < G.cols(); ++i) gmax = std::max(gmax, G.col(i).norm());
    const SimplexQpResult r =
        simplex_qp_min(G, Eigen::VectorXd::Zero(static_cast<int>(g.size())), 1.0, 1e-14);
    const double cert_norm = r.image.norm();
    if (cert_norm <= std::sqrt(cfg.dual_tol) * std::max(1.0, gmax)) break;
    const Vec7 s = from_eigen(r.image);

    bool accepted = false;
    double scale = 1.0;
    for (int n = 0; n <= cfg.n_max && scale * cert_norm >= cfg.delta_min; ++n, scale /= 2.0) {
      const Passage xn = to_passage(to_vec7(it.x) + scale * s);
      double mu_n;
      try {
        mu_n = evaluate(p, xn, cfg.tau_tie).mu;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kUnbounded || e.code() == ErrorCode::kDegenerate) continue;
        throw;
      }
      if (mu_n >= it.mu) {
        plateau = mu_n > it.mu ? 0 : plateau + 1;
        it = Iterate{xn, mu_n, scale * cert_norm, it.k + 1};
        accepted = true;
        break;
      }
    }
    ++res.iters;
    if (!accepted) break;      // step underflow: no usable ascent left
    if (plateau >= 50) break;  // value pinned; the certificate decides
  }
  res.it = it;
  res.cert = stationarity(p, it.x, cfg.tau_tie);
  return res;
}

}  // namespace rupert
