#include "simplex_qp.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>

namespace rupert {
namespace {

constexpr double kNegTol = 1e-14;   // restricted solutions this negative trigger a drop step
constexpr double kDropTol = 1e-14;  // support weights below this are treated as zero
constexpr double kNullTol = 1e-12;  // eigenvalue cutoff for the flat subspace, relative
constexpr double kTiltTol = 1e-13;  // linear slope along a flat direction that counts as real

// Restricted problem on the support S: minimize beta c_S.y + ||G_S y||^2 over
// sum(y) = 1. Solved exactly in the reduced space orthogonal to the ones
// vector via an eigendecomposition, so rank-deficient supports (duplicated or
// linearly dependent gradients) are handled: a flat direction with a real
// linear tilt makes the face unbounded and comes back as a descent ray.
struct RestrictedPoint {
  Eigen::VectorXd y;    // stationary point when bounded
  Eigen::VectorXd ray;  // descent direction when unbounded: sum 0, c.ray < 0
  bool unbounded = false;
};

RestrictedPoint restricted_solve(const Eigen::MatrixXd& G, const Eigen::VectorXd& c,
                                 double beta, const std::vector<int>& S) {
  const int k = static_cast<int>(S.size());
  RestrictedPoint out;
  if (k == 1) {
    out.y = Eigen::VectorXd::Ones(1);
    return out;
  }
  Eigen::MatrixXd GS(G.rows(), k);
  Eigen::VectorXd cS(k);
  for (int i = 0; i < k; ++i) {
    GS.col(i) = G.col(S[i]);
    cS[i] = c[S[i]];
  }
  Eigen::MatrixXd A = GS.transpose() * GS;
  double a = A.cwiseAbs().maxCoeff();
  if (!(a > 0.0) || !std::isfinite(a)) a = 1.0;

  // Basis N of the sum-zero subspace from the QR of the ones vector.
  Eigen::MatrixXd ones = Eigen::MatrixXd::Ones(k, 1);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones);
  const Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd N = Q.rightCols(k - 1);

  const Eigen::MatrixXd H = N.transpose() * (A / a) * N;
  const Eigen::VectorXd lam_bar = Eigen::VectorXd::Constant(k, 1.0 / k);
  const Eigen::VectorXd b = N.transpose() * ((A / a) * lam_bar + (beta / a) * cS);
  const Eigen::VectorXd tilt = N.transpose() * cS;  // sigma-free unboundedness test

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(H);
  const Eigen::VectorXd& evs = eig.eigenvalues();
  const Eigen::MatrixXd& V = eig.eigenvectors();
  const double ev_max = std::max(evs.cwiseAbs().maxCoeff(), 1.0 / k);
  const double ev_cut = kNullTol * ev_max;
  const double tilt_cut = kTiltTol * std::max(1.0, cS.cwiseAbs().maxCoeff());

  Eigen::VectorXd w = Eigen::VectorXd::Zero(k - 1);
  for (int i = 0; i < k - 1; ++i) {
    const double bi = V.col(i).dot(b);
    if (evs[i] > ev_cut) {
      w -= (bi / evs[i]) * V.col(i);
    } else if (std::abs(V.col(i).dot(tilt)) > tilt_cut) {
      out.unbounded = true;
      Eigen::VectorXd u = N * V.col(i);
      if (tilt.dot(V.col(i)) > 0.0) u = -u;
      out.ray = u;
      return out;
    }
    // flat and untilted: leave the component at zero (minimum-norm choice)
  }
  out.y = lam_bar + N * w;
  return out;
}

}  // namespace

SimplexQpResult simplex_qp_min(const Eigen::MatrixXd& G, const Eigen::VectorXd& c,
                               double sigma, double rel_tol, int max_iters,
                               const std::vector<int>* warm_support) {
  const int T = static_cast<int>(G.cols());
  SimplexQpResult res;
  res.lambda = Eigen::VectorXd::Zero(T);
  res.image = Eigen::VectorXd::Zero(G.rows());
  if (T == 0) {
    res.converged = true;
    return res;
  }

  if (sigma <= 0.0) {  // quadratic term absent: the minimum sits on a vertex
    int t0 = 0;
    c.minCoeff(&t0);
    res.lambda[t0] = 1.0;
    res.image = G.col(t0);
    res.value = c[t0];
    res.support = {t0};
    res.converged = true;
    return res;
  }

  const double beta = 0.5 / sigma;
  if (max_iters <= 0) max_iters = 100 + 4 * T;

  std::vector<int> S;
  if (warm_support != nullptr) {
    for (int t : *warm_support) {
      if (t >= 0 && t < T) S.push_back(t);
    }
    std::sort(S.begin(), S.end());
    S.erase(std::unique(S.begin(), S.end()), S.end());
  }
  if (S.empty()) {
    int t0 = 0;
    double best = std::numeric_limits<double>::infinity();
    for (int t = 0; t < T; ++t) {
      const double v = beta * c[t] + G.col(t).squaredNorm();
      if (v < best) {
        best = v;
        t0 = t;
      }
    }
    S.push_back(t0);
  }
  Eigen::VectorXd lam = Eigen::VectorXd::Constant(S.size(), 1.0 / S.size());

  // Walk from lam toward target until the first coordinate vanishes, then
  // drop every vanished index from the support.
  const auto walk_and_drop = [&](const Eigen::VectorXd& target, bool is_ray) {
    double gamma = is_ray ? std::numeric_limits<double>::infinity() : 1.0;
    for (int i = 0; i < static_cast<int>(S.size()); ++i) {
      const double step = is_ray ? target[i] : target[i] - lam[i];
      if (step < 0.0) gamma = std::min(gamma, lam[i] / -step);
    }
    if (!std::isfinite(gamma)) gamma = 1.0;  // a sum-zero ray must hit a wall
    lam += gamma * (is_ray ? target : (target - lam).eval());

    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(S.size()); ++i) {
      if (lam[i] > kDropTol) keep.push_back(i);
    }
    if (keep.empty()) {  // numerical collapse; restart from the best survivor
      int imax = 0;
      lam.maxCoeff(&imax);
      keep.push_back(imax);
    }
    std::vector<int> S2;
    Eigen::VectorXd lam2(keep.size());
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
      S2.push_back(S[keep[i]]);
      lam2[i] = lam[keep[i]];
    }
    S = std::move(S2);
    lam = lam2 / lam2.sum();
  };

  int iter = 0;
  for (; iter < max_iters; ++iter) {
    const RestrictedPoint rp = restricted_solve(G, c, beta, S);
    if (rp.unbounded) {
      walk_and_drop(rp.ray, true);
      continue;
    }
    const Eigen::VectorXd& y = rp.y;

    if (y.minCoeff() >= -kNegTol) {
      lam = y.cwiseMax(0.0);
      lam /= lam.sum();

      Eigen::VectorXd d = Eigen::VectorXd::Zero(G.rows());
      double cdot = 0.0;
      for (int i = 0; i < static_cast<int>(S.size()); ++i) {
        d += lam[i] * G.col(S[i]);
        cdot += lam[i] * c[S[i]];
      }
      // Scaled gradient (true gradient / 2 sigma): beta c_t + g_t . d.
      double grad_min = std::numeric_limits<double>::infinity();
      int t_min = -1;
      for (int t = 0; t < T; ++t) {
        const double g = beta * c[t] + G.col(t).dot(d);
        if (g < grad_min) {
          grad_min = g;
          t_min = t;
        }
      }
      const double grad_on_support = beta * cdot + d.squaredNorm();
      const double gap = 2.0 * sigma * (grad_on_support - grad_min);
      const double value = cdot + sigma * d.squaredNorm();

      // An argmin already in the support means we sit at the restricted
      // optimum and any leftover gap is roundoff, so both cases converge.
      // Non-finite scores (poisoned inputs) stop here too rather than
      // pushing a bogus index onto the support.
      const bool stuck = t_min < 0 || !std::isfinite(gap);
      if (stuck || gap <= rel_tol * std::max(1.0, std::abs(value)) ||
          std::find(S.begin(), S.end(), t_min) != S.end()) {
        res.value = value;
        res.image = d;
        res.gap = stuck ? std::numeric_limits<double>::infinity() : std::max(gap, 0.0);
        res.converged = !stuck;
        break;
      }
      S.push_back(t_min);
      lam.conservativeResize(S.size());
      lam[S.size() - 1] = 0.0;
    } else {
      walk_and_drop(y, false);
    }
  }
  res.iterations = iter;

  for (int i = 0; i < static_cast<int>(S.size()); ++i) {
    if (lam[i] > 0.0) {
      res.lambda[S[i]] = lam[i];
      res.support.push_back(S[i]);
    }
  }
  std::sort(res.support.begin(), res.support.end());

  if (iter >= max_iters) {
    // Loop exhausted without passing the gap test; report the last point.
    Eigen::VectorXd d = Eigen::VectorXd::Zero(G.rows());
    double cdot = 0.0;
    for (int i = 0; i < static_cast<int>(S.size()); ++i) {
      d += lam[i] * G.col(S[i]);
      cdot += lam[i] * c[S[i]];
    }
    res.image = d;
    res.value = cdot + sigma * d.squaredNorm();
    res.gap = std::numeric_limits<double>::infinity();
    res.converged = false;
  }
  return res;
}

}  // namespace rupert
