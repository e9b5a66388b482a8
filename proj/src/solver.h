// Nonsmooth trust-region ascent on mu. Each step maximizes the piecewise-
// linear model min_t(c_t + g_t.s) over ||s|| <= delta through its dual
// min over simplex lambda of [c.lambda + delta*||G lambda||], backtracks the
// step until mu does not decrease, and doubles or halves delta accordingly.
// Stationarity certificates come from the min-norm point over active-term
// gradients.
#pragma once

#include <limits>
#include <vector>

#include "mu.h"

namespace rupert {

struct SolverConfig {
  double delta0 = 0.1;
  double delta_min = 1e-12;
  int n_max = 50;           // backtracking cap: steps below 2^-50 are noise
  double dual_tol = 1e-14;  // relative subproblem duality-gap tolerance
  int max_iters = 20000;
  double tau_tie = 1e-9;
  // Term-inclusion window for the model: keep values <= mu*(1 + tau_model).
  // The default includes every term.
  double tau_model = std::numeric_limits<double>::infinity();
};

struct Iterate {
  Passage x;
  double mu = 0;
  double delta = 0;
  int k = 0;
};

struct Certificate {
  double norm = 0;             // ||sum lambda_t grad_t|| at the min-norm point
  std::vector<double> lambda;  // simplex weights on the active terms, in order
  int active_count = 0;
};

struct SubproblemResult {
  Vec7 s{};
  double model_value = 0;
  std::vector<double> lambda;  // over the input terms, zero off support
};

// Maximizes min_t(c[t] + g[t].s) over ||s|| <= delta to relative duality gap
// dual_tol. Throws Error(kNonconvergence) if the gap tolerance cannot be
// reached; callers halve delta and retry.
SubproblemResult subproblem(const std::vector<double>& c, const std::vector<Vec7>& g,
                            double delta, double dual_tol = 1e-14);

// One trust-region step with 2^-n backtracking. A step into an evaluation
// failure (infinite mu, degenerate silhouette) counts as failed ascent.
Iterate step(const Polyhedron& p, const Iterate& it, const SolverConfig& cfg);

enum class RunStatus { kConverged, kBudget };

struct RunResult {
  Iterate it;
  Certificate cert;
  RunStatus status = RunStatus::kConverged;
  int iters = 0;
};

// Iterates step until delta < delta_min (converged) or max_iters (budget).
RunResult run(const Polyhedron& p, const Passage& x0, const SolverConfig& cfg);

// Min-norm point over the active-term gradients at x.
Certificate stationarity(const Polyhedron& p, const Passage& x, double tau_tie = 1e-9);

// Steepest-ascent baseline: steps along sum lambda_t grad_t from the
// stationarity certificate with the same backtracking rule. Stops when the
// certificate norm or the step size underflows.
RunResult simple_ascent(const Polyhedron& p, const Passage& x0, const SolverConfig& cfg);

}  // namespace rupert
