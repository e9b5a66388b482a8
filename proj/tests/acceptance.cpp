// Desk-scale acceptance harness. Each numbered criterion prints exactly one
// line, [PASS]/[FAIL]/[INCONCLUSIVE], with its measured quantities; the exit
// code is the number of failures. Seeds and trial budgets are fixed so every
// run replays exactly; tolerances are pinned next to each check.
//
// Full-table reproduction runs at 48-180 hour budgets and is out of scope
// here; SearchConfig::trials/seconds accept such budgets unchanged. The
// truncated-tetrahedron smoke run in criterion 10 stands in for that family.
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bigfloat.h"
#include "catalog.h"
#include "error.h"
#include "mu.h"
#include "oracles.h"
#include "search.h"
#include "solver.h"
#include "verify.h"

using namespace rupert;

namespace {

int g_failures = 0;

void report(bool pass, const char* fmt, ...) {
  std::printf("%s ", pass ? "[PASS]" : "[FAIL]");
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void report_inconclusive(const char* fmt, ...) {
  std::printf("[INCONCLUSIVE] ");
  va_list args;
  va_start(args, fmt);
  std::vprintf(fmt, args);
  va_end(args);
  std::printf("\n");
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BigFloat tetra_target() {
  return BigFloat(sqrt(BigFloat(6)) / (1 + sqrt(BigFloat(2))));
}

BigFloat cube_target() { return BigFloat(3 * sqrt(BigFloat(2)) / 4); }

BestRecord search_solid(const char* name, std::uint64_t seed, int trials) {
  const Polyhedron p = builtin(name);
  SearchConfig cfg;
  cfg.seed = seed;
  cfg.trials = trials;
  return run_search(p, cfg);
}

// 1. Tetrahedron: a fixed 200-trial search (seed 7) reaches the conjectured
//    constant, and the 50-digit recheck agrees with sqrt(6)/(1+sqrt(2)) to
//    5e-10.
void criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  const BestRecord best = search_solid("tetrahedron", 7, 200);
  const Polyhedron p = builtin("tetrahedron");
  const RecheckResult rc = recheck(p, to_passage(best.x), PrecisionContext{50});
  PrecisionGuard guard(60);
  const double gap = static_cast<double>(BigFloat(abs(rc.mu - tetra_target())));
  const bool pass = best.mu_double >= 1.014611872 && gap <= 5e-10;
  report(pass,
         "1. tetrahedron search: mu = %.14f, certified gap to sqrt(6)/(1+sqrt(2)) "
         "= %.2e (seed 7, %d trials, %.1f s)",
         best.mu_double, gap, best.trials, seconds_since(t0));
}

// 2. Cube and octahedron both certify within 1e-9 of 3*sqrt(2)/4 and print
//    the same floor-12 string.
void criterion_2() {
  const auto t0 = std::chrono::steady_clock::now();
  const BestRecord cube = search_solid("cube", 1, 60);
  const BestRecord octa = search_solid("octahedron", 1, 20);
  const RecheckResult rc_cube =
      recheck(builtin("cube"), to_passage(cube.x), PrecisionContext{50});
  const RecheckResult rc_octa =
      recheck(builtin("octahedron"), to_passage(octa.x), PrecisionContext{50});
  PrecisionGuard guard(60);
  const double gap_cube = static_cast<double>(BigFloat(abs(rc_cube.mu - cube_target())));
  const double gap_octa = static_cast<double>(BigFloat(abs(rc_octa.mu - cube_target())));
  const bool pass =
      gap_cube <= 1e-9 && gap_octa <= 1e-9 && rc_cube.mu_12 == rc_octa.mu_12;
  report(pass,
         "2. cube/octahedron share 3*sqrt(2)/4: gaps %.2e / %.2e, floor-12 "
         "strings %s / %s (%.1f s)",
         gap_cube, gap_octa, rc_cube.mu_12.c_str(), rc_octa.mu_12.c_str(),
         seconds_since(t0));
}

// 3. The fixed two-tetrahedra configuration certifies at 50 digits in under
//    a second: nonnegative margin at the working tolerance 10^(5-50) (exact
//    zero dithers by ~1e-51 from decimal-seeded vertices) and a mu matching
//    the closed form to 1e-30.
void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const Theorem2Result r = verify_theorem2(PrecisionContext{50});
  const double elapsed = seconds_since(t0);
  PrecisionGuard guard(60);
  const double margin = static_cast<double>(r.margin);
  const double gap = static_cast<double>(BigFloat(abs(r.mu - tetra_target())));
  const bool pass = margin >= -1e-45 && gap <= 1e-30 && elapsed < 1.0;
  report(pass,
         "3. fixed-configuration certificate: margin %.2e, gap to closed form "
         "%.2e, %.3f s",
         margin, gap, elapsed);
}

// 4. Icosahedron and dodecahedron reach the rho-polynomial root at desk
//    scale when the basin is hit; a miss is inconclusive, not failed.
void criterion_4() {
  struct Plan {
    const char* name;
    std::uint64_t seed;
    int trials;
  };
  for (const Plan plan : {Plan{"icosahedron", 11, 210}, Plan{"dodecahedron", 11, 70}}) {
    const auto t0 = std::chrono::steady_clock::now();
    const BestRecord best = search_solid(plan.name, plan.seed, plan.trials);
    if (best.mu_double < 1.0108230) {
      report_inconclusive(
          "4. %s reached only mu = %.14f in %d trials (%.1f s); basin not hit",
          plan.name, best.mu_double, best.trials, seconds_since(t0));
      continue;
    }
    const RecheckResult rc =
        recheck(builtin(plan.name), to_passage(best.x), PrecisionContext{50});
    const double residual = static_cast<double>(
        check_conjecture_values(rc.mu, ConjectureTarget::kRhoPoly));
    // |p'(rho)| ~ 6.25e3; the search lands within ~1e-10 of the root.
    const bool pass = residual <= 6.25e3 * 1e-10;
    report(pass,
           "4. %s: mu = %.14f, rho-polynomial residual %.2e (seed %llu, %d "
           "trials, %.1f s)",
           plan.name, best.mu_double, residual,
           static_cast<unsigned long long>(plan.seed), best.trials,
           seconds_since(t0));
  }
}

// 5. The closed-form objective matches the containment-bisection oracle to
//    1e-12 relative on 1000 random passages in under two minutes.
void criterion_5() {
  const auto t0 = std::chrono::steady_clock::now();
  const char* names[] = {"tetrahedron", "cube", "octahedron", "icosahedron"};
  std::vector<Polyhedron> solids;
  for (const char* name : names) solids.push_back(builtin(name));
  double worst = 0;
  int compared = 0;
  for (std::uint64_t draw = 0; compared < 1000; ++draw) {
    const Polyhedron& p = solids[draw % 4];
    TrialRng rng(31, draw);
    const Passage x = sample_init(rng);
    double mu;
    try {
      mu = evaluate(p, x).mu;
    } catch (const Error&) {
      continue;  // unbounded or degenerate draw: the oracle has no value either
    }
    const double ref = oracle::mu_by_containment(p.vertices, x);
    const double rel = std::abs(mu - ref) / std::max(1.0, std::abs(ref));
    worst = std::max(worst, rel);
    ++compared;
  }
  const double elapsed = seconds_since(t0);
  const bool pass = worst <= 1e-12 && elapsed < 120.0;
  report(pass, "5. objective vs containment oracle: worst relative gap %.2e over "
               "%d passages (%.1f s)",
         worst, compared, elapsed);
}

// 6. 500 term gradients match central finite differences to 1e-6 relative;
//    200 directional derivatives match one-sided extrapolation to 1e-4.
void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  const char* names[] = {"tetrahedron", "cube", "octahedron", "icosahedron"};
  double worst_grad = 0, worst_dir = 0;
  int grads = 0, dirs = 0;
  std::uint64_t draw = 0;
  while ((grads < 500 || dirs < 200) && draw < 40000) {
    const Polyhedron p = builtin(names[draw % 4]);
    TrialRng rng(33, draw++);
    const Passage x = sample_init(rng);
    TermTable tt;
    try {
      tt = evaluate(p, x);
    } catch (const Error&) {
      continue;
    }
    if (grads < 500) {
      const int pick = static_cast<int>(rng.next() % tt.terms.size());
      const MuTerm& term = tt.terms[pick];
      // the FD stencil is only trustworthy away from vanishing inner products
      if (term.value <= 10.0 * tt.mu) {
        const Vec7 grad = term_gradient(p, x, tt, pick);
        const auto fd = oracle::term_gradient_fd(p, x, term.i, tt.outer.faces[term.j].a,
                                                 tt.outer.faces[term.j].b);
        if (fd) {
          worst_grad = std::max(worst_grad,
                                norm(grad - *fd) / std::max(1.0, norm(grad)));
          ++grads;
        }
      }
    }
    if (dirs < 200) {
      Vec7 d{};
      for (int i = 0; i < 7; ++i) d[i] = rng.uniform(-1.0, 1.0);
      const double dn = norm(d);
      if (dn == 0) continue;
      d = (1.0 / dn) * d;
      const auto fd = oracle::directional_derivative_fd(p, x, d);
      if (!fd) continue;  // kink inside the stencil: no clean limit
      const double dd = directional_derivative(p, x, d);
      worst_dir = std::max(worst_dir, std::abs(dd - *fd) / std::max(1.0, std::abs(dd)));
      ++dirs;
    }
  }
  const bool pass = grads >= 500 && dirs >= 200 && worst_grad <= 1e-6 && worst_dir <= 1e-4;
  report(pass,
         "6. gradients: %d term gradients worst rel %.2e (tol 1e-6), %d "
         "directional worst rel %.2e (tol 1e-4) (%.1f s)",
         grads, worst_grad, dirs, worst_dir, seconds_since(t0));
}

// 7. On 200 random instances the subproblem's primal and dual values bracket
//    within 1e-10 relative and the step stays inside the ball.
void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst_gap = 0, worst_overshoot = 0;
  int failures = 0;
  for (int k = 0; k < 200; ++k) {
    const int kind = k % 4;
    const int terms = 1 + static_cast<int>(rng() % 30);
    std::vector<double> c(terms);
    std::vector<Vec7> g(terms);
    for (int t = 0; t < terms; ++t) {
      c[t] = 1 + 0.3 * std::abs(normal(rng));
      for (int i = 0; i < 7; ++i) g[t][i] = normal(rng);
      if (kind == 2)
        for (int i = 3; i < 7; ++i) g[t][i] = 0;  // low-dimensional span
    }
    if (kind == 3 && terms > 1) g[terms - 1] = g[0];  // duplicated gradient
    const double delta = std::pow(10.0, -3 + 4 * unif(rng));
    SubproblemResult r;
    try {
      r = subproblem(c, g, delta);
    } catch (const Error&) {
      ++failures;
      continue;
    }
    double primal = c[0] + dot(g[0], r.s);
    for (int t = 1; t < terms; ++t)
      primal = std::min(primal, c[t] + dot(g[t], r.s));
    Vec7 gl{};
    double lsum = 0, lmin = 0;
    for (int t = 0; t < terms; ++t) {
      gl = gl + r.lambda[t] * g[t];
      lsum += r.lambda[t];
      lmin = std::min(lmin, r.lambda[t]);
    }
    double cdot = 0;
    for (int t = 0; t < terms; ++t) cdot += c[t] * r.lambda[t];
    const double dual = cdot + delta * norm(gl);
    const double scale = std::max(1.0, std::abs(dual));
    if (dual < primal - 1e-12 * scale || std::abs(lsum - 1) > 1e-8 || lmin < -1e-12)
      ++failures;
    worst_gap = std::max(worst_gap, (dual - primal) / scale);
    worst_overshoot = std::max(worst_overshoot, norm(r.s) / delta - 1);
  }
  const bool pass = failures == 0 && worst_gap <= 1e-10 && worst_overshoot <= 1e-12;
  report(pass,
         "7. subproblem duality: worst relative gap %.2e (tol 1e-10), worst "
         "radius overshoot %.2e, %d hard failures over 200 instances (%.1f s)",
         worst_gap, worst_overshoot, failures, seconds_since(t0));
}

// 8. 100 random runs ascend monotonically and stop with either a radius
//    below 1e-12 or an explicit iteration budget.
void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  const char* names[] = {"tetrahedron", "cube", "octahedron", "icosahedron",
                         "dodecahedron"};
  SolverConfig cfg;
  const int iter_cap = 1500;
  int converged = 0, budget = 0, violations = 0;
  for (int run = 0; run < 100; ++run) {
    const Polyhedron p = builtin(names[run % 5]);
    Iterate it;
    for (std::uint64_t attempt = 0;; ++attempt) {
      TrialRng rng(37, run * 100 + attempt);
      it.x = sample_init(rng);
      try {
        it.mu = evaluate(p, it.x).mu;
        break;
      } catch (const Error&) {
      }
    }
    it.delta = cfg.delta0;
    int iters = 0;
    while (it.delta >= cfg.delta_min && iters < iter_cap) {
      const Iterate next = step(p, it, cfg);
      if (next.mu < it.mu) ++violations;
      it = next;
      ++iters;
    }
    if (it.delta < cfg.delta_min)
      ++converged;
    else
      ++budget;
  }
  const bool pass = violations == 0 && converged + budget == 100;
  report(pass,
         "8. monotone termination: %d converged (delta < 1e-12), %d budget, "
         "%d monotonicity violations over 100 runs (%.1f s)",
         converged, budget, violations, seconds_since(t0));
}

// 9. Converged Platonic runs sit at genuinely nonsmooth balances: the
//    min-norm certificate is tiny while individual active gradients stay
//    three orders of magnitude larger.
void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  const char* names[] = {"tetrahedron", "cube", "octahedron", "icosahedron",
                         "dodecahedron"};
  double worst_norm = 0, worst_ratio = std::numeric_limits<double>::infinity();
  bool pass = true;
  for (const char* name : names) {
    const BestRecord best = search_solid(name, 41, 5);
    const Polyhedron p = builtin(name);
    const Passage x = to_passage(best.x);
    const Certificate cert = stationarity(p, x);
    const TermTable tt = evaluate(p, x);
    const std::vector<Vec7> grads = term_gradients(p, x, tt, tt.active);
    double gmax = 0;
    for (const Vec7& g : grads) gmax = std::max(gmax, norm(g));
    worst_norm = std::max(worst_norm, cert.norm);
    const double ratio = cert.norm > 0 ? gmax / cert.norm
                                       : std::numeric_limits<double>::infinity();
    worst_ratio = std::min(worst_ratio, ratio);
    if (cert.norm > 1e-6 || gmax < 1e3 * cert.norm) pass = false;
  }
  report(pass,
         "9. stationarity certificates: worst norm %.2e (tol 1e-6), smallest "
         "active-gradient ratio %.1e (floor 1e3) across 5 Platonic solids (%.1f s)",
         worst_norm, worst_ratio, seconds_since(t0));
}

// 10. Archimedean smoke run: the truncated tetrahedron passes mu > 1.014
//     within a fixed 40-trial budget, heading for the published
//     1.014255711995.
void criterion_10() {
  const auto t0 = std::chrono::steady_clock::now();
  const BestRecord best = search_solid("truncated_tetrahedron", 3, 40);
  const bool pass = best.mu_double > 1.014;
  report(pass,
         "10. truncated tetrahedron smoke: mu = %.14f vs published "
         "1.014255711995 (seed 3, %d trials, %.1f s)",
         best.mu_double, best.trials, seconds_since(t0));
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  const auto run = [&](int n, void (*fn)()) {
    if (wanted.empty() || wanted.count(n)) fn();
  };
  run(1, criterion_1);
  run(2, criterion_2);
  run(3, criterion_3);
  run(4, criterion_4);
  run(5, criterion_5);
  run(6, criterion_6);
  run(7, criterion_7);
  run(8, criterion_8);
  run(9, criterion_9);
  run(10, criterion_10);
  if (g_failures > 0) std::printf("%d criterion failure(s)\n", g_failures);
  return g_failures;
}
