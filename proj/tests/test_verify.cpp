#include <doctest.h>

#include <cmath>
#include <tuple>

#include "catalog.h"
#include "error.h"
#include "mu.h"
#include "verify.h"

using namespace rupert;

namespace {

// Closed forms recomputed independently at the caller's precision.
BigFloat tetra_constant() { return BigFloat(sqrt(BigFloat(6)) / (1 + sqrt(BigFloat(2)))); }

BigFloat rho_poly(const BigFloat& x) {
  const BigFloat y = x * x;
  return BigFloat((((2025 * y - 11970) * y + 17009) * y - 9000) * y + 2000);
}

}  // namespace

TEST_CASE("the fixed tetrahedra configuration certifies the conjectured constant") {
  const PrecisionContext ctx;
  const Theorem2Result th = verify_theorem2(ctx);
  PrecisionGuard guard(60);
  CHECK(abs(BigFloat(th.mu - tetra_constant())) <= BigFloat("1e-30"));
  // The configuration is exactly tight, so the containment margin sits at
  // zero up to the working tolerance of 50-digit decimal arithmetic.
  CHECK(abs(th.margin) <= BigFloat("1e-45"));
}

TEST_CASE("the passage encoding matches the direct fixed-configuration check") {
  const PrecisionContext ctx;
  const Theorem2Result th = verify_theorem2(ctx);
  const PassageHp x = theorem2_passage(ctx);
  const RecheckResult rc = recheck(builtin("tetrahedron"), x, ctx);
  CHECK(abs(BigFloat(rc.mu - th.mu)) <= BigFloat("1e-42"));
  CHECK(rc.mu_12 == "1.014611872354");
  CHECK(!rc.combinatorics_mismatch);

  // Any nudge off the optimum must strictly lose quality.
  PassageHp nudged = x;
  nudged[0] = nudged[0] + BigFloat(1) / 1000;
  const RecheckResult worse = recheck(builtin("tetrahedron"), nudged, ctx);
  CHECK(worse.mu < rc.mu - BigFloat("1e-9"));
}

TEST_CASE("identity passages certify mu = 1 after flooring") {
  const PrecisionContext ctx;
  for (const char* name : {"cube", "icosahedron"}) {
    CAPTURE(name);
    const RecheckResult rc = recheck(builtin(name), Passage{}, ctx);
    CHECK(rc.mu_12 == "1.000000000000");
    CHECK(abs(BigFloat(rc.mu - 1)) <= BigFloat("1e-45"));
    CHECK(!rc.combinatorics_mismatch);

    BigFloat min_slack(2);
    std::pair<int, int> argmin{-1, -1};
    for (const auto& [i, j, slack] : rc.certificate.slacks) {
      CHECK(slack >= BigFloat("-1e-45"));
      if (slack < min_slack) {
        min_slack = slack;
        argmin = {i, j};
      }
    }
    CHECK(abs(min_slack) <= BigFloat("1e-45"));
    CHECK(argmin == rc.certificate.min_slack_index);
  }
}

TEST_CASE("recheck tracks the double pipeline within its rounding error") {
  const PrecisionContext ctx;
  const Polyhedron octa = builtin("octahedron");
  const Passage probes[] = {{0.03, -0.05, 0.7, 1.3, 0.4, 1.1, 0.9},
                            {-0.02, 0.01, 2.9, 4.4, 5.1, 0.3, 2.2},
                            {0.0, 0.0, 1.0, 0.5, 0.25, 2.0, 1.5}};
  for (const Passage& x : probes) {
    CAPTURE(x.theta_p);
    const TermTable table = evaluate(octa, x);
    const RecheckResult rc = recheck(octa, x, ctx);
    CHECK(abs(BigFloat(rc.mu - table.mu)) <= BigFloat(1e-11) * BigFloat(table.mu));
    CHECK(!rc.combinatorics_mismatch);
    // Flooring never rounds up: the string re-parses to at most mu.
    CHECK(BigFloat(rc.mu_12) <= rc.mu + BigFloat("1e-40"));
  }
}

TEST_CASE("conjecture residuals hit their closed forms") {
  PrecisionGuard guard(50);
  CHECK(check_conjecture_values(BigFloat(3) * sqrt(BigFloat(2)) / 4,
                                ConjectureTarget::kCubeRatio) <= BigFloat("1e-45"));
  CHECK(check_conjecture_values(tetra_constant(), ConjectureTarget::kTetraRatio) <=
        BigFloat("1e-45"));

  // Oracle for the polynomial target: bisect its smallest positive root.
  // The polynomial is positive on (0, 1.005] and changes sign before 1.015.
  BigFloat lo(1), hi("1.015");
  REQUIRE(rho_poly(lo) > 0);
  REQUIRE(rho_poly(hi) < 0);
  for (int i = 0; i < 200; ++i) {
    const BigFloat mid = (lo + hi) / 2;
    if (rho_poly(mid) > 0) lo = mid;
    else hi = mid;
  }
  CHECK(abs(lo - BigFloat("1.010823060752")) <= BigFloat("1e-12"));
  CHECK(check_conjecture_values(lo, ConjectureTarget::kRhoPoly) <= BigFloat("1e-40"));

  // A 14-digit reading of the root leaves a residual bounded by the local
  // derivative times its last-digit uncertainty.
  const BigFloat probe("1.01082306075264");
  const BigFloat dp = abs(((16200 * probe * probe - 71820) * probe * probe + 68036) *
                              probe * probe * probe -
                          18000 * probe);
  CHECK(check_conjecture_values(probe, ConjectureTarget::kRhoPoly) <= dp * BigFloat(1e-11));
}

TEST_CASE("verification validates its inputs") {
  CHECK_THROWS_AS(verify_theorem2(PrecisionContext{20}), Error);
  Passage bad;
  bad.u = std::nan("");
  CHECK_THROWS_AS(recheck(builtin("cube"), bad, PrecisionContext{}), Error);
  CHECK_THROWS_AS(check_conjecture_values(BigFloat(0), ConjectureTarget::kCubeRatio),
                  Error);
  Polyhedron stripped = builtin("cube");
  stripped.vertex_strings.clear();
  CHECK_THROWS_AS(recheck(stripped, Passage{}, PrecisionContext{}), Error);
}
