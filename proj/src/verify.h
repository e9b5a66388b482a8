// Multiprecision recertification: re-run the silhouette and the objective
// from the decimal vertex strings at a chosen digit count, certify the slack
// signs, and check the fixed two-tetrahedra construction and the catalog
// constants against their closed forms.
#pragma once

#include <array>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bigfloat.h"
#include "mu.h"

namespace rupert {

struct PrecisionContext {
  int digits = 50;  // significant decimal digits; at least 30
};

// Nonnegativity of every 1 - mu * (w_j . v_i) at the certified mu, with the
// tight pair singled out. Pairs with a nonpositive inner product carry slack
// above 1 and are listed for completeness.
struct SlackCertificate {
  BigFloat mu;
  std::vector<std::tuple<int, int, BigFloat>> slacks;  // (inner i, face j, slack)
  std::pair<int, int> min_slack_index{-1, -1};
};

struct RecheckResult {
  BigFloat mu;           // recomputed at ctx.digits
  std::string mu_12;     // truncated to 12 fractional digits
  SlackCertificate certificate;
  // The multiprecision silhouette hull disagrees with the double one. The
  // result stands either way; it is recomputed from scratch.
  bool combinatorics_mismatch = false;
};

// Passage coordinates at verification precision, component order as Vec7.
using PassageHp = std::array<BigFloat, 7>;

PassageHp promote(const Passage& x);

// Re-runs the whole objective at ctx.digits from p's vertex strings,
// recentred at that precision. Hull comparisons use tolerance
// 10^(5 - digits). Throws like evaluate() on degenerate input.
RecheckResult recheck(const Polyhedron& p, const Passage& x, const PrecisionContext& ctx);
RecheckResult recheck(const Polyhedron& p, const PassageHp& x, const PrecisionContext& ctx);

struct Theorem2Result {
  BigFloat mu;      // maximal scale fitting the fixed configuration
  BigFloat margin;  // min boundary slack of the sqrt(6)/(1+sqrt(2))-scaled points
};

// The fixed pair of regular tetrahedra with edge length sqrt(3): the second
// one's shadow, scaled by sqrt(6)/(1+sqrt(2)), sits inside the first one's.
// Throws kDegenerate if a scaled point escapes by more than 10^(5 - digits).
Theorem2Result verify_theorem2(const PrecisionContext& ctx);

// The same configuration encoded as a passage for the catalog tetrahedron,
// derived at precision, so the two code paths can be compared.
PassageHp theorem2_passage(const PrecisionContext& ctx);

enum class ConjectureTarget { kTetraRatio, kCubeRatio, kRhoPoly };

// Residual of mu against the closed-form targets: |mu - sqrt(6)/(1+sqrt(2))|,
// |mu - 3 sqrt(2)/4|, or |p(mu)| for the degree-8 polynomial
// 2025 x^8 - 11970 x^6 + 17009 x^4 - 9000 x^2 + 2000.
BigFloat check_conjecture_values(const BigFloat& mu, ConjectureTarget target);

}  // namespace rupert
