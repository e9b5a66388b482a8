// Reference answers recomputed along routes disjoint from the library's own
// closed forms: containment bisection for the objective, finite differences
// for gradients, and random-direction search for the trust-region model.
// Deliberately slow and simple; generic (randomly perturbed) inputs only.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catalog.h"
#include "mu.h"

namespace rupert::oracle {

// Largest m such that every m-scaled transformed inner vertex lies inside the
// convex hull of the projected outer vertices, by bisection over brute-force
// O(k^3) supporting-edge tests. Returns +infinity when every scale fits.
double mu_by_containment(const std::vector<Vec3>& vertices, const Passage& x,
                         int bisections = 60);

// Central finite difference of the term value 1/(w . v_i) for the silhouette
// face generated by the 3D vertex pair (edge_a, edge_b), holding that pair
// fixed across the stencil. nullopt when the pair leaves the silhouette.
std::optional<Vec7> term_gradient_fd(const Polyhedron& p, const Passage& x,
                                     int inner_index, int edge_a, int edge_b,
                                     double h = 1e-5);

// One-sided slope of t -> mu(x + t d), Richardson-extrapolated from steps
// t, t/10, t/100. nullopt when the two extrapolants disagree by more than
// agree_tol relative (a kink inside the stencil, so no clean limit).
std::optional<double> directional_derivative_fd(const Polyhedron& p, const Passage& x,
                                                const Vec7& d, double t = 1e-4,
                                                double agree_tol = 1e-5);

// Lower bound on max over ||s|| <= delta of min_t(c_t + g_t . s) by
// hierarchical random-direction search in the span of the gradients with an
// exact 1D maximization along each direction.
double subproblem_lower_bound(const std::vector<double>& c, const std::vector<Vec7>& g,
                              double delta, std::uint64_t seed, int rounds = 14,
                              int directions_per_round = 120);

}  // namespace rupert::oracle
