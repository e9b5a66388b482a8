// The passage-quality objective: mu(x) = min over (inner vertex i, outer
// silhouette face j) of 1/(w_j . v_i), restricted to pairs with positive
// inner product. mu(x) > 1 witnesses a passage with clearance 1/mu.
#pragma once

#include <vector>

#include "projection.h"

namespace rupert {

struct MuTerm {
  int i, j;      // inner vertex index, outer face index
  double value;  // 1 / (w_j . v_i)
};

struct TermTable {
  PlanarPolygon outer;        // silhouette at pose (theta_q, phi_q)
  std::vector<Vec2> inner;    // transformed inner vertices, catalog order
  std::vector<MuTerm> terms;  // every pair with w_j . v_i > 0
  double mu = 0;
  int argmin = -1;            // index into terms
  std::vector<int> active;    // term indices with value <= mu * (1 + tau_tie)
};

// Throws Error(kUnbounded) when no pair has a positive inner product: the
// objective is infinite there and carries no ordering information.
TermTable evaluate(const Polyhedron& p, const Passage& x, double tau_tie = 1e-9);

// Gradient of term `term_index` of `table` in the 7 passage parameters,
// holding the face's defining vertex pair fixed.
Vec7 term_gradient(const Polyhedron& p, const Passage& x, const TermTable& table,
                   int term_index);

// Same, naming the term by (inner vertex i, outer face j) at a fresh table.
Vec7 term_gradient(const Polyhedron& p, const Passage& x, int i, int j,
                   double tau_tie = 1e-9);

// Batched gradients sharing the per-pose work across terms.
std::vector<Vec7> term_gradients(const Polyhedron& p, const Passage& x,
                                 const TermTable& table,
                                 const std::vector<int>& term_indices);

// Directional derivative mu'(x; d) = min over active terms of grad . d.
double directional_derivative(const Polyhedron& p, const Passage& x, const Vec7& d,
                              double tau_tie = 1e-9);

}  // namespace rupert
