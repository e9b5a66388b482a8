// C interface to the passage-search library. Handles are opaque, every call
// returns a status, and rupert_last_error() carries the failing call's
// message for the current thread. Passage coordinates are always the array
// (u, v, theta_p, phi_p, alpha, theta_q, phi_q).
#ifndef RUPERT_RUPERT_H_
#define RUPERT_RUPERT_H_

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rupert_status {
  RUPERT_OK = 0,
  RUPERT_ERR_UNKNOWN_NAME = 1,
  RUPERT_ERR_PARSE = 2,
  RUPERT_ERR_DEGENERATE = 3,
  RUPERT_ERR_UNBOUNDED = 4,
  RUPERT_ERR_NONCONVERGENCE = 5,
  RUPERT_ERR_BUDGET = 6,
  RUPERT_ERR_IO = 7,
  RUPERT_ERR_INVALID = 8,
  RUPERT_ERR_INTERNAL = 9
} rupert_status;

// Message from the last failing call on this thread; "" after a success.
const char* rupert_last_error(void);

// --- Polyhedra -------------------------------------------------------------

typedef struct rupert_polyhedron rupert_polyhedron;

int rupert_catalog_count(void);
// Catalog identifier at index, or NULL when out of range. Storage is static.
const char* rupert_catalog_name(int index);

rupert_status rupert_builtin(const char* name, rupert_polyhedron** out);
// Loads an OFF or JSON mesh and recentres it; see the library docs for the
// accepted formats.
rupert_status rupert_load_mesh(const char* path, rupert_polyhedron** out);
void rupert_polyhedron_free(rupert_polyhedron* p);

// Valid while p lives.
const char* rupert_polyhedron_name(const rupert_polyhedron* p);
int rupert_vertex_count(const rupert_polyhedron* p);

// --- Objective and local ascent ---------------------------------------------

// Largest factor by which the shadow at (theta_p, phi_p), turned by alpha and
// shifted by (u, v), fits inside the silhouette at (theta_q, phi_q). Fails
// with RUPERT_ERR_UNBOUNDED when the scaled copy escapes in some direction
// and RUPERT_ERR_DEGENERATE when a silhouette collapses.
rupert_status rupert_evaluate(const rupert_polyhedron* p, const double x[7],
                              double* mu);

typedef struct rupert_solve_config {
  double delta0;     // initial trust radius
  double delta_min;  // stop once the radius falls below this
  int max_iters;
  double dual_tol;   // relative duality-gap tolerance per subproblem
} rupert_solve_config;
void rupert_solve_config_default(rupert_solve_config* cfg);

typedef struct rupert_solve_result {
  double x[7];
  double mu;
  double certificate_norm;  // min-norm point over active gradients at x
  int iterations;
  int converged;            // 1: radius underflow; 0: iteration budget
} rupert_solve_result;

// Trust-region ascent from x0. cfg NULL takes the defaults.
rupert_status rupert_solve(const rupert_polyhedron* p, const double x0[7],
                           const rupert_solve_config* cfg,
                           rupert_solve_result* out);

// --- Random-restart search ---------------------------------------------------

typedef struct rupert_search_config {
  uint64_t seed;
  int trials;      // > 0: trial budget
  double seconds;  // > 0: wall-clock budget, checked between trials
  int threads;
  double u_v_range;
  double zero_translation_share;
  rupert_solve_config solver;
  const char* log_path;  // non-NULL: append one JSON record per improvement
} rupert_search_config;
void rupert_search_config_default(rupert_search_config* cfg);

typedef struct rupert_search_result {
  double x[7];
  double mu;
  double certificate_norm;
  uint64_t seed;
  int trials;            // completed trials
  int iterations_total;
} rupert_search_result;

// Seeded restarts of rupert_solve; identical (seed, budget) replay exactly.
// Fails with RUPERT_ERR_BUDGET when no trial reached a finite mu.
rupert_status rupert_search(const rupert_polyhedron* p,
                            const rupert_search_config* cfg,
                            rupert_search_result* out);

// --- Improvement logs ---------------------------------------------------------

typedef struct rupert_log_record {
  char shape[120];        // catalog identifier or mesh name
  double x[7];
  double mu;
  double certificate_norm;
  uint64_t seed;
  int trial;
  int iters;
  char mu_certified[64];  // floor-rounded decimal string; "" until verified
} rupert_log_record;

// Reads a log written by rupert_search. Free with rupert_log_free.
rupert_status rupert_log_read(const char* path, rupert_log_record** records,
                              int* count);
rupert_status rupert_log_write(const char* path,
                               const rupert_log_record* records, int count);
void rupert_log_free(rupert_log_record* records);

// --- Multiprecision recheck ----------------------------------------------------

typedef struct rupert_recheck_result {
  double mu;              // recomputed at `digits`, rounded to double
  char mu_12[64];         // truncated to 12 fractional digits
  double min_slack;       // smallest 1 - mu * (face . point), rounded
  int combinatorics_mismatch;  // silhouette hull differs from double run
} rupert_recheck_result;

// Re-runs the objective from the decimal vertex strings at `digits`
// significant digits (>= 30) and certifies the slack signs.
rupert_status rupert_recheck(const rupert_polyhedron* p, const double x[7],
                             int digits, rupert_recheck_result* out);

// Certifies the fixed two-tetrahedra configuration at `digits`. Writes mu to
// mu_out (mu_len >= digits + 8) and the containment margin, which is
// nonnegative up to the working tolerance 10^(5 - digits).
rupert_status rupert_verify_theorem2(int digits, char* mu_out, size_t mu_len,
                                     double* margin);

// --- Rendering -------------------------------------------------------------------

typedef struct rupert_render_spec {
  double size_px;
  double margin_frac;
  double stroke_width;
  const char* outer_stroke;  // NULL: default color
  const char* hole_fill;     // NULL: default color
} rupert_render_spec;
void rupert_render_spec_default(rupert_render_spec* spec);

// SVG of the outer silhouette with the mu-scaled hole. Free *svg_out with
// rupert_string_free.
rupert_status rupert_render_svg(const rupert_polyhedron* p, const double x[7],
                                double mu, const rupert_render_spec* spec,
                                char** svg_out);
void rupert_string_free(char* s);

// --- Printing ---------------------------------------------------------------------

// Floor-rounds v to `significant` digits, the rounding used for every
// published bound. out_len >= significant + 8.
rupert_status rupert_floor_bound(double v, int significant, char* out,
                                 size_t out_len);

#ifdef __cplusplus
}
#endif

#endif  // RUPERT_RUPERT_H_
