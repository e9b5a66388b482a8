// C ABI over the library. Every entry point funnels through guarded(), which
// turns exceptions into status codes and stashes the message thread-locally.
#include "rupert/rupert.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "bigfloat.h"
#include "catalog.h"
#include "error.h"
#include "mu.h"
#include "render.h"
#include "search.h"
#include "solver.h"
#include "verify.h"

struct rupert_polyhedron {
  rupert::Polyhedron p;
};

namespace {

thread_local std::string t_last_error;

rupert_status to_status(rupert::ErrorCode code) {
  using rupert::ErrorCode;
  switch (code) {
    case ErrorCode::kUnknownName:
      return RUPERT_ERR_UNKNOWN_NAME;
    case ErrorCode::kParse:
      return RUPERT_ERR_PARSE;
    case ErrorCode::kDegenerate:
      return RUPERT_ERR_DEGENERATE;
    case ErrorCode::kUnbounded:
      return RUPERT_ERR_UNBOUNDED;
    case ErrorCode::kNonconvergence:
      return RUPERT_ERR_NONCONVERGENCE;
    case ErrorCode::kBudget:
      return RUPERT_ERR_BUDGET;
    case ErrorCode::kIo:
      return RUPERT_ERR_IO;
    case ErrorCode::kInvalid:
      return RUPERT_ERR_INVALID;
  }
  return RUPERT_ERR_INTERNAL;
}

template <class F>
rupert_status guarded(F&& f) {
  try {
    f();
    t_last_error.clear();
    return RUPERT_OK;
  } catch (const rupert::Error& e) {
    t_last_error = e.what();
    return to_status(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return RUPERT_ERR_INTERNAL;
  }
}

rupert_status invalid(const char* msg) {
  t_last_error = msg;
  return RUPERT_ERR_INVALID;
}

const std::vector<std::string>& catalog() {
  static const std::vector<std::string> names = rupert::catalog_names();
  return names;
}

rupert::Passage to_passage(const double x[7]) {
  rupert::Vec7 v;
  for (int i = 0; i < 7; ++i) v[i] = x[i];
  return rupert::to_passage(v);
}

void from_vec7(const rupert::Vec7& v, double out[7]) {
  for (int i = 0; i < 7; ++i) out[i] = v[i];
}

rupert::SolverConfig to_solver_config(const rupert_solve_config* cfg) {
  rupert::SolverConfig out;
  if (cfg == nullptr) return out;
  if (!(cfg->delta0 > 0) || !(cfg->delta_min > 0) || cfg->max_iters <= 0 ||
      !(cfg->dual_tol > 0)) {
    rupert::fail(rupert::ErrorCode::kInvalid,
                 "solve config: radii, iteration cap, and tolerance must be "
                 "positive");
  }
  out.delta0 = cfg->delta0;
  out.delta_min = cfg->delta_min;
  out.max_iters = cfg->max_iters;
  out.dual_tol = cfg->dual_tol;
  return out;
}

// Copies s into a fixed field, refusing to truncate.
template <size_t N>
void copy_field(char (&dst)[N], const std::string& s, const char* what) {
  if (s.size() >= N) {
    rupert::fail(rupert::ErrorCode::kInvalid,
                 std::string(what) + " does not fit the C record: " + s);
  }
  std::snprintf(dst, N, "%s", s.c_str());
}

// Floor at `sig` significant digits; b must be positive and finite.
std::string floor_significant(const rupert::BigFloat& b, int sig) {
  const int expo = static_cast<int>(floor(log10(b)));
  const int frac = sig - 1 - expo;
  std::string s;
  if (frac >= 0) {
    s = rupert::floor_fixed(b, frac);
  } else {
    const rupert::BigFloat scale = pow(rupert::BigFloat(10), -frac);
    s = rupert::floor_fixed(floor(b / scale) * scale, 0);
  }
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

extern "C" {

const char* rupert_last_error(void) { return t_last_error.c_str(); }

int rupert_catalog_count(void) { return static_cast<int>(catalog().size()); }

const char* rupert_catalog_name(int index) {
  const auto& names = catalog();
  if (index < 0 || index >= static_cast<int>(names.size())) return nullptr;
  return names[index].c_str();
}

rupert_status rupert_builtin(const char* name, rupert_polyhedron** out) {
  if (name == nullptr || out == nullptr) return invalid("builtin: null argument");
  return guarded([&] { *out = new rupert_polyhedron{rupert::builtin(name)}; });
}

rupert_status rupert_load_mesh(const char* path, rupert_polyhedron** out) {
  if (path == nullptr || out == nullptr)
    return invalid("load_mesh: null argument");
  return guarded([&] { *out = new rupert_polyhedron{rupert::load_mesh(path)}; });
}

void rupert_polyhedron_free(rupert_polyhedron* p) { delete p; }

const char* rupert_polyhedron_name(const rupert_polyhedron* p) {
  return p == nullptr ? nullptr : p->p.name.c_str();
}

int rupert_vertex_count(const rupert_polyhedron* p) {
  return p == nullptr ? 0 : static_cast<int>(p->p.vertices.size());
}

rupert_status rupert_evaluate(const rupert_polyhedron* p, const double x[7],
                              double* mu) {
  if (p == nullptr || x == nullptr || mu == nullptr)
    return invalid("evaluate: null argument");
  return guarded([&] { *mu = rupert::evaluate(p->p, to_passage(x)).mu; });
}

void rupert_solve_config_default(rupert_solve_config* cfg) {
  if (cfg == nullptr) return;
  const rupert::SolverConfig d;
  cfg->delta0 = d.delta0;
  cfg->delta_min = d.delta_min;
  cfg->max_iters = d.max_iters;
  cfg->dual_tol = d.dual_tol;
}

rupert_status rupert_solve(const rupert_polyhedron* p, const double x0[7],
                           const rupert_solve_config* cfg,
                           rupert_solve_result* out) {
  if (p == nullptr || x0 == nullptr || out == nullptr)
    return invalid("solve: null argument");
  return guarded([&] {
    const rupert::RunResult r = rupert::run(p->p, to_passage(x0), to_solver_config(cfg));
    from_vec7(rupert::to_vec7(r.it.x), out->x);
    out->mu = r.it.mu;
    out->certificate_norm = r.cert.norm;
    out->iterations = r.iters;
    out->converged = r.status == rupert::RunStatus::kConverged ? 1 : 0;
  });
}

void rupert_search_config_default(rupert_search_config* cfg) {
  if (cfg == nullptr) return;
  const rupert::SearchConfig d;
  cfg->seed = d.seed;
  cfg->trials = d.trials;
  cfg->seconds = d.seconds;
  cfg->threads = d.threads;
  cfg->u_v_range = d.u_v_range;
  cfg->zero_translation_share = d.zero_translation_share;
  rupert_solve_config_default(&cfg->solver);
  cfg->log_path = nullptr;
}

rupert_status rupert_search(const rupert_polyhedron* p,
                            const rupert_search_config* cfg,
                            rupert_search_result* out) {
  if (p == nullptr || cfg == nullptr || out == nullptr)
    return invalid("search: null argument");
  return guarded([&] {
    rupert::SearchConfig scfg;
    scfg.seed = cfg->seed;
    scfg.trials = cfg->trials;
    scfg.seconds = cfg->seconds;
    scfg.threads = cfg->threads;
    scfg.u_v_range = cfg->u_v_range;
    scfg.zero_translation_share = cfg->zero_translation_share;
    scfg.solver = to_solver_config(&cfg->solver);
    std::ofstream log;
    if (cfg->log_path != nullptr) {
      log.open(cfg->log_path);
      if (!log) {
        rupert::fail(rupert::ErrorCode::kIo,
                     std::string("search: cannot open log ") + cfg->log_path);
      }
      scfg.log = &log;
    }
    const rupert::BestRecord best = rupert::run_search(p->p, scfg);
    if (scfg.log != nullptr && !log) {
      rupert::fail(rupert::ErrorCode::kIo,
                   std::string("search: write failed on ") + cfg->log_path);
    }
    from_vec7(best.x, out->x);
    out->mu = best.mu_double;
    out->certificate_norm = best.certificate_norm;
    out->seed = best.seed;
    out->trials = best.trials;
    out->iterations_total = best.iterations_total;
  });
}

rupert_status rupert_log_read(const char* path, rupert_log_record** records,
                              int* count) {
  if (path == nullptr || records == nullptr || count == nullptr)
    return invalid("log_read: null argument");
  return guarded([&] {
    const std::vector<rupert::LogRecord> recs = rupert::read_log(path);
    rupert_log_record* out = new rupert_log_record[recs.size()]();
    try {
      for (size_t k = 0; k < recs.size(); ++k) {
        copy_field(out[k].shape, recs[k].shape, "shape name");
        from_vec7(recs[k].x, out[k].x);
        out[k].mu = recs[k].mu;
        out[k].certificate_norm = recs[k].certificate_norm;
        out[k].seed = recs[k].seed;
        out[k].trial = recs[k].trial;
        out[k].iters = recs[k].iters;
        copy_field(out[k].mu_certified, recs[k].mu_certified, "certified mu");
      }
    } catch (...) {
      delete[] out;
      throw;
    }
    *records = out;
    *count = static_cast<int>(recs.size());
  });
}

rupert_status rupert_log_write(const char* path,
                               const rupert_log_record* records, int count) {
  if (path == nullptr || (records == nullptr && count > 0) || count < 0)
    return invalid("log_write: null argument");
  return guarded([&] {
    std::vector<rupert::LogRecord> recs(count);
    for (int k = 0; k < count; ++k) {
      recs[k].shape = records[k].shape;
      for (int i = 0; i < 7; ++i) recs[k].x[i] = records[k].x[i];
      recs[k].mu = records[k].mu;
      recs[k].certificate_norm = records[k].certificate_norm;
      recs[k].seed = records[k].seed;
      recs[k].trial = records[k].trial;
      recs[k].iters = records[k].iters;
      recs[k].mu_certified = records[k].mu_certified;
    }
    rupert::write_log(path, recs);
  });
}

void rupert_log_free(rupert_log_record* records) { delete[] records; }

rupert_status rupert_recheck(const rupert_polyhedron* p, const double x[7],
                             int digits, rupert_recheck_result* out) {
  if (p == nullptr || x == nullptr || out == nullptr)
    return invalid("recheck: null argument");
  return guarded([&] {
    const rupert::RecheckResult r =
        rupert::recheck(p->p, to_passage(x), rupert::PrecisionContext{digits});
    out->mu = static_cast<double>(r.mu);
    copy_field(out->mu_12, r.mu_12, "certified mu");
    rupert::BigFloat min_slack;
    bool first = true;
    for (const auto& [i, j, slack] : r.certificate.slacks) {
      if (first || slack < min_slack) min_slack = slack;
      first = false;
    }
    out->min_slack = first ? 0.0 : static_cast<double>(min_slack);
    out->combinatorics_mismatch = r.combinatorics_mismatch ? 1 : 0;
  });
}

rupert_status rupert_verify_theorem2(int digits, char* mu_out, size_t mu_len,
                                     double* margin) {
  if (mu_out == nullptr || margin == nullptr)
    return invalid("verify_theorem2: null argument");
  if (mu_len < static_cast<size_t>(digits) + 8)
    return invalid("verify_theorem2: mu buffer too small");
  return guarded([&] {
    const rupert::PrecisionContext ctx{digits};
    const rupert::Theorem2Result r = rupert::verify_theorem2(ctx);
    const std::string s = floor_significant(r.mu, digits);
    std::snprintf(mu_out, mu_len, "%s", s.c_str());
    *margin = static_cast<double>(r.margin);
  });
}

void rupert_render_spec_default(rupert_render_spec* spec) {
  if (spec == nullptr) return;
  const rupert::RenderSpec d;
  spec->size_px = d.size_px;
  spec->margin_frac = d.margin_frac;
  spec->stroke_width = d.stroke_width;
  spec->outer_stroke = nullptr;
  spec->hole_fill = nullptr;
}

rupert_status rupert_render_svg(const rupert_polyhedron* p, const double x[7],
                                double mu, const rupert_render_spec* spec,
                                char** svg_out) {
  if (p == nullptr || x == nullptr || svg_out == nullptr)
    return invalid("render_svg: null argument");
  return guarded([&] {
    rupert::RenderSpec rs;
    if (spec != nullptr) {
      rs.size_px = spec->size_px;
      rs.margin_frac = spec->margin_frac;
      rs.stroke_width = spec->stroke_width;
      if (spec->outer_stroke != nullptr) rs.outer_stroke = spec->outer_stroke;
      if (spec->hole_fill != nullptr) rs.hole_fill = spec->hole_fill;
    }
    const std::string svg = rupert::render_svg(p->p, to_passage(x), mu, rs);
    char* buf = new char[svg.size() + 1];
    std::memcpy(buf, svg.c_str(), svg.size() + 1);
    *svg_out = buf;
  });
}

void rupert_string_free(char* s) { delete[] s; }

rupert_status rupert_floor_bound(double v, int significant, char* out,
                                 size_t out_len) {
  if (out == nullptr) return invalid("floor_bound: null argument");
  if (significant < 1 || significant > 40)
    return invalid("floor_bound: significant digits out of range");
  if (out_len < static_cast<size_t>(significant) + 8)
    return invalid("floor_bound: buffer too small");
  if (!std::isfinite(v) || v <= 0)
    return invalid("floor_bound: bound must be finite and positive");
  return guarded([&] {
    rupert::PrecisionGuard guard(80);
    const std::string s = floor_significant(rupert::BigFloat(v), significant);
    std::snprintf(out, out_len, "%s", s.c_str());
  });
}

}  // extern "C"
