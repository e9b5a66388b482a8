// Command-line front end over the C interface: seeded passage search,
// multiprecision recertification of logged records, catalog listing, and SVG
// figure emission. Exit codes are stable: 0 success, 1 usage or I/O,
// 2 verification failure, 3 numeric degeneracy. Every bound printed here is
// floor-rounded.
#include <rupert/rupert.h>

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>

#include "CLI11.hpp"

namespace {

using PolyPtr = std::unique_ptr<rupert_polyhedron, decltype(&rupert_polyhedron_free)>;

int exit_for(rupert_status st) {
  switch (st) {
    case RUPERT_OK:
      return 0;
    case RUPERT_ERR_DEGENERATE:
    case RUPERT_ERR_UNBOUNDED:
    case RUPERT_ERR_NONCONVERGENCE:
    case RUPERT_ERR_BUDGET:
      return 3;
    default:
      return 1;
  }
}

// Resolves --mesh ahead of a catalog name; the library's unknown-name error
// already lists the catalog. Null result means *exit_code is set.
PolyPtr resolve(const std::string& shape, const std::string& mesh, int* exit_code) {
  rupert_polyhedron* p = nullptr;
  if (!mesh.empty()) {
    const rupert_status st = rupert_load_mesh(mesh.c_str(), &p);
    if (st != RUPERT_OK) {
      std::fprintf(stderr, "error: %s\n", rupert_last_error());
      *exit_code = exit_for(st);
      return {nullptr, &rupert_polyhedron_free};
    }
    return {p, &rupert_polyhedron_free};
  }
  if (shape.empty()) {
    std::fprintf(stderr, "error: need a shape name or --mesh\n");
    *exit_code = 1;
    return {nullptr, &rupert_polyhedron_free};
  }
  const rupert_status st = rupert_builtin(shape.c_str(), &p);
  if (st != RUPERT_OK) {
    std::fprintf(stderr, "error: %s\n", rupert_last_error());
    *exit_code = exit_for(st);
    return {nullptr, &rupert_polyhedron_free};
  }
  return {p, &rupert_polyhedron_free};
}

std::string floored(double v, int significant) {
  char buf[64];
  if (rupert_floor_bound(v, significant, buf, sizeof(buf)) != RUPERT_OK)
    return std::to_string(v);
  return buf;
}

// Truncates a positive decimal string to `sig` significant digits; applied
// to already floor-rounded strings this keeps the floor rounding.
std::string cut_significant(const std::string& s, int sig) {
  std::string out;
  int count = 0;
  bool significant = false;
  for (char c : s) {
    if (c >= '1' && c <= '9') significant = true;
    out += c;
    if (c >= '0' && c <= '9' && significant && ++count == sig) break;
  }
  if (!out.empty() && out.back() == '.') out.pop_back();
  return out;
}

struct SearchArgs {
  std::string shape, mesh, out;
  std::uint64_t seed = 1;
  int trials = 0;
  double seconds = 0;
  double delta0 = 0;
  double delta_min = 0;
};

int cmd_search(const SearchArgs& args) {
  int code = 0;
  const PolyPtr p = resolve(args.shape, args.mesh, &code);
  if (!p) return code;

  rupert_search_config cfg;
  rupert_search_config_default(&cfg);
  cfg.seed = args.seed;
  cfg.trials = args.trials;
  cfg.seconds = args.seconds;
  if (args.trials <= 0 && args.seconds <= 0) cfg.trials = 100;
  if (args.delta0 > 0) cfg.solver.delta0 = args.delta0;
  if (args.delta_min > 0) cfg.solver.delta_min = args.delta_min;

  const std::string log_path =
      args.out.empty() ? std::string(rupert_polyhedron_name(p.get())) + ".jsonl"
                       : args.out;
  cfg.log_path = log_path.c_str();

  rupert_search_result res;
  const rupert_status st = rupert_search(p.get(), &cfg, &res);
  if (st != RUPERT_OK) {
    std::fprintf(stderr, "error: %s\n", rupert_last_error());
    return exit_for(st);
  }
  std::printf("%s: mu >= %s\n", rupert_polyhedron_name(p.get()),
              floored(res.mu, 12).c_str());
  std::printf("certificate norm %.3e, %d trials, %d solver iterations\n",
              res.certificate_norm, res.trials, res.iterations_total);
  std::printf("log: %s\n", log_path.c_str());
  return 0;
}

struct VerifyArgs {
  std::string records, mesh;
  int digits = 50;
  bool theorem2 = false;
};

int cmd_verify(const VerifyArgs& args) {
  if (args.theorem2) {
    char mu[360];
    double margin = 0;
    if (args.digits < 30 || args.digits > 300) {
      std::fprintf(stderr, "error: --digits must be in [30, 300]\n");
      return 1;
    }
    const rupert_status st = rupert_verify_theorem2(args.digits, mu, sizeof(mu), &margin);
    if (st != RUPERT_OK) {
      std::fprintf(stderr, "error: %s\n", rupert_last_error());
      return exit_for(st);
    }
    std::printf("theorem2 mu = %s (containment margin %.3g)\n",
                cut_significant(mu, 30).c_str(), margin);
    if (args.records.empty()) return 0;
  }
  if (args.records.empty()) {
    std::fprintf(stderr, "error: need a record file or --theorem2\n");
    return 1;
  }

  rupert_log_record* recs = nullptr;
  int count = 0;
  rupert_status st = rupert_log_read(args.records.c_str(), &recs, &count);
  if (st != RUPERT_OK) {
    std::fprintf(stderr, "error: %s\n", rupert_last_error());
    return 1;
  }
  const std::unique_ptr<rupert_log_record[], decltype(&rupert_log_free)> guard(
      recs, &rupert_log_free);
  if (count == 0) {
    std::fprintf(stderr, "error: %s holds no records\n", args.records.c_str());
    return 1;
  }

  // Slack certificates live at the recheck working tolerance; a certified mu
  // visibly below the stored one marks the record stale.
  const double slack_tol = std::pow(10.0, 5 - args.digits);
  const double stale_tol = 1e-9;

  std::string cached_name;
  PolyPtr poly(nullptr, &rupert_polyhedron_free);
  bool any_fail = false;
  for (int k = 0; k < count; ++k) {
    const rupert_log_record& rec = recs[k];
    if (!poly || cached_name != rec.shape) {
      int code = 0;
      poly = resolve(rec.shape, args.mesh, &code);
      if (!poly) return code;
      cached_name = rec.shape;
    }
    rupert_recheck_result res;
    st = rupert_recheck(poly.get(), rec.x, args.digits, &res);
    if (st != RUPERT_OK) {
      std::printf("record %d: FAIL %s\n", k, rupert_last_error());
      any_fail = true;
      continue;
    }
    std::snprintf(recs[k].mu_certified, sizeof(recs[k].mu_certified), "%s", res.mu_12);
    const bool slack_ok = res.min_slack >= -slack_tol;
    const bool stale = res.mu < rec.mu - stale_tol;
    if (slack_ok && !stale) {
      std::printf("record %d: pass mu = %s\n", k, res.mu_12);
      continue;
    }
    any_fail = true;
    if (!slack_ok) {
      std::printf("record %d: FAIL slack %.3g\n", k, res.min_slack);
    } else {
      std::printf("record %d: FAIL stale: certified %s below stored %s\n", k,
                  res.mu_12, floored(rec.mu, 13).c_str());
    }
  }

  st = rupert_log_write(args.records.c_str(), recs, count);
  if (st != RUPERT_OK) {
    std::fprintf(stderr, "error: %s\n", rupert_last_error());
    return 1;
  }
  return any_fail ? 2 : 0;
}

struct RenderArgs {
  std::string records, mesh, out = "passage.svg";
};

int cmd_render(const RenderArgs& args) {
  rupert_log_record* recs = nullptr;
  int count = 0;
  rupert_status st = rupert_log_read(args.records.c_str(), &recs, &count);
  if (st != RUPERT_OK) {
    std::fprintf(stderr, "error: %s\n", rupert_last_error());
    return 1;
  }
  const std::unique_ptr<rupert_log_record[], decltype(&rupert_log_free)> guard(
      recs, &rupert_log_free);
  if (count == 0) {
    std::fprintf(stderr, "error: %s holds no records\n", args.records.c_str());
    return 1;
  }
  const rupert_log_record& best = recs[count - 1];

  int code = 0;
  const PolyPtr poly = resolve(best.shape, args.mesh, &code);
  if (!poly) return code;

  char* svg = nullptr;
  st = rupert_render_svg(poly.get(), best.x, best.mu, nullptr, &svg);
  if (st != RUPERT_OK) {
    std::fprintf(stderr, "error: %s\n", rupert_last_error());
    return exit_for(st);
  }
  const std::unique_ptr<char[], decltype(&rupert_string_free)> svg_guard(
      svg, &rupert_string_free);

  std::ofstream out(args.out);
  out << svg;
  out.close();
  if (!out) {
    std::fprintf(stderr, "error: cannot write %s\n", args.out.c_str());
    return 1;
  }
  std::printf("wrote %s (%s, mu >= %s)\n", args.out.c_str(), best.shape,
              floored(best.mu, 12).c_str());
  return 0;
}

int cmd_catalog(const std::string& mesh) {
  if (!mesh.empty()) {
    int code = 0;
    const PolyPtr p = resolve("", mesh, &code);
    if (!p) return code;
    std::printf("%s: %d vertices\n", rupert_polyhedron_name(p.get()),
                rupert_vertex_count(p.get()));
    return 0;
  }
  for (int i = 0; i < rupert_catalog_count(); ++i) {
    rupert_polyhedron* p = nullptr;
    if (rupert_builtin(rupert_catalog_name(i), &p) != RUPERT_OK) {
      std::fprintf(stderr, "error: %s\n", rupert_last_error());
      return 1;
    }
    std::printf("%-28s %3d vertices\n", rupert_polyhedron_name(p),
                rupert_vertex_count(p));
    rupert_polyhedron_free(p);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"passage search and certification for convex polyhedra"};
  app.require_subcommand(1);

  SearchArgs sa;
  CLI::App* search = app.add_subcommand("search", "random-restart passage search");
  search->add_option("shape", sa.shape, "catalog shape name");
  search->add_option("--mesh", sa.mesh, "OFF or JSON mesh path, bypasses the catalog");
  search->add_option("--seed", sa.seed, "base RNG seed (default 1)");
  search->add_option("--trials", sa.trials, "trial budget (default 100)");
  search->add_option("--seconds", sa.seconds, "wall-clock budget in seconds");
  search->add_option("--delta0", sa.delta0, "initial trust radius");
  search->add_option("--delta-min", sa.delta_min, "termination trust radius");
  search->add_option("--out", sa.out, "improvement log path (default <shape>.jsonl)");

  VerifyArgs va;
  CLI::App* verify =
      app.add_subcommand("verify", "recertify logged records at high precision");
  verify->add_option("records", va.records, "improvement log to recertify");
  verify->add_option("--digits", va.digits, "working precision in digits (default 50)");
  verify->add_option("--mesh", va.mesh, "mesh path overriding the record's shape");
  verify->add_flag("--theorem2", va.theorem2,
                   "certify the fixed two-tetrahedra configuration");

  RenderArgs ra;
  CLI::App* render =
      app.add_subcommand("render", "emit an SVG figure of the last logged passage");
  render->add_option("records", ra.records, "improvement log to draw from")->required();
  render->add_option("--out,out", ra.out, "output SVG path (default passage.svg)");
  render->add_option("--mesh", ra.mesh, "mesh path overriding the record's shape");

  std::string catalog_mesh;
  CLI::App* catalog = app.add_subcommand("catalog", "list built-in shapes");
  catalog->add_option("--mesh", catalog_mesh, "inspect a mesh file instead");

  int rc = 0;
  search->callback([&] { rc = cmd_search(sa); });
  verify->callback([&] { rc = cmd_verify(va); });
  render->callback([&] { rc = cmd_render(ra); });
  catalog->callback([&] { rc = cmd_catalog(catalog_mesh); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  return rc;
}
