#include <doctest.h>

#include <cmath>
#include <sstream>

#include "catalog.h"
#include "error.h"
#include "mu.h"
#include "search.h"

using namespace rupert;

TEST_CASE("trial streams are deterministic and distinct") {
  TrialRng a(42, 0), b(42, 0), c(42, 1);
  for (int k = 0; k < 100; ++k) {
    const std::uint64_t va = a.next();
    CHECK(va == b.next());
    CHECK(va != c.next());
  }
  TrialRng d(43, 0);
  CHECK(TrialRng(42, 0).next() != d.next());
}

TEST_CASE("samples follow the documented ranges") {
  TrialRng rng(5, 7);
  int zeros = 0;
  double theta_sum = 0;
  const int n = 100000;
  for (int k = 0; k < n; ++k) {
    const Passage x = sample_init(rng, 0.1, 0.5);
    CHECK(x.theta_p >= 0.0);
    CHECK(x.theta_p < 3.14159265358979324);
    CHECK(x.theta_q >= 0.0);
    CHECK(x.theta_q < 3.14159265358979324);
    CHECK(x.phi_p >= 0.0);
    CHECK(x.phi_p < 6.28318530717958648);
    CHECK(x.alpha >= 0.0);
    CHECK(x.alpha < 6.28318530717958648);
    CHECK(std::abs(x.u) <= 0.1);
    CHECK(std::abs(x.v) <= 0.1);
    if (x.u == 0.0 && x.v == 0.0) ++zeros;
    theta_sum += x.theta_p;
  }
  // mean of U[0, pi] within 3 standard errors
  const double pi = 3.14159265358979324;
  const double se = pi / std::sqrt(12.0) / std::sqrt(static_cast<double>(n));
  CHECK(std::abs(theta_sum / n - pi / 2) <= 3 * se);
  // zero-translation share within 3 standard errors of one half
  CHECK(std::abs(zeros / static_cast<double>(n) - 0.5) <= 3 * 0.5 / std::sqrt(n));
}

TEST_CASE("zero translation share one pins every sample at the origin") {
  TrialRng rng(6, 0);
  for (int k = 0; k < 50; ++k) {
    const Passage x = sample_init(rng, 0.1, 1.0);
    CHECK(x.u == 0.0);
    CHECK(x.v == 0.0);
  }
}

TEST_CASE("search is deterministic and its record replays") {
  const Polyhedron p = builtin("tetrahedron");
  SearchConfig cfg;
  cfg.seed = 17;
  cfg.trials = 4;
  const BestRecord a = run_search(p, cfg);
  const BestRecord b = run_search(p, cfg);
  CHECK(a.mu_double == b.mu_double);
  CHECK(a.x == b.x);
  CHECK(a.trials == 4);
  CHECK(a.iterations_total == b.iterations_total);
  CHECK(a.shape == "tetrahedron");
  CHECK(a.seed == 17);
  CHECK(a.mu_certified.empty());
  // the stored x reproduces the stored value exactly through evaluate
  const double replay = evaluate(p, to_passage(a.x)).mu;
  CHECK(std::abs(replay - a.mu_double) <= 1e-12 * a.mu_double);
}

TEST_CASE("concurrent trials reduce to the single-thread best") {
  const Polyhedron p = builtin("octahedron");
  SearchConfig cfg;
  cfg.seed = 23;
  cfg.trials = 6;
  const BestRecord serial = run_search(p, cfg);
  cfg.threads = 3;
  const BestRecord parallel = run_search(p, cfg);
  CHECK(serial.mu_double == parallel.mu_double);
  CHECK(serial.x == parallel.x);
  CHECK(serial.trials == parallel.trials);
  CHECK(serial.iterations_total == parallel.iterations_total);
}

TEST_CASE("the improvement log is strictly increasing and replayable") {
  const Polyhedron p = builtin("cube");
  SearchConfig cfg;
  cfg.seed = 11;
  cfg.trials = 6;
  std::ostringstream log;
  cfg.log = &log;
  const BestRecord best = run_search(p, cfg);
  std::istringstream in(log.str());
  std::string line;
  double prev = 0;
  int count = 0;
  LogRecord last;
  while (std::getline(in, line)) {
    const LogRecord rec = parse_log_record(line);
    CHECK(rec.shape == "cube");
    CHECK(rec.seed == 11);
    CHECK(rec.mu > prev);
    prev = rec.mu;
    last = rec;
    ++count;
  }
  REQUIRE(count >= 1);
  CHECK(last.mu == best.mu_double);
  CHECK(last.x == best.x);
}

TEST_CASE("log records round-trip through their JSON form") {
  LogRecord rec;
  rec.shape = "cube";
  rec.x = {0.1, -0.2, 0.3, 0.4, 0.5, 0.6, 0.7};
  rec.mu = 1.0606601;
  rec.certificate_norm = 3e-9;
  rec.seed = 99;
  rec.trial = 12;
  rec.iters = 345;
  const LogRecord back = parse_log_record(serialize(rec));
  CHECK(back.shape == rec.shape);
  CHECK(back.x == rec.x);
  CHECK(back.mu == rec.mu);
  CHECK(back.certificate_norm == rec.certificate_norm);
  CHECK(back.seed == rec.seed);
  CHECK(back.trial == rec.trial);
  CHECK(back.iters == rec.iters);
  CHECK(back.mu_certified.empty());

  rec.mu_certified = "1.060660171779";
  const LogRecord again = parse_log_record(serialize(rec));
  CHECK(again.mu_certified == rec.mu_certified);

  CHECK_THROWS_AS(parse_log_record("not json"), Error);
  CHECK_THROWS_AS(parse_log_record(R"({"shape":"cube","x":[1,2],"mu":1.0})"), Error);
}

TEST_CASE("search validates its budget") {
  const Polyhedron p = builtin("tetrahedron");
  SearchConfig cfg;
  cfg.trials = 0;
  cfg.seconds = 0;
  CHECK_THROWS_AS(run_search(p, cfg), Error);
  cfg.trials = 1;
  cfg.threads = 0;
  CHECK_THROWS_AS(run_search(p, cfg), Error);
}

TEST_CASE("a wall-clock budget still completes at least one trial") {
  const Polyhedron p = builtin("tetrahedron");
  SearchConfig cfg;
  cfg.seed = 3;
  cfg.seconds = 1e-9;
  const BestRecord best = run_search(p, cfg);
  CHECK(best.trials >= 1);
  CHECK(best.mu_double > 0.0);
}
