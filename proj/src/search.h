// Seeded random-restart driver: samples starting passages, runs the
// trust-region ascent on each, and keeps the best local maximum. Trials are
// keyed by (seed, trial index), so concurrent runs replay exactly.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "solver.h"

namespace rupert {

// Counter-keyed generator: the stream for (seed, trial) is independent of
// thread scheduling.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial);
  std::uint64_t next();
  double uniform();  // [0, 1)
  double uniform(double a, double b);

 private:
  std::uint64_t state_;
};

struct SearchConfig {
  std::uint64_t seed = 1;
  int trials = 0;      // > 0: trial-count budget
  double seconds = 0;  // > 0: wall-clock budget, checked between trials
  int threads = 1;
  double u_v_range = 0.1;
  double zero_translation_share = 0.5;  // share of trials started at u = v = 0
  SolverConfig solver;
  std::ostream* log = nullptr;  // improvement records, one JSON object per line
};

struct BestRecord {
  std::string shape;
  Vec7 x{};
  double mu_double = 0;
  std::string mu_certified;  // floor-rounded decimal string, filled by verify
  double certificate_norm = 0;
  std::uint64_t seed = 0;
  int trials = 0;            // completed trials
  int iterations_total = 0;  // solver iterations across completed trials
};

// One line of the search log; mu_certified is filled in by verification.
struct LogRecord {
  std::string shape;
  Vec7 x{};
  double mu = 0;
  double certificate_norm = 0;
  std::uint64_t seed = 0;
  int trial = 0;
  int iters = 0;
  std::string mu_certified;
};

// Draws theta_p, theta_q from U[0, pi], phi_p, phi_q, alpha from U[0, 2pi],
// and u, v from U[-u_v_range, u_v_range] or (0, 0).
Passage sample_init(TrialRng& rng, double u_v_range = 0.1,
                    double zero_translation_share = 0.5);

// Runs solver::run from repeated samples, discarding starts whose mu is
// infinite or degenerate without consuming budget. Appends each strict
// improvement to cfg.log. Ties on mu resolve to the lowest trial index.
BestRecord run_search(const Polyhedron& p, const SearchConfig& cfg);

std::string serialize(const LogRecord& rec);
LogRecord parse_log_record(const std::string& line);
std::vector<LogRecord> read_log(const std::string& path);
void write_log(const std::string& path, const std::vector<LogRecord>& recs);

}  // namespace rupert
