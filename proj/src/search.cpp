#include "search.h"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "error.h"

namespace rupert {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kPi = 3.14159265358979323846;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial)
    : state_(mix(mix(seed ^ (kGamma * (trial + 1))))) {}

std::uint64_t TrialRng::next() {
  state_ += kGamma;
  return mix(state_);
}

double TrialRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double TrialRng::uniform(double a, double b) { return a + (b - a) * uniform(); }

Passage sample_init(TrialRng& rng, double u_v_range, double zero_translation_share) {
  Passage x;
  x.theta_p = rng.uniform(0.0, kPi);
  x.phi_p = rng.uniform(0.0, 2.0 * kPi);
  x.alpha = rng.uniform(0.0, 2.0 * kPi);
  x.theta_q = rng.uniform(0.0, kPi);
  x.phi_q = rng.uniform(0.0, 2.0 * kPi);
  if (rng.uniform() >= zero_translation_share) {
    x.u = rng.uniform(-u_v_range, u_v_range);
    x.v = rng.uniform(-u_v_range, u_v_range);
  }
  return x;
}

BestRecord run_search(const Polyhedron& p, const SearchConfig& cfg) {
  if (cfg.trials <= 0 && cfg.seconds <= 0)
    fail(ErrorCode::kInvalid, "search: need a positive trial or seconds budget");
  if (cfg.threads < 1) fail(ErrorCode::kInvalid, "search: need at least one thread");
  if (!(cfg.u_v_range > 0)) fail(ErrorCode::kInvalid, "search: u_v_range must be positive");

  const auto t_start = std::chrono::steady_clock::now();
  std::atomic<long> next_trial{0};
  std::atomic<bool> aborted{false};
  std::mutex reduce_mu;
  bool have_best = false;
  double best_mu = 0;
  long best_trial = 0;
  RunResult best_run;
  int completed = 0;
  long long iterations_total = 0;
  std::exception_ptr first_error;

  auto worker = [&]() {
    while (!aborted.load(std::memory_order_relaxed)) {
      const long t = next_trial.fetch_add(1, std::memory_order_relaxed);
      if (cfg.trials > 0 && t >= cfg.trials) return;
      if (cfg.seconds > 0 && t > 0) {
        const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - t_start;
        if (spent.count() >= cfg.seconds) return;
      }
      try {
        TrialRng rng(cfg.seed, static_cast<std::uint64_t>(t));
        Passage x0;
        bool usable = false;
        for (int attempt = 0; attempt < 10000 && !usable; ++attempt) {
          x0 = sample_init(rng, cfg.u_v_range, cfg.zero_translation_share);
          try {
            evaluate(p, x0, cfg.solver.tau_tie);
            usable = true;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::kUnbounded && e.code() != ErrorCode::kDegenerate) throw;
          }
        }
        if (!usable)
          fail(ErrorCode::kDegenerate, "search: no finite-mu start found in 10000 samples");

        const RunResult r = run(p, x0, cfg.solver);

        std::lock_guard<std::mutex> lock(reduce_mu);
        ++completed;
        iterations_total += r.iters;
        const bool improved = !have_best || r.it.mu > best_mu;
        if (improved || (r.it.mu == best_mu && t < best_trial)) {
          have_best = true;
          best_mu = r.it.mu;
          best_trial = t;
          best_run = r;
        }
        if (improved && cfg.log != nullptr) {
          LogRecord rec;
          rec.shape = p.name;
          rec.x = to_vec7(r.it.x);
          rec.mu = r.it.mu;
          rec.certificate_norm = r.cert.norm;
          rec.seed = cfg.seed;
          rec.trial = static_cast<int>(t);
          rec.iters = r.iters;
          *cfg.log << serialize(rec) << '\n';
          cfg.log->flush();
          if (!cfg.log->good()) fail(ErrorCode::kIo, "search: log write failed");
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(reduce_mu);
        if (!first_error) first_error = std::current_exception();
        aborted.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  if (cfg.threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(cfg.threads);
    for (int i = 0; i < cfg.threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  if (!have_best) fail(ErrorCode::kBudget, "search: no trial completed within budget");

  BestRecord best;
  best.shape = p.name;
  best.x = to_vec7(best_run.it.x);
  best.mu_double = best_run.it.mu;
  best.certificate_norm = best_run.cert.norm;
  best.seed = cfg.seed;
  best.trials = completed;
  best.iterations_total = static_cast<int>(iterations_total);
  return best;
}

std::string serialize(const LogRecord& rec) {
  nlohmann::ordered_json j;
  j["shape"] = rec.shape;
  j["x"] = rec.x;
  j["mu"] = rec.mu;
  j["certificate_norm"] = rec.certificate_norm;
  j["seed"] = rec.seed;
  j["trial"] = rec.trial;
  j["iters"] = rec.iters;
  if (!rec.mu_certified.empty()) j["mu_certified"] = rec.mu_certified;
  return j.dump();
}

LogRecord parse_log_record(const std::string& line) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("log record: ") + e.what());
  }
  LogRecord rec;
  try {
    rec.shape = j.at("shape").get<std::string>();
    const auto& xs = j.at("x");
    if (!xs.is_array() || xs.size() != 7)
      fail(ErrorCode::kParse, "log record: x must have 7 entries");
    for (int i = 0; i < 7; ++i) rec.x[i] = xs[i].get<double>();
    rec.mu = j.at("mu").get<double>();
    rec.certificate_norm = j.value("certificate_norm", 0.0);
    rec.seed = j.value("seed", std::uint64_t{0});
    rec.trial = j.value("trial", 0);
    rec.iters = j.value("iters", 0);
    rec.mu_certified = j.value("mu_certified", std::string());
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kParse, std::string("log record: ") + e.what());
  }
  return rec;
}

std::vector<LogRecord> read_log(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  std::vector<LogRecord> recs;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    recs.push_back(parse_log_record(line));
  }
  return recs;
}

void write_log(const std::string& path, const std::vector<LogRecord>& recs) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIo, "cannot open " + path + " for writing");
  for (const auto& r : recs) out << serialize(r) << '\n';
  out.flush();
  if (!out.good()) fail(ErrorCode::kIo, "write failed: " + path);
}

}  // namespace rupert
