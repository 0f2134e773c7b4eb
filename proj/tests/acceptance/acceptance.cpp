// Acceptance suite: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "swarmtsp/swarmtsp.hpp"

using namespace swarmtsp;
namespace oracle = swarmtsp::testing;

namespace {

constexpr double kFiveCityOptimum = 15.15298244508295;  // brute force over the 12 distinct cycles
constexpr double kBerlin52Optimum = 7542.0;             // packaged optimal tour under EUC_2D

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  if (!ok) ++failures;
  fmt::print("{} {:<28} {}\n", ok ? "PASS" : "FAIL", name, detail);
  std::fflush(stdout);
}

// Every run in the matrix feeds this for the monotone-convergence criterion.
struct HistoryAudit {
  std::size_t runs = 0;
  std::size_t violations = 0;

  void add(const RunResult& r) {
    ++runs;
    for (std::size_t k = 1; k < r.cost_history.size(); ++k) {
      if (r.cost_history[k] > r.cost_history[k - 1]) {
        ++violations;
        return;
      }
    }
  }
} history;

SwarmConfig published_pso(std::uint64_t seed) {
  SwarmConfig cfg;
  cfg.n_particles = 30;
  cfg.max_iter = 100;
  cfg.w = 0.8;
  cfg.c1 = 2.0;
  cfg.c2 = 2.0;
  cfg.local_search = LocalSearchScope::kTwoOptGbest;
  cfg.seed = seed;
  return cfg;
}

void exact_optimum() {
  const auto start = Clock::now();
  const ExactSolution best = brute_force_optimal(builtin_instance());
  const double elapsed = seconds(start);
  const bool ok = std::abs(best.length - 15.15299) <= 1e-4 && best.tour == Tour(std::vector<std::size_t>{0, 1, 2, 3, 4}) &&
                  elapsed < 1.0;
  std::string tour;
  for (auto c : best.tour) tour += (tour.empty() ? "" : ",") + std::to_string(c);
  report(ok, "exact-five-city", fmt::format("cost {:.5f} tour ({}) in {:.3f} s", best.length, tour, elapsed));
}

void pso_published_settings() {
  const auto start = Clock::now();
  const auto m = build_distance_matrix(builtin_instance());
  int hits = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const RunResult r = run_pso(m, published_pso(seed));
    history.add(r);
    hits += std::abs(r.best_cost - kFiveCityOptimum) <= 1e-4;
  }
  const double elapsed = seconds(start);
  report(hits == 20 && elapsed < 5.0, "pso-five-city-20-seeds", fmt::format("{}/20 optimal in {:.3f} s", hits, elapsed));
}

void oracle_equivalence() {
  const auto start = Clock::now();
  int pso_hits = 0, ga_hits = 0, sa_hits = 0, pairs = 0;
  for (std::uint64_t idx = 0; idx < 50; ++idx) {
    const std::size_t n = 5 + idx % 5;
    const auto m = build_distance_matrix(oracle::random_instance(n, 500 + idx));
    const double optimum = oracle::held_karp(m);
    const double brute = brute_force_optimal(m).length;
    if (std::abs(optimum - brute) > 1e-9) {
      report(false, "oracle-equivalence", fmt::format("brute force disagrees with Held-Karp on instance {}", idx));
      return;
    }
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      ++pairs;
      SwarmConfig pso;
      pso.seed = seed;
      GaConfig ga;
      ga.seed = seed;
      SaConfig sa;
      sa.seed = seed;
      const RunResult rp = run_pso(m, pso);
      const RunResult rg = run_ga(m, ga);
      const RunResult rs = run_sa(m, sa);
      history.add(rp);
      history.add(rg);
      history.add(rs);
      pso_hits += std::abs(rp.best_cost - brute) <= 1e-6;
      ga_hits += std::abs(rg.best_cost - brute) <= 1e-6;
      sa_hits += std::abs(rs.best_cost - brute) <= 1e-6;
    }
  }
  const double elapsed = seconds(start);
  const bool ok = pso_hits >= 0.95 * pairs && ga_hits >= 0.90 * pairs && sa_hits >= 0.90 * pairs && elapsed < 120.0;
  report(ok, "oracle-equivalence",
         fmt::format("pso {}/{}  ga {}/{}  sa {}/{} in {:.2f} s", pso_hits, pairs, ga_hits, pairs, sa_hits, pairs, elapsed));
}

void two_opt_certificate() {
  std::mt19937_64 gen(2020);
  int certified = 0, shorter_or_equal = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + gen() % 48;
    const auto m = build_distance_matrix(oracle::random_instance(n, 7000 + trial));
    const Tour start(oracle::random_order(n, gen));
    const Tour out = two_opt(start, m);
    certified += oracle::valid_permutation(out) && !oracle::has_improving_reversal(out, m);
    shorter_or_equal += oracle::length_by_matrix({out.begin(), out.end()}, m) <=
                        oracle::length_by_matrix({start.begin(), start.end()}, m) + 1e-9;
  }
  report(certified == 200 && shorter_or_equal == 200, "two-opt-certificate",
         fmt::format("{}/200 locally optimal, {}/200 not longer", certified, shorter_or_equal));
}

void swap_algebra() {
  std::mt19937_64 gen(77);
  int roundtrips = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + gen() % 10;
    const Tour a(oracle::random_order(n, gen));
    const Tour b(oracle::random_order(n, gen));
    roundtrips += apply_swaps(a, swap_difference(a, b)) == b;
  }
  Rng rng(77);
  int valid = 0;
  const int fuzz = 5000;
  for (int trial = 0; trial < fuzz; ++trial) {
    const std::size_t n = 1 + gen() % 15;
    SwapSequence vel;
    const std::size_t len = gen() % (4 * n + 1);
    for (std::size_t k = 0; k < len; ++k) vel.swaps.push_back({gen() % n, gen() % n});
    const Particle p{Tour(oracle::random_order(n, gen)), vel, Tour(oracle::random_order(n, gen)), 0.0};
    const Tour gbest(oracle::random_order(n, gen));
    const double w = std::uniform_real_distribution<double>(0.0, 1.0)(gen);
    const double c1 = std::uniform_real_distribution<double>(0.0, 4.0)(gen);
    const double c2 = std::uniform_real_distribution<double>(0.0, 4.0)(gen);
    const SwapSequence v = velocity_update(p, gbest, w, c1, c2, rng);
    valid += v.size() <= 2 * n && oracle::valid_permutation(apply_swaps(p.position, v));
  }
  report(roundtrips == 1000 && valid == fuzz, "swap-algebra",
         fmt::format("{}/1000 round trips, {}/{} fuzzed velocities valid", roundtrips, valid, fuzz));
}

void berlin52_sanity() {
  const auto parsed = load_instance_file(std::filesystem::path(SWARMTSP_DATA_DIR) / "berlin52.tsp");
  const auto m = build_distance_matrix(parsed.instance);

  struct Entry {
    const char* name;
    double tolerance;
    RunResult (*solve)(const DistanceMatrix&, std::uint64_t);
  };
  const Entry entries[] = {
      {"pso", 0.05, [](const DistanceMatrix& d, std::uint64_t s) { return run_pso(d, published_pso(s)); }},
      {"sa", 0.05,
       [](const DistanceMatrix& d, std::uint64_t s) {
         SaConfig cfg;
         cfg.seed = s;
         return run_sa(d, cfg);
       }},
      {"ga", 0.10,
       [](const DistanceMatrix& d, std::uint64_t s) {
         GaConfig cfg;
         cfg.population = 100;
         cfg.generations = 10000;
         cfg.mutation_rate = 0.5;
         cfg.seed = s;
         return run_ga(d, cfg);
       }},
  };
  for (const Entry& e : entries) {
    const auto start = Clock::now();
    double best = INFINITY;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const RunResult r = e.solve(m, seed);
      history.add(r);
      best = std::min(best, r.best_cost);
    }
    const double elapsed = seconds(start);
    const double gap = (best - kBerlin52Optimum) / kBerlin52Optimum;
    report(gap <= e.tolerance && elapsed < 60.0, fmt::format("berlin52-{}", e.name),
           fmt::format("best of 10 = {:.0f} (gap {:.2f}%, limit {:.0f}%) in {:.2f} s", best, 100 * gap,
                       100 * e.tolerance, elapsed));
  }
}

void monotone_histories() {
  report(history.runs > 0 && history.violations == 0, "monotone-cost-history",
         fmt::format("{} runs audited, {} with an increase", history.runs, history.violations));
}

// CSV: wall_time_s is the last column.
std::string csv_without_wall_time(const std::string& csv) {
  std::istringstream in(csv);
  std::string out;
  for (std::string line; std::getline(in, line);) out += line.substr(0, line.rfind(',')) + "\n";
  return out;
}

// JSON: dump(2) puts every key on its own line.
std::string json_without_wall_time(const std::string& json) {
  std::istringstream in(json);
  std::string out;
  for (std::string line; std::getline(in, line);) {
    if (line.find("\"wall_time_s\"") == std::string::npos) out += line + "\n";
  }
  return out;
}

void bench_determinism() {
  const auto spec = load_experiment_spec(std::filesystem::path(SWARMTSP_SPECS_DIR) / "paper_reproduction.json");
  const auto first = run_experiment(spec, 1);
  const auto second = run_experiment(spec, 4);
  const std::string csv1 = emit_csv(first), csv2 = emit_csv(second);
  const std::string json1 = emit_json(first, summarize(first, spec.reference_cost));
  const std::string json2 = emit_json(second, summarize(second, spec.reference_cost));
  const bool ok = csv_without_wall_time(csv1) == csv_without_wall_time(csv2) &&
                  json_without_wall_time(json1) == json_without_wall_time(json2);
  report(ok, "bench-determinism",
         fmt::format("{} records, CSV {} bytes, JSON {} bytes", first.size(), csv1.size(), json1.size()));
}

void statistics_fixture() {
  std::vector<TrialRecord> records;
  const double costs[] = {12.5, 13.0, 12.8, 12.3, 12.6};
  for (std::size_t i = 0; i < 5; ++i) {
    records.push_back(
        TrialRecord{.algorithm = "fixture", .run_index = i, .best_cost = costs[i], .best_tour = Tour::identity(1)});
  }
  const SummaryStats s = summarize(records, std::nullopt).at(0);
  const bool ok = std::abs(s.mean - 12.64) <= 1e-9 && std::abs(s.sample_std - 0.27019) <= 1e-5 && s.best == 12.3 &&
                  s.worst == 13.0;
  report(ok, "statistics-fixture",
         fmt::format("mean {:.5f} sample_std {:.5f} best {} worst {}", s.mean, s.sample_std, s.best, s.worst));
}

}  // namespace

int main() {
  const auto start = Clock::now();
  try {
    exact_optimum();
    pso_published_settings();
    oracle_equivalence();
    two_opt_certificate();
    swap_algebra();
    berlin52_sanity();
    monotone_histories();
    bench_determinism();
    statistics_fixture();
  } catch (const std::exception& e) {
    fmt::print("FAIL {:<28} {}\n", "unexpected-exception", e.what());
    return 1;
  }
  fmt::print("{} criteria failed; total {:.1f} s\n", failures, seconds(start));
  return failures == 0 ? 0 : 1;
}
