#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "swarmtsp/bench.hpp"
#include "swarmtsp/error.hpp"
#include "swarmtsp/tsplib.hpp"

using namespace swarmtsp;

namespace {

TrialRecord record(std::string algorithm, std::size_t run, double cost) {
  return TrialRecord{.algorithm = std::move(algorithm),
                     .run_index = run,
                     .seed = run,
                     .best_cost = cost,
                     .best_tour = Tour::identity(3)};
}

std::vector<TrialRecord> fixture() {
  std::vector<TrialRecord> out;
  const double costs[] = {12.3, 12.5, 12.8, 13.0, 12.6};
  for (std::size_t i = 0; i < 5; ++i) out.push_back(record("pso", i, costs[i]));
  return out;
}

std::string strip_wall_time(const std::string& csv) {
  std::string out;
  std::size_t start = 0;
  while (start < csv.size()) {
    const std::size_t end = csv.find('\n', start);
    const std::string line = csv.substr(start, end - start);
    out += line.substr(0, line.rfind(',')) + "\n";
    start = end + 1;
  }
  return out;
}

const char* kSmallSpec = R"({
  "instance": "builtin",
  "runs": 3,
  "base_seed": 7,
  "reference_cost": 15.15298244508295,
  "algorithms": [
    {"name": "sa", "kind": "sa", "config": {"cooling": 0.9}},
    {"name": "pso", "kind": "pso", "config": {"n_particles": 10, "max_iter": 20, "local_search": "2opt-all"}},
    {"name": "ga", "kind": "ga", "config": {"population": 10, "generations": 20}}
  ]
})";

}  // namespace

TEST_CASE("summarize the five-run fixture") {
  const auto stats = summarize(fixture(), std::nullopt);
  REQUIRE(stats.size() == 1);
  const auto& s = stats[0];
  CHECK(s.algorithm == "pso");
  CHECK(s.runs == 5);
  CHECK(s.mean == doctest::Approx(12.64).epsilon(1e-12));
  CHECK(s.sample_std == doctest::Approx(0.27018512172212583).epsilon(1e-9));
  CHECK(s.best == 12.3);
  CHECK(s.worst == 13.0);
  CHECK_FALSE(s.gap_percent.has_value());
}

TEST_CASE("summarize edge cases") {
  const auto single = summarize({record("a", 0, 4.5)}, 4.5);
  REQUIRE(single.size() == 1);
  CHECK(single[0].sample_std == 0.0);
  CHECK(single[0].mean == 4.5);
  REQUIRE(single[0].gap_percent.has_value());
  CHECK(*single[0].gap_percent == 0.0);

  const auto gap = summarize(fixture(), 12.0);
  CHECK(*gap[0].gap_percent == doctest::Approx(2.5));

  CHECK_THROWS_AS(summarize({}, std::nullopt), EmptyInputError);

  const auto two = summarize({record("b", 0, 2.0), record("a", 0, 1.0), record("b", 1, 4.0)}, std::nullopt);
  REQUIRE(two.size() == 2);
  CHECK(two[0].algorithm == "a");
  CHECK(two[1].algorithm == "b");
  CHECK(two[1].mean == 3.0);
}

TEST_CASE("summarize ignores record order") {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> cost(10.0, 20.0);
  std::vector<TrialRecord> recs;
  for (std::size_t i = 0; i < 40; ++i) recs.push_back(record(i % 3 == 0 ? "x" : "y", i, cost(gen)));
  const auto base = summarize(recs, 10.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(recs.begin(), recs.end(), gen);
    const auto again = summarize(recs, 10.0);
    REQUIRE(again.size() == base.size());
    for (std::size_t k = 0; k < base.size(); ++k) {
      CHECK(again[k].mean == base[k].mean);
      CHECK(again[k].sample_std == base[k].sample_std);
      CHECK(again[k].best <= again[k].mean);
      CHECK(again[k].mean <= again[k].worst);
    }
  }
}

TEST_CASE("emit_csv") {
  CHECK(emit_csv({}) == "algorithm,run_index,seed,best_cost,iterations,evaluations,wall_time_s\n");
  auto r = record("pso", 1, 15.152982445);
  r.seed = 8;
  r.iterations = 100;
  r.evaluations = 3130;
  r.wall_time = 0.25;
  const std::string csv = emit_csv({r});
  CHECK(csv ==
        "algorithm,run_index,seed,best_cost,iterations,evaluations,wall_time_s\n"
        "pso,1,8,15.15298,100,3130,0.250000\n");
}

TEST_CASE("emit_json round-trips through a JSON parser") {
  const auto recs = fixture();
  const auto stats = summarize(recs, 12.0);
  const std::string text = emit_json(recs, stats);
  CHECK(text.back() == '\n');
  const auto doc = nlohmann::json::parse(text);
  REQUIRE(doc["records"].size() == 5);
  CHECK(doc["records"][2]["best_cost"].get<double>() == 12.8);
  CHECK(doc["records"][2]["best_tour"] == nlohmann::json::array({0, 1, 2}));
  REQUIRE(doc["summary"].size() == 1);
  CHECK(doc["summary"][0]["mean"].get<double>() == stats[0].mean);
  CHECK(doc["summary"][0]["gap_percent"].get<double>() == doctest::Approx(2.5));
  CHECK(text.find("\"records\"") < text.find("\"summary\""));

  const auto no_ref = nlohmann::json::parse(emit_json(recs, summarize(recs, std::nullopt)));
  CHECK(no_ref["summary"][0]["gap_percent"].is_null());
}

TEST_CASE("format_summary_table lists every algorithm") {
  const std::string table = format_summary_table(summarize(fixture(), std::nullopt));
  CHECK(table.find("algorithm") == 0);
  CHECK(table.find("pso") != std::string::npos);
  CHECK(table.find("12.64000") != std::string::npos);
}

TEST_CASE("parse_experiment_spec reads a full spec") {
  const auto spec = parse_experiment_spec(kSmallSpec);
  CHECK(spec.instance_source == "builtin");
  CHECK(spec.runs_per_algorithm == 3);
  CHECK(spec.base_seed == 7);
  REQUIRE(spec.reference_cost.has_value());
  REQUIRE(spec.algorithms.size() == 3);
  CHECK(spec.algorithms[0].kind() == AlgorithmKind::kSa);
  CHECK(std::get<SaConfig>(spec.algorithms[0].config).cooling == 0.9);
  const auto& pso = std::get<SwarmConfig>(spec.algorithms[1].config);
  CHECK(pso.n_particles == 10);
  CHECK(pso.local_search == LocalSearchScope::kTwoOptAll);
  CHECK(pso.c1 == 2.0);
  CHECK(std::get<GaConfig>(spec.algorithms[2].config).population == 10);

  const auto rel = parse_experiment_spec(R"({"instance": "data/x.tsp", "algorithms": [{"name": "a", "kind": "sa"}]})",
                                         "/base");
  CHECK(std::filesystem::path(rel.instance_source) == std::filesystem::path("/base/data/x.tsp"));
  CHECK(rel.runs_per_algorithm == 1);
}

TEST_CASE("parse_experiment_spec rejects bad specs") {
  const char* bad[] = {
      R"({"algorithms": []})",
      R"({"algorithms": [{"name": "a", "kind": "aco"}]})",
      R"({"algorithms": [{"name": "a", "kind": "pso", "config": {"particles": 3}}]})",
      R"({"algorithms": [{"name": "a", "kind": "pso"}], "extra": 1})",
      R"({"algorithms": [{"name": "a", "kind": "pso"}, {"name": "a", "kind": "ga"}]})",
      R"({"runs": 0, "algorithms": [{"name": "a", "kind": "pso"}]})",
      R"({"runs": -1, "algorithms": [{"name": "a", "kind": "pso"}]})",
      R"({"algorithms": [{"name": "a", "kind": "pso", "config": {"w": "high"}}]})",
      R"({"algorithms": [{"name": "a", "kind": "ga", "config": {"elitism": 100}}]})",
      R"({"algorithms": [{"name": "a", "kind": "pso", "config": {"local_search": "lk"}}]})",
      R"(not json)",
      R"([1, 2])",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_experiment_spec(text), ConfigError);
  }
}

TEST_CASE("bundled specs parse") {
  for (const char* name : {"paper_reproduction.json", "berlin52_comparison.json"}) {
    CAPTURE(name);
    const auto spec = load_experiment_spec(std::filesystem::path(SWARMTSP_SPECS_DIR) / name);
    CHECK_FALSE(spec.algorithms.empty());
    CHECK_NOTHROW(load_experiment_instance(spec));
  }
}

TEST_CASE("run_experiment is deterministic and independent of thread count") {
  const auto spec = parse_experiment_spec(kSmallSpec);
  const auto one = run_experiment(spec, 1);
  const auto four = run_experiment(spec, 4);
  REQUIRE(one.size() == 9);
  REQUIRE(four.size() == 9);
  CHECK(strip_wall_time(emit_csv(one)) == strip_wall_time(emit_csv(four)));
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].best_tour == four[k].best_tour);
    CHECK(one[k].cost_history == four[k].cost_history);
  }
  CHECK(one[0].algorithm == "ga");
  CHECK(one[3].algorithm == "pso");
  CHECK(one[6].algorithm == "sa");
  for (std::size_t k = 0; k < 3; ++k) CHECK(one[k].seed == 7 + k);

  const auto inst = builtin_instance();
  const auto m = build_distance_matrix(inst);
  for (const auto& r : one) CHECK(r.best_cost == tour_length(r.best_tour, m));
}

TEST_CASE("a single run uses the base seed") {
  auto spec = parse_experiment_spec(R"({"runs": 1, "base_seed": 42, "algorithms": [{"name": "p", "kind": "pso",
                                       "config": {"max_iter": 5}}]})");
  const auto recs = run_experiment(spec, builtin_instance(), 2);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].seed == 42);
  SwarmConfig cfg = std::get<SwarmConfig>(spec.algorithms[0].config);
  cfg.seed = 42;
  CHECK(recs[0].best_tour == run_pso(builtin_instance(), cfg).best_tour);
}

TEST_CASE("algorithm kind names") {
  for (auto k : {AlgorithmKind::kPso, AlgorithmKind::kGa, AlgorithmKind::kSa}) CHECK(parse_algorithm_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_algorithm_kind("PSO"), ConfigError);
}
