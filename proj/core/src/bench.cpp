#include "swarmtsp/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "json.hpp"
#include "swarmtsp/error.hpp"
#include "swarmtsp/tsplib.hpp"

namespace swarmtsp {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Reads the keys of `obj` into typed fields, rejecting anything unknown.
class FieldReader {
 public:
  FieldReader(const json& obj, std::string context) : obj_(obj), context_(std::move(context)) {
    if (!obj_.is_object()) throw ConfigError(context_ + ": expected a JSON object");
  }

  template <typename T>
  void read(const char* key, T& out) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end()) return;
    try {
      out = it->template get<T>();
    } catch (const json::exception&) {
      throw ConfigError(context_ + ": field '" + key + "' has the wrong type");
    }
  }

  template <typename T>
  void read_optional(const char* key, std::optional<T>& out) {
    seen_.insert(key);
    const auto it = obj_.find(key);
    if (it == obj_.end() || it->is_null()) return;
    T value{};
    read(key, value);
    out = value;
  }

  void reject_unknown() const {
    for (const auto& item : obj_.items()) {
      if (!seen_.count(item.key())) throw ConfigError(context_ + ": unknown field '" + item.key() + "'");
    }
  }

 private:
  const json& obj_;
  std::string context_;
  std::set<std::string> seen_;
};

// Counts and seeds come through JSON as numbers; reject negatives up front
// instead of letting them wrap.
void require_non_negative_integers(const json& obj, const std::string& context) {
  for (const auto& item : obj.items()) {
    if (item.value().is_number_integer() && item.value().get<long long>() < 0) {
      throw ConfigError(context + ": field '" + item.key() + "' must be non-negative");
    }
  }
}

SwarmConfig parse_pso_config(const json& obj, const std::string& context) {
  SwarmConfig cfg;
  require_non_negative_integers(obj, context);
  FieldReader r(obj, context);
  r.read("n_particles", cfg.n_particles);
  r.read("max_iter", cfg.max_iter);
  r.read("w", cfg.w);
  r.read("c1", cfg.c1);
  r.read("c2", cfg.c2);
  r.read("w_end", cfg.w_end);
  r.read_optional("stagnation_limit", cfg.stagnation_limit);
  r.read("nearest_neighbor_seed", cfg.nearest_neighbor_seed);
  std::string schedule = "constant";
  r.read("w_schedule", schedule);
  if (schedule == "constant") {
    cfg.w_schedule = InertiaSchedule::kConstant;
  } else if (schedule == "linear") {
    cfg.w_schedule = InertiaSchedule::kLinearDecay;
  } else {
    throw ConfigError(context + ": w_schedule must be 'constant' or 'linear'");
  }
  std::string local_search(to_string(cfg.local_search));
  r.read("local_search", local_search);
  cfg.local_search = parse_local_search(local_search);
  r.reject_unknown();
  return cfg;
}

GaConfig parse_ga_config(const json& obj, const std::string& context) {
  GaConfig cfg;
  require_non_negative_integers(obj, context);
  FieldReader r(obj, context);
  r.read("population", cfg.population);
  r.read("generations", cfg.generations);
  r.read("crossover_rate", cfg.crossover_rate);
  r.read("mutation_rate", cfg.mutation_rate);
  r.read("tournament_k", cfg.tournament_k);
  r.read("elitism", cfg.elitism);
  r.reject_unknown();
  return cfg;
}

SaConfig parse_sa_config(const json& obj, const std::string& context) {
  SaConfig cfg;
  require_non_negative_integers(obj, context);
  FieldReader r(obj, context);
  r.read_optional("initial_temp", cfg.initial_temp);
  r.read("cooling", cfg.cooling);
  r.read_optional("iters_per_temp", cfg.iters_per_temp);
  r.read_optional("min_temp", cfg.min_temp);
  r.reject_unknown();
  return cfg;
}

void validate_config(const AlgorithmConfig& config) {
  std::visit([](const auto& c) { c.validate(); }, config);
}

RunResult run_trial(const AlgorithmConfig& config, const DistanceMatrix& m, std::uint64_t seed) {
  return std::visit(
      [&](auto cfg) -> RunResult {
        cfg.seed = seed;
        using T = decltype(cfg);
        if constexpr (std::is_same_v<T, SwarmConfig>) {
          return run_pso(m, cfg);
        } else if constexpr (std::is_same_v<T, GaConfig>) {
          return run_ga(m, cfg);
        } else {
          return run_sa(m, cfg);
        }
      },
      config);
}

std::string cost5(double v) { return fmt::format("{:.5f}", v); }

}  // namespace

std::string_view to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::kPso: return "pso";
    case AlgorithmKind::kGa: return "ga";
    case AlgorithmKind::kSa: return "sa";
  }
  return "pso";
}

AlgorithmKind parse_algorithm_kind(std::string_view name) {
  if (name == "pso") return AlgorithmKind::kPso;
  if (name == "ga") return AlgorithmKind::kGa;
  if (name == "sa") return AlgorithmKind::kSa;
  throw ConfigError("unknown algorithm kind '" + std::string(name) + "' (expected pso, ga or sa)");
}

void ExperimentSpec::validate() const {
  if (algorithms.empty()) throw ConfigError("experiment lists no algorithms");
  if (runs_per_algorithm < 1) throw ConfigError("runs must be >= 1");
  std::set<std::string> names;
  for (const auto& alg : algorithms) {
    if (alg.name.empty()) throw ConfigError("algorithm name must not be empty");
    if (!names.insert(alg.name).second) throw ConfigError("duplicate algorithm name '" + alg.name + "'");
    validate_config(alg.config);
  }
  if (reference_cost && !(std::isfinite(*reference_cost) && *reference_cost > 0.0)) {
    throw ConfigError("reference_cost must be finite and > 0");
  }
}

ExperimentSpec parse_experiment_spec(std::string_view json_text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("experiment spec is not valid JSON: ") + e.what());
  }
  ExperimentSpec spec;
  require_non_negative_integers(doc, "experiment");
  FieldReader r(doc, "experiment");
  r.read("instance", spec.instance_source);
  r.read("runs", spec.runs_per_algorithm);
  r.read("base_seed", spec.base_seed);
  r.read_optional("reference_cost", spec.reference_cost);
  json algorithms = json::array();
  r.read("algorithms", algorithms);
  r.reject_unknown();

  if (spec.instance_source != kBuiltinInstance) {
    std::filesystem::path p(spec.instance_source);
    if (p.is_relative() && !base_dir.empty()) spec.instance_source = (base_dir / p).lexically_normal().string();
  }
  if (!algorithms.is_array()) throw ConfigError("experiment: 'algorithms' must be an array");

  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    const std::string context = "algorithms[" + std::to_string(i) + "]";
    std::string name;
    std::string kind;
    json config = json::object();
    FieldReader ar(algorithms[i], context);
    ar.read("name", name);
    ar.read("kind", kind);
    ar.read("config", config);
    ar.reject_unknown();
    if (name.empty()) name = kind;
    const std::string config_context = context + ".config";
    switch (parse_algorithm_kind(kind)) {
      case AlgorithmKind::kPso: spec.algorithms.push_back({name, parse_pso_config(config, config_context)}); break;
      case AlgorithmKind::kGa: spec.algorithms.push_back({name, parse_ga_config(config, config_context)}); break;
      case AlgorithmKind::kSa: spec.algorithms.push_back({name, parse_sa_config(config, config_context)}); break;
    }
  }
  spec.validate();
  return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open experiment spec '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_experiment_spec(buffer.str(), path.parent_path());
}

Instance load_experiment_instance(const ExperimentSpec& spec) {
  if (spec.instance_source == kBuiltinInstance) return builtin_instance();
  return load_instance_file(spec.instance_source).instance;
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec, const Instance& instance, std::size_t threads) {
  spec.validate();
  const DistanceMatrix m = build_distance_matrix(instance);

  struct Job {
    std::size_t algorithm;
    std::size_t run;
  };
  std::vector<Job> jobs;
  for (std::size_t a = 0; a < spec.algorithms.size(); ++a) {
    for (std::size_t r = 0; r < spec.runs_per_algorithm; ++r) jobs.push_back({a, r});
  }

  std::vector<std::optional<TrialRecord>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= jobs.size()) return;
      try {
        const auto& alg = spec.algorithms[jobs[idx].algorithm];
        const std::uint64_t seed = spec.base_seed + jobs[idx].run;
        RunResult res = run_trial(alg.config, m, seed);
        if (tour_length(res.best_tour, m) != res.best_cost) {
          throw Error("audit failed: " + alg.name + " run " + std::to_string(jobs[idx].run) +
                      " reported a cost that does not match its tour");
        }
        slots[idx] = TrialRecord{alg.name,        jobs[idx].run,         seed,           res.best_cost,
                                 res.best_tour,   res.iterations_run,    res.evaluations, res.wall_time,
                                 std::move(res.cost_history)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<TrialRecord> records;
  records.reserve(slots.size());
  for (auto& slot : slots) records.push_back(std::move(*slot));
  std::sort(records.begin(), records.end(), [](const TrialRecord& a, const TrialRecord& b) {
    return a.algorithm != b.algorithm ? a.algorithm < b.algorithm : a.run_index < b.run_index;
  });
  return records;
}

std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec, std::size_t threads) {
  return run_experiment(spec, load_experiment_instance(spec), threads);
}

std::vector<SummaryStats> summarize(const std::vector<TrialRecord>& records, std::optional<double> reference) {
  if (records.empty()) throw EmptyInputError("summarize: no trial records");
  std::map<std::string, std::vector<double>> by_algorithm;
  for (const auto& r : records) by_algorithm[r.algorithm].push_back(r.best_cost);

  std::vector<SummaryStats> out;
  for (auto& [name, costs] : by_algorithm) {
    // Sorting fixes the summation order, so the result ignores input order.
    std::sort(costs.begin(), costs.end());
    const auto count = static_cast<double>(costs.size());
    double sum = 0.0;
    for (double c : costs) sum += c;
    const double mean = sum / count;
    double ss = 0.0;
    for (double c : costs) ss += (c - mean) * (c - mean);
    SummaryStats s;
    s.algorithm = name;
    s.runs = costs.size();
    s.mean = mean;
    s.sample_std = costs.size() > 1 ? std::sqrt(ss / (count - 1.0)) : 0.0;
    s.best = costs.front();
    s.worst = costs.back();
    // Clamp rounding so best <= mean <= worst holds exactly.
    s.mean = std::clamp(s.mean, s.best, s.worst);
    if (reference) s.gap_percent = 100.0 * (s.best - *reference) / *reference;
    out.push_back(std::move(s));
  }
  return out;
}

std::string emit_csv(const std::vector<TrialRecord>& records) {
  std::string out = "algorithm,run_index,seed,best_cost,iterations,evaluations,wall_time_s\n";
  for (const auto& r : records) {
    out += fmt::format("{},{},{},{},{},{},{:.6f}\n", r.algorithm, r.run_index, r.seed, cost5(r.best_cost), r.iterations,
                       r.evaluations, r.wall_time);
  }
  return out;
}

std::string emit_json(const std::vector<TrialRecord>& records, const std::vector<SummaryStats>& stats) {
  ordered_json doc;
  doc["records"] = ordered_json::array();
  for (const auto& r : records) {
    ordered_json rec;
    rec["algorithm"] = r.algorithm;
    rec["run_index"] = r.run_index;
    rec["seed"] = r.seed;
    rec["best_cost"] = r.best_cost;
    rec["best_tour"] = std::vector<std::size_t>(r.best_tour.begin(), r.best_tour.end());
    rec["iterations"] = r.iterations;
    rec["evaluations"] = r.evaluations;
    rec["wall_time_s"] = r.wall_time;
    doc["records"].push_back(std::move(rec));
  }
  doc["summary"] = ordered_json::array();
  for (const auto& s : stats) {
    ordered_json item;
    item["algorithm"] = s.algorithm;
    item["runs"] = s.runs;
    item["mean"] = s.mean;
    item["sample_std"] = s.sample_std;
    item["best"] = s.best;
    item["worst"] = s.worst;
    item["gap_percent"] = s.gap_percent ? ordered_json(*s.gap_percent) : ordered_json(nullptr);
    doc["summary"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string format_summary_table(const std::vector<SummaryStats>& stats) {
  std::string out = fmt::format("{:<12} {:>5} {:>12} {:>12} {:>12} {:>12} {:>9}\n", "algorithm", "runs", "mean",
                                "sample_std", "best", "worst", "gap_%");
  for (const auto& s : stats) {
    out += fmt::format("{:<12} {:>5} {:>12.5f} {:>12.5f} {:>12.5f} {:>12.5f} {:>9}\n", s.algorithm, s.runs, s.mean,
                       s.sample_std, s.best, s.worst, s.gap_percent ? fmt::format("{:.3f}", *s.gap_percent) : "-");
  }
  return out;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("SWARMTSP_THREADS")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace swarmtsp
