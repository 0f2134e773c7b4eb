#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "swarmtsp/baselines.hpp"
#include "swarmtsp/instance.hpp"
#include "swarmtsp/pso.hpp"

namespace swarmtsp {

enum class AlgorithmKind { kPso, kGa, kSa };

std::string_view to_string(AlgorithmKind kind);
/// "pso", "ga" or "sa"; throws ConfigError otherwise.
AlgorithmKind parse_algorithm_kind(std::string_view name);

using AlgorithmConfig = std::variant<SwarmConfig, GaConfig, SaConfig>;

struct AlgorithmSpec {
  std::string name;
  AlgorithmConfig config;  ///< the seed field is overwritten per trial

  AlgorithmKind kind() const noexcept { return static_cast<AlgorithmKind>(config.index()); }
};

/// Marker accepted in `ExperimentSpec::instance_source` for the bundled 5-city instance.
inline constexpr std::string_view kBuiltinInstance = "builtin";

struct ExperimentSpec {
  std::string instance_source = std::string(kBuiltinInstance);  ///< file path or kBuiltinInstance
  std::vector<AlgorithmSpec> algorithms;
  std::size_t runs_per_algorithm = 1;
  std::uint64_t base_seed = 0;
  std::optional<double> reference_cost;

  /// Throws ConfigError (no algorithms, duplicate names, zero runs, bad configs).
  void validate() const;
};

struct TrialRecord {
  std::string algorithm;
  std::size_t run_index = 0;
  std::uint64_t seed = 0;
  double best_cost = 0.0;
  Tour best_tour;
  std::size_t iterations = 0;
  std::size_t evaluations = 0;
  double wall_time = 0.0;
  std::vector<double> cost_history;
};

struct SummaryStats {
  std::string algorithm;
  std::size_t runs = 0;
  double mean = 0.0;
  double sample_std = 0.0;
  double best = 0.0;
  double worst = 0.0;
  std::optional<double> gap_percent;
};

/// Parses a JSON experiment spec:
///
///     {
///       "instance": "builtin" | "relative/or/absolute/path.tsp",
///       "runs": 5, "base_seed": 0, "reference_cost": 15.15298,
///       "algorithms": [
///         {"name": "pso", "kind": "pso", "config": {"n_particles": 30, ...}},
///         {"name": "ga", "kind": "ga", "config": {...}}
///       ]
///     }
///
/// Relative instance paths resolve against `base_dir`. Unknown keys are
/// rejected. Throws ConfigError.
ExperimentSpec parse_experiment_spec(std::string_view json_text, const std::filesystem::path& base_dir = {});
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

/// Loads `spec.instance_source` (ParseError propagates).
Instance load_experiment_instance(const ExperimentSpec& spec);

/// Runs every (algorithm, run) trial; run i uses seed base_seed + i. Trials may
/// run on `threads` workers; the result is sorted by (algorithm, run_index) and
/// identical for any thread count. Each record's best_cost is re-audited
/// against the instance.
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec, const Instance& instance, std::size_t threads = 1);
std::vector<TrialRecord> run_experiment(const ExperimentSpec& spec, std::size_t threads = 1);

/// One entry per algorithm, sorted by name. Independent of input order.
/// Throws EmptyInputError on an empty list.
std::vector<SummaryStats> summarize(const std::vector<TrialRecord>& records, std::optional<double> reference);

/// Header `algorithm,run_index,seed,best_cost,iterations,evaluations,wall_time_s`,
/// one row per record, LF endings, costs with 5 decimals.
std::string emit_csv(const std::vector<TrialRecord>& records);

/// `{"records": [...], "summary": [...]}` with fixed key order.
std::string emit_json(const std::vector<TrialRecord>& records, const std::vector<SummaryStats>& stats);

/// Fixed-width table for terminals.
std::string format_summary_table(const std::vector<SummaryStats>& stats);

/// Worker count from SWARMTSP_THREADS, falling back to hardware concurrency.
std::size_t default_thread_count();

}  // namespace swarmtsp
