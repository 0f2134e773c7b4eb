#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "swarmtsp/instance.hpp"
#include "swarmtsp/pso.hpp"
#include "swarmtsp/random.hpp"

namespace swarmtsp {

struct GaConfig {
  std::size_t population = 50;
  std::size_t generations = 200;
  double crossover_rate = 0.9;
  double mutation_rate = 0.2;
  std::size_t tournament_k = 3;
  std::size_t elitism = 2;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SaConfig {
  std::optional<double> initial_temp;         ///< nullopt: spread of sampled neighbour deltas
  double cooling = 0.995;                     ///< geometric factor per temperature level
  std::optional<std::size_t> iters_per_temp;  ///< nullopt: n * n
  std::optional<double> min_temp;             ///< nullopt: initial_temp * 1e-3
  std::uint64_t seed = 0;

  void validate() const;
};

/// OX1: the child keeps p1[cut_l, cut_r) in place and fills the remaining
/// positions, starting at cut_r and wrapping, with p2's cities read cyclically
/// from cut_r, skipping those already copied.
/// Throws ConfigError unless 0 <= cut_l < cut_r <= n; DimensionError on size mismatch.
Tour order_crossover(const Tour& p1, const Tour& p2, std::size_t cut_l, std::size_t cut_r);

/// Swaps two distinct uniformly drawn positions. Requires n >= 2.
Tour swap_mutation(Tour t, Rng& rng);

/// Metropolis rule. Improving moves are accepted without consuming a draw.
bool sa_accept(double delta, double temp, Rng& rng);

/// initial * factor^level.
double geometric_temperature(double initial, double factor, std::size_t level);

/// Generational GA with elitism, k-tournament selection, OX1 and swap mutation.
/// cost_history holds the best-ever cost after each generation.
RunResult run_ga(const Instance& instance, const GaConfig& cfg);
RunResult run_ga(const DistanceMatrix& m, const GaConfig& cfg);

/// Simulated annealing over random 2-opt reversals with geometric cooling.
/// cost_history holds the best-ever cost after each temperature level.
RunResult run_sa(const Instance& instance, const SaConfig& cfg);
RunResult run_sa(const DistanceMatrix& m, const SaConfig& cfg);

}  // namespace swarmtsp
