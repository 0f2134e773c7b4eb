#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "swarmtsp/instance.hpp"
#include "swarmtsp/random.hpp"

namespace swarmtsp {

/// Transposition of two tour positions.
struct Swap {
  std::size_t i = 0;
  std::size_t j = 0;

  bool operator==(const Swap&) const = default;
};

/// Discrete particle velocity: transpositions applied left to right.
struct SwapSequence {
  std::vector<Swap> swaps;

  std::size_t size() const noexcept { return swaps.size(); }
  bool empty() const noexcept { return swaps.empty(); }

  bool operator==(const SwapSequence&) const = default;
};

/// Sequence s with apply_swaps(from, s) == to, built by a selection pass:
/// for each position k, if the city there differs from to[k], swap in the
/// position currently holding to[k]. At most n-1 swaps; empty when from == to.
SwapSequence swap_difference(const Tour& from, const Tour& to);

/// Applies the swaps in order. Throws VelocityError on an out-of-range index.
Tour apply_swaps(Tour tour, const SwapSequence& s);

/// Keeps a random-length prefix of `s` whose expected length is
/// coefficient * r * |s| (capped at |s|), r ~ U[0,1).
///
/// Always consumes two uniforms from `rng`: r, then the draw that rounds the
/// fractional part of the target length up or down.
SwapSequence stochastic_scale(const SwapSequence& s, double coefficient, Rng& rng);

struct Particle {
  Tour position;
  SwapSequence velocity;
  Tour pbest;
  double pbest_cost = 0.0;
};

enum class InertiaSchedule { kConstant, kLinearDecay };

enum class LocalSearchScope {
  kNone,
  kTwoOptGbest,    ///< 2-opt on the global best once per iteration
  kTwoOptAll,      ///< 2-opt on every particle after it moves
  kThreeOptGbest,  ///< 3-opt on the global best once per iteration
};

/// "none", "2opt-gbest", "2opt-all", "3opt-gbest".
std::string_view to_string(LocalSearchScope scope);
/// Inverse of to_string; throws ConfigError on unknown names.
LocalSearchScope parse_local_search(std::string_view name);

struct SwarmConfig {
  std::size_t n_particles = 30;
  std::size_t max_iter = 100;
  double w = 0.8;
  double c1 = 2.0;
  double c2 = 2.0;
  InertiaSchedule w_schedule = InertiaSchedule::kConstant;
  double w_end = 0.4;  ///< final inertia under kLinearDecay
  LocalSearchScope local_search = LocalSearchScope::kTwoOptGbest;
  std::uint64_t seed = 0;
  std::optional<std::size_t> stagnation_limit;
  bool nearest_neighbor_seed = false;  ///< particle 0 starts from the greedy tour

  /// Throws ConfigError when a field is out of range.
  void validate() const;
};

struct SwarmState {
  std::vector<Particle> particles;
  Tour gbest;
  double gbest_cost = 0.0;
  std::size_t iteration = 0;
  std::vector<double> cost_history;  ///< gbest_cost after each step
  std::size_t evaluations = 0;       ///< full tour-length evaluations so far
};

struct RunResult {
  Tour best_tour;  ///< canonical form
  double best_cost = 0.0;
  std::size_t iterations_run = 0;
  std::vector<double> cost_history;
  std::size_t evaluations = 0;
  double wall_time = 0.0;  ///< seconds
};

/// Inertia weight for a 0-based iteration.
double inertia_at(const SwarmConfig& cfg, std::size_t iteration);

/// Concatenates the scaled inertia, cognitive and social terms (drawn in that
/// order) and truncates the result to 2n swaps.
SwapSequence velocity_update(const Particle& p, const Tour& gbest, double w_now, double c1, double c2, Rng& rng);

/// Random initial positions (particle order, one shared stream), empty
/// velocities, pbest = position, gbest = first particle with the lowest cost.
SwarmState initialize_swarm(const DistanceMatrix& m, const SwarmConfig& cfg, Rng& rng);

/// One iteration over all particles in index order. pbest and gbest only move
/// on strict improvement.
void step(SwarmState& state, const SwarmConfig& cfg, const DistanceMatrix& m, Rng& rng);

/// Full optimisation: initialise from cfg.seed, step up to max_iter times
/// (or until stagnation_limit non-improving iterations), return canonical gbest.
RunResult run_pso(const Instance& instance, const SwarmConfig& cfg);
RunResult run_pso(const DistanceMatrix& m, const SwarmConfig& cfg);

}  // namespace swarmtsp
