#include "swarmtsp/pso.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "swarmtsp/error.hpp"
#include "swarmtsp/localsearch.hpp"

namespace swarmtsp {

SwapSequence swap_difference(const Tour& from, const Tour& to) {
  const std::size_t n = from.size();
  if (to.size() != n) {
    throw DimensionError("swap_difference: tours of size " + std::to_string(n) + " and " + std::to_string(to.size()));
  }
  std::vector<std::size_t> work(from.begin(), from.end());
  std::vector<std::size_t> where(n);  // city -> position in work
  for (std::size_t k = 0; k < n; ++k) where[work[k]] = k;

  SwapSequence s;
  for (std::size_t k = 0; k < n; ++k) {
    if (work[k] == to[k]) continue;
    const std::size_t p = where[to[k]];
    s.swaps.push_back({k, p});
    where[work[k]] = p;
    where[work[p]] = k;
    std::swap(work[k], work[p]);
  }
  return s;
}

Tour apply_swaps(Tour tour, const SwapSequence& s) {
  for (const Swap& sw : s.swaps) {
    if (sw.i >= tour.size() || sw.j >= tour.size()) {
      throw VelocityError("swap (" + std::to_string(sw.i) + ", " + std::to_string(sw.j) +
                          ") out of range for tour of size " + std::to_string(tour.size()));
    }
    tour.swap_positions(sw.i, sw.j);
  }
  return tour;
}

SwapSequence stochastic_scale(const SwapSequence& s, double coefficient, Rng& rng) {
  if (!std::isfinite(coefficient) || coefficient < 0.0) {
    throw ConfigError("velocity coefficient must be finite and non-negative");
  }
  const double r = rng.uniform();
  const double round_up = rng.uniform();
  const auto length = static_cast<double>(s.size());
  const double target = std::min(coefficient * r * length, length);
  auto keep = static_cast<std::size_t>(std::floor(target));
  if (round_up < target - std::floor(target)) ++keep;
  keep = std::min(keep, s.size());
  return SwapSequence{{s.swaps.begin(), s.swaps.begin() + static_cast<std::ptrdiff_t>(keep)}};
}

std::string_view to_string(LocalSearchScope scope) {
  switch (scope) {
    case LocalSearchScope::kNone: return "none";
    case LocalSearchScope::kTwoOptGbest: return "2opt-gbest";
    case LocalSearchScope::kTwoOptAll: return "2opt-all";
    case LocalSearchScope::kThreeOptGbest: return "3opt-gbest";
  }
  return "none";
}

LocalSearchScope parse_local_search(std::string_view name) {
  for (auto scope : {LocalSearchScope::kNone, LocalSearchScope::kTwoOptGbest, LocalSearchScope::kTwoOptAll,
                     LocalSearchScope::kThreeOptGbest}) {
    if (to_string(scope) == name) return scope;
  }
  throw ConfigError("unknown local search '" + std::string(name) +
                    "' (expected none, 2opt-gbest, 2opt-all or 3opt-gbest)");
}

void SwarmConfig::validate() const {
  if (n_particles < 1) throw ConfigError("n_particles must be >= 1");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (!(w >= 0.0 && w <= 1.0)) throw ConfigError("inertia w must lie in [0, 1]");
  if (!std::isfinite(c1) || c1 < 0.0) throw ConfigError("c1 must be finite and >= 0");
  if (!std::isfinite(c2) || c2 < 0.0) throw ConfigError("c2 must be finite and >= 0");
  if (w_schedule == InertiaSchedule::kLinearDecay && !(w_end >= 0.0 && w_end <= w)) {
    throw ConfigError("linear inertia decay requires 0 <= w_end <= w");
  }
  if (stagnation_limit && *stagnation_limit < 1) throw ConfigError("stagnation_limit must be >= 1");
}

double inertia_at(const SwarmConfig& cfg, std::size_t iteration) {
  if (cfg.w_schedule == InertiaSchedule::kConstant || cfg.max_iter <= 1) return cfg.w;
  const double fraction = static_cast<double>(iteration) / static_cast<double>(cfg.max_iter - 1);
  return cfg.w + (cfg.w_end - cfg.w) * fraction;
}

SwapSequence velocity_update(const Particle& p, const Tour& gbest, double w_now, double c1, double c2, Rng& rng) {
  const std::size_t n = p.position.size();
  if (p.pbest.size() != n || gbest.size() != n) throw DimensionError("velocity_update: tour sizes differ");

  SwapSequence v = stochastic_scale(p.velocity, w_now, rng);
  const SwapSequence cognitive = stochastic_scale(swap_difference(p.position, p.pbest), c1, rng);
  const SwapSequence social = stochastic_scale(swap_difference(p.position, gbest), c2, rng);
  v.swaps.insert(v.swaps.end(), cognitive.swaps.begin(), cognitive.swaps.end());
  v.swaps.insert(v.swaps.end(), social.swaps.begin(), social.swaps.end());
  if (v.swaps.size() > 2 * n) v.swaps.resize(2 * n);
  return v;
}

namespace {

std::size_t owner_of_gbest(const SwarmState& state) {
  for (std::size_t i = 0; i < state.particles.size(); ++i) {
    if (state.particles[i].pbest_cost == state.gbest_cost && state.particles[i].pbest == state.gbest) return i;
  }
  return state.particles.size();
}

}  // namespace

SwarmState initialize_swarm(const DistanceMatrix& m, const SwarmConfig& cfg, Rng& rng) {
  cfg.validate();
  const std::size_t n = m.size();
  SwarmState state{{}, Tour::identity(n), 0.0, 0, {}, 0};
  state.particles.reserve(cfg.n_particles);
  for (std::size_t i = 0; i < cfg.n_particles; ++i) {
    Tour start = (i == 0 && cfg.nearest_neighbor_seed) ? nearest_neighbor_tour(m, 0) : random_tour(n, rng);
    const double cost = tour_length(start, m);
    ++state.evaluations;
    state.particles.push_back(Particle{start, {}, start, cost});
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < state.particles.size(); ++i) {
    if (state.particles[i].pbest_cost < state.particles[best].pbest_cost) best = i;
  }
  state.gbest = state.particles[best].pbest;
  state.gbest_cost = state.particles[best].pbest_cost;
  return state;
}

void step(SwarmState& state, const SwarmConfig& cfg, const DistanceMatrix& m, Rng& rng) {
  const double w_now = inertia_at(cfg, state.iteration);
  for (Particle& p : state.particles) {
    p.velocity = velocity_update(p, state.gbest, w_now, cfg.c1, cfg.c2, rng);
    p.position = apply_swaps(std::move(p.position), p.velocity);
    if (cfg.local_search == LocalSearchScope::kTwoOptAll) p.position = two_opt(std::move(p.position), m);

    const double cost = tour_length(p.position, m);
    ++state.evaluations;
    if (cost < p.pbest_cost) {
      p.pbest = p.position;
      p.pbest_cost = cost;
    }
    if (p.pbest_cost < state.gbest_cost) {
      state.gbest = p.pbest;
      state.gbest_cost = p.pbest_cost;
    }
  }

  if (cfg.local_search == LocalSearchScope::kTwoOptGbest || cfg.local_search == LocalSearchScope::kThreeOptGbest) {
    Tour refined = cfg.local_search == LocalSearchScope::kTwoOptGbest ? two_opt(state.gbest, m)
                                                                       : three_opt(state.gbest, m);
    const double cost = tour_length(refined, m);
    ++state.evaluations;
    if (cost < state.gbest_cost) {
      // The refined tour replaces the owner's pbest so gbest stays the best pbest.
      const std::size_t owner = owner_of_gbest(state);
      state.gbest = refined;
      state.gbest_cost = cost;
      if (owner < state.particles.size()) {
        Particle& p = state.particles[owner];
        p.position = refined;
        p.pbest = std::move(refined);
        p.pbest_cost = cost;
      }
    }
  }

  state.cost_history.push_back(state.gbest_cost);
  ++state.iteration;
}

RunResult run_pso(const DistanceMatrix& m, const SwarmConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  cfg.validate();
  Rng rng(cfg.seed);
  SwarmState state = initialize_swarm(m, cfg, rng);

  std::size_t stale = 0;
  while (state.iteration < cfg.max_iter) {
    const double before = state.gbest_cost;
    step(state, cfg, m, rng);
    stale = state.gbest_cost < before ? 0 : stale + 1;
    if (cfg.stagnation_limit && stale >= *cfg.stagnation_limit) break;
  }

  RunResult result{canonicalize(state.gbest), 0.0, state.iteration, std::move(state.cost_history),
                   state.evaluations, 0.0};
  result.best_cost = tour_length(result.best_tour, m);
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

RunResult run_pso(const Instance& instance, const SwarmConfig& cfg) {
  return run_pso(build_distance_matrix(instance), cfg);
}

}  // namespace swarmtsp
