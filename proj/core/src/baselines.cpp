#include "swarmtsp/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "swarmtsp/error.hpp"
#include "swarmtsp/localsearch.hpp"

namespace swarmtsp {

void GaConfig::validate() const {
  if (population < 1) throw ConfigError("GA population must be >= 1");
  if (generations < 1) throw ConfigError("GA generations must be >= 1");
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) throw ConfigError("crossover_rate must lie in [0, 1]");
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) throw ConfigError("mutation_rate must lie in [0, 1]");
  if (tournament_k < 1 || tournament_k > population) throw ConfigError("tournament_k must lie in [1, population]");
  if (elitism > population) throw ConfigError("elitism must not exceed population");
}

void SaConfig::validate() const {
  if (initial_temp && !(std::isfinite(*initial_temp) && *initial_temp > 0.0)) {
    throw ConfigError("initial_temp must be finite and > 0");
  }
  if (!(cooling > 0.0 && cooling < 1.0)) throw ConfigError("cooling must lie in (0, 1)");
  if (iters_per_temp && *iters_per_temp < 1) throw ConfigError("iters_per_temp must be >= 1");
  if (min_temp && !(std::isfinite(*min_temp) && *min_temp > 0.0)) throw ConfigError("min_temp must be finite and > 0");
  if (initial_temp && min_temp && !(*min_temp < *initial_temp)) throw ConfigError("min_temp must be below initial_temp");
}

Tour order_crossover(const Tour& p1, const Tour& p2, std::size_t cut_l, std::size_t cut_r) {
  const std::size_t n = p1.size();
  if (p2.size() != n) throw DimensionError("order_crossover: parents differ in size");
  if (!(cut_l < cut_r && cut_r <= n)) {
    throw ConfigError("order_crossover: cuts must satisfy 0 <= cut_l < cut_r <= n (got " + std::to_string(cut_l) +
                      ", " + std::to_string(cut_r) + ")");
  }
  std::vector<std::size_t> child(n);
  std::vector<bool> taken(n, false);
  for (std::size_t k = cut_l; k < cut_r; ++k) {
    child[k] = p1[k];
    taken[p1[k]] = true;
  }
  std::size_t write = cut_r % n;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t city = p2[(cut_r + k) % n];
    if (taken[city]) continue;
    child[write] = city;
    write = (write + 1) % n;
  }
  return Tour(std::move(child));
}

Tour swap_mutation(Tour t, Rng& rng) {
  const std::size_t n = t.size();
  if (n < 2) throw DimensionError("swap_mutation needs at least two cities");
  const std::size_t i = rng.below(n);
  std::size_t j = rng.below(n - 1);
  if (j >= i) ++j;
  t.swap_positions(i, j);
  return t;
}

bool sa_accept(double delta, double temp, Rng& rng) {
  if (!(temp > 0.0)) throw ConfigError("temperature must be > 0");
  if (delta < 0.0) return true;
  return rng.uniform() < std::exp(-delta / temp);
}

double geometric_temperature(double initial, double factor, std::size_t level) {
  return initial * std::pow(factor, static_cast<double>(level));
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::size_t tournament(const std::vector<double>& costs, std::size_t k, Rng& rng) {
  std::size_t winner = rng.below(costs.size());
  for (std::size_t draw = 1; draw < k; ++draw) {
    const std::size_t c = rng.below(costs.size());
    if (costs[c] < costs[winner] || (costs[c] == costs[winner] && c < winner)) winner = c;
  }
  return winner;
}

}  // namespace

RunResult run_ga(const DistanceMatrix& m, const GaConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  cfg.validate();
  Rng rng(cfg.seed);
  const std::size_t n = m.size();

  std::vector<Tour> pop;
  std::vector<double> costs;
  pop.reserve(cfg.population);
  for (std::size_t i = 0; i < cfg.population; ++i) {
    pop.push_back(random_tour(n, rng));
    costs.push_back(tour_length(pop.back(), m));
  }
  std::size_t evaluations = cfg.population;
  const auto first_best = static_cast<std::size_t>(std::min_element(costs.begin(), costs.end()) - costs.begin());
  Tour best = pop[first_best];
  double best_cost = costs[first_best];

  std::vector<double> history;
  history.reserve(cfg.generations);
  std::vector<std::size_t> rank(cfg.population);

  for (std::size_t gen = 0; gen < cfg.generations; ++gen) {
    std::iota(rank.begin(), rank.end(), std::size_t{0});
    std::stable_sort(rank.begin(), rank.end(), [&](std::size_t a, std::size_t b) { return costs[a] < costs[b]; });

    std::vector<Tour> next;
    std::vector<double> next_costs;
    next.reserve(cfg.population);
    next_costs.reserve(cfg.population);
    for (std::size_t e = 0; e < cfg.elitism; ++e) {
      next.push_back(pop[rank[e]]);
      next_costs.push_back(costs[rank[e]]);
    }
    while (next.size() < cfg.population) {
      const std::size_t a = tournament(costs, cfg.tournament_k, rng);
      const std::size_t b = tournament(costs, cfg.tournament_k, rng);
      Tour child = pop[a];
      if (rng.uniform() < cfg.crossover_rate) {
        const std::size_t cut_l = rng.below(n);
        const std::size_t cut_r = cut_l + 1 + rng.below(n - cut_l);
        child = order_crossover(pop[a], pop[b], cut_l, cut_r);
      }
      if (n >= 2 && rng.uniform() < cfg.mutation_rate) child = swap_mutation(std::move(child), rng);
      next_costs.push_back(tour_length(child, m));
      ++evaluations;
      next.push_back(std::move(child));
    }
    pop = std::move(next);
    costs = std::move(next_costs);

    for (std::size_t i = 0; i < pop.size(); ++i) {
      if (costs[i] < best_cost) {
        best_cost = costs[i];
        best = pop[i];
      }
    }
    history.push_back(best_cost);
  }

  RunResult result{canonicalize(best), 0.0, cfg.generations, std::move(history), evaluations, 0.0};
  result.best_cost = tour_length(result.best_tour, m);
  result.wall_time = seconds_since(started);
  return result;
}

RunResult run_ga(const Instance& instance, const GaConfig& cfg) { return run_ga(build_distance_matrix(instance), cfg); }

RunResult run_sa(const DistanceMatrix& m, const SaConfig& cfg) {
  const auto started = std::chrono::steady_clock::now();
  cfg.validate();
  Rng rng(cfg.seed);
  const std::size_t n = m.size();

  Tour tour = random_tour(n, rng);
  double cost = tour_length(tour, m);
  std::size_t evaluations = 1;
  Tour best = tour;
  double best_cost = cost;
  std::vector<double> history;
  std::size_t level = 0;

  // Below four cities every tour is the same cycle.
  if (n >= 4) {
    auto draw_move = [&] {
      const std::size_t i = rng.below(n);
      std::size_t j = rng.below(n - 1);
      if (j >= i) ++j;
      return std::pair{std::min(i, j), std::max(i, j)};
    };

    double t0 = 0.0;
    if (cfg.initial_temp) {
      t0 = *cfg.initial_temp;
    } else {
      constexpr std::size_t kSamples = 100;
      std::vector<double> deltas;
      deltas.reserve(kSamples);
      for (std::size_t s = 0; s < kSamples; ++s) {
        const auto [first, last] = draw_move();
        deltas.push_back(reversal_delta(tour, m, first, last));
      }
      const double mean = std::accumulate(deltas.begin(), deltas.end(), 0.0) / kSamples;
      double ss = 0.0;
      for (double d : deltas) ss += (d - mean) * (d - mean);
      t0 = std::sqrt(ss / (kSamples - 1));
      if (!(t0 > 0.0)) t0 = 1.0;
    }
    const double min_temp = cfg.min_temp.value_or(t0 * 1e-3);
    const std::size_t iters = cfg.iters_per_temp.value_or(n * n);

    double temp = t0;
    while (temp > min_temp) {
      for (std::size_t it = 0; it < iters; ++it) {
        const auto [first, last] = draw_move();
        const double delta = reversal_delta(tour, m, first, last);
        ++evaluations;
        if (!sa_accept(delta, temp, rng)) continue;
        tour.reverse_segment(first, last);
        cost += delta;
        if (cost < best_cost) {
          cost = tour_length(tour, m);
          if (cost < best_cost) {
            best_cost = cost;
            best = tour;
          }
        }
      }
      cost = tour_length(tour, m);  // drop accumulated rounding
      ++level;
      temp = geometric_temperature(t0, cfg.cooling, level);
      history.push_back(best_cost);
    }
  }

  RunResult result{canonicalize(best), 0.0, level, std::move(history), evaluations, 0.0};
  result.best_cost = tour_length(result.best_tour, m);
  result.wall_time = seconds_since(started);
  return result;
}

RunResult run_sa(const Instance& instance, const SaConfig& cfg) { return run_sa(build_distance_matrix(instance), cfg); }

}  // namespace swarmtsp
