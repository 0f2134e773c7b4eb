#include <benchmark/benchmark.h>

#include <string>

#include "swarmtsp/swarmtsp.hpp"

namespace {

using namespace swarmtsp;

const Instance& berlin52() {
  static const Instance instance = load_instance_file(std::string(SWARMTSP_DATA_DIR) + "/berlin52.tsp").instance;
  return instance;
}

Instance random_instance(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<double, double>> points;
  for (std::size_t i = 0; i < n; ++i) points.emplace_back(100 * rng.uniform(), 100 * rng.uniform());
  return Instance::from_points("random", points);
}

void BM_TourLength(benchmark::State& state) {
  const DistanceMatrix m = build_distance_matrix(berlin52());
  Rng rng(1);
  const Tour t = random_tour(m.size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(tour_length(t, m));
}
BENCHMARK(BM_TourLength);

void BM_SwapDifference(benchmark::State& state) {
  Rng rng(2);
  const Tour a = random_tour(static_cast<std::size_t>(state.range(0)), rng);
  const Tour b = random_tour(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(swap_difference(a, b));
}
BENCHMARK(BM_SwapDifference)->Arg(52)->Arg(200);

void BM_TwoOptFromRandom(benchmark::State& state) {
  const DistanceMatrix m = build_distance_matrix(berlin52());
  Rng rng(3);
  const Tour start = random_tour(m.size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(two_opt(start, m));
}
BENCHMARK(BM_TwoOptFromRandom)->Unit(benchmark::kMillisecond);

void BM_ThreeOptFromRandom(benchmark::State& state) {
  const DistanceMatrix m = build_distance_matrix(random_instance(static_cast<std::size_t>(state.range(0)), 4));
  Rng rng(5);
  const Tour start = random_tour(m.size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(three_opt(start, m));
}
BENCHMARK(BM_ThreeOptFromRandom)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_PsoStep(benchmark::State& state) {
  const DistanceMatrix m = build_distance_matrix(berlin52());
  SwarmConfig cfg;
  Rng rng(6);
  SwarmState swarm = initialize_swarm(m, cfg, rng);
  for (auto _ : state) step(swarm, cfg, m, rng);
}
BENCHMARK(BM_PsoStep)->Unit(benchmark::kMicrosecond);

void BM_BruteForce(benchmark::State& state) {
  const DistanceMatrix m = build_distance_matrix(random_instance(static_cast<std::size_t>(state.range(0)), 7));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_optimal(m));
}
BENCHMARK(BM_BruteForce)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

void BM_PsoBuiltinDefaults(benchmark::State& state) {
  const Instance instance = builtin_instance();
  for (auto _ : state) benchmark::DoNotOptimize(run_pso(instance, SwarmConfig{}));
}
BENCHMARK(BM_PsoBuiltinDefaults)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
