#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swarmtsp/random.hpp"

namespace swarmtsp {

struct City {
  std::size_t id = 0;
  double x = 0.0;
  double y = 0.0;

  bool operator==(const City&) const = default;
};

enum class Metric {
  kEuclideanExact,    ///< plain Euclidean distance
  kEuclideanRounded,  ///< Euclidean rounded to nearest integer (TSPLIB EUC_2D)
};

/// A named, non-empty set of planar cities.
///
/// City ids are exactly 0..n-1; the constructor sorts by id and rejects gaps,
/// duplicates, and non-finite coordinates.
class Instance {
 public:
  Instance(std::string name, std::vector<City> cities, Metric metric);

  /// Builds cities with ids in row order.
  static Instance from_points(std::string name, const std::vector<std::pair<double, double>>& points,
                              Metric metric = Metric::kEuclideanExact);

  const std::string& name() const noexcept { return name_; }
  std::span<const City> cities() const noexcept { return cities_; }
  const City& city(std::size_t id) const { return cities_.at(id); }
  std::size_t size() const noexcept { return cities_.size(); }
  Metric metric() const noexcept { return metric_; }

  bool operator==(const Instance&) const = default;

 private:
  std::string name_;
  std::vector<City> cities_;
  Metric metric_;
};

/// Dense symmetric cost matrix with zero diagonal.
class DistanceMatrix {
 public:
  /// Takes ownership of row-major costs; validates symmetry, zero diagonal,
  /// finiteness and non-negativity.
  DistanceMatrix(std::size_t n, std::vector<double> costs);

  std::size_t size() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return costs_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<double> costs_;
};

/// A visiting order: a permutation of 0..n-1, with the return leg to the first
/// city implicit.
///
/// Every mutator preserves the permutation invariant, so a Tour is valid for its
/// whole lifetime. `operator==` compares sequences exactly; use `same_cycle` to
/// compare undirected cycles.
class Tour {
 public:
  /// Throws InvalidTourError unless `order` is a permutation of 0..size-1.
  explicit Tour(std::vector<std::size_t> order);

  static Tour identity(std::size_t n);

  std::span<const std::size_t> order() const noexcept { return order_; }
  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t pos) const noexcept { return order_[pos]; }
  auto begin() const noexcept { return order_.begin(); }
  auto end() const noexcept { return order_.end(); }

  /// Exchange the cities at two positions.
  void swap_positions(std::size_t i, std::size_t j);
  /// Reverse positions first..last inclusive (first <= last).
  void reverse_segment(std::size_t first, std::size_t last);

  bool operator==(const Tour&) const = default;

 private:
  std::vector<std::size_t> order_;
};

/// True when `order` holds each of 0..order.size()-1 exactly once.
bool is_permutation_of_indices(std::span<const std::size_t> order);

DistanceMatrix build_distance_matrix(const Instance& instance);

/// Closed-cycle length: sum of d[order[k]][order[(k+1) mod n]] in position order.
double tour_length(const Tour& tour, const DistanceMatrix& m);

/// Rotates city 0 to the front, then reverses the tail when order[1] > order[n-1].
Tour canonicalize(const Tour& tour);

/// Equal as undirected cycles (rotation and reflection ignored).
bool same_cycle(const Tour& a, const Tour& b);

inline constexpr std::size_t kBruteForceLimit = 12;

struct ExactSolution {
  Tour tour;  ///< canonical form
  double length = 0.0;
};

/// Exhaustive search over every undirected tour with city 0 fixed first.
/// Ties resolve to the lexicographically smallest canonical order.
/// Throws InstanceTooLargeError for n > kBruteForceLimit.
ExactSolution brute_force_optimal(const Instance& instance);
ExactSolution brute_force_optimal(const DistanceMatrix& m);

/// Greedy construction from `start`; ties go to the smaller city id.
Tour nearest_neighbor_tour(const DistanceMatrix& m, std::size_t start);
Tour nearest_neighbor_tour(const Instance& instance, std::size_t start);

/// Uniform permutation by Fisher-Yates on `rng`.
Tour random_tour(std::size_t n, Rng& rng);

}  // namespace swarmtsp
