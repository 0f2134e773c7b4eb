#include "swarmtsp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "swarmtsp/error.hpp"

namespace swarmtsp {

Instance::Instance(std::string name, std::vector<City> cities, Metric metric)
    : name_(std::move(name)), cities_(std::move(cities)), metric_(metric) {
  if (cities_.empty()) throw InvalidInstanceError("instance '" + name_ + "' has no cities");
  std::sort(cities_.begin(), cities_.end(), [](const City& a, const City& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < cities_.size(); ++i) {
    if (cities_[i].id != i) {
      throw InvalidInstanceError("instance '" + name_ + "': city ids must be exactly 0.." +
                                 std::to_string(cities_.size() - 1));
    }
    if (!std::isfinite(cities_[i].x) || !std::isfinite(cities_[i].y)) {
      throw InvalidInstanceError("instance '" + name_ + "': city " + std::to_string(i) +
                                 " has a non-finite coordinate");
    }
  }
}

Instance Instance::from_points(std::string name, const std::vector<std::pair<double, double>>& points,
                               Metric metric) {
  std::vector<City> cities;
  cities.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) cities.push_back({i, points[i].first, points[i].second});
  return Instance(std::move(name), std::move(cities), metric);
}

DistanceMatrix::DistanceMatrix(std::size_t n, std::vector<double> costs) : n_(n), costs_(std::move(costs)) {
  if (costs_.size() != n_ * n_) {
    throw DimensionError("distance matrix expects " + std::to_string(n_ * n_) + " entries, got " +
                         std::to_string(costs_.size()));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if ((*this)(i, i) != 0.0) throw InvalidInstanceError("distance matrix diagonal must be zero");
    for (std::size_t j = i + 1; j < n_; ++j) {
      const double dij = (*this)(i, j);
      if (!std::isfinite(dij) || dij < 0.0) {
        throw InvalidInstanceError("distance matrix entries must be finite and non-negative");
      }
      if (dij != (*this)(j, i)) throw InvalidInstanceError("distance matrix must be symmetric");
    }
  }
}

bool is_permutation_of_indices(std::span<const std::size_t> order) {
  std::vector<bool> seen(order.size(), false);
  for (std::size_t city : order) {
    if (city >= order.size() || seen[city]) return false;
    seen[city] = true;
  }
  return true;
}

Tour::Tour(std::vector<std::size_t> order) : order_(std::move(order)) {
  if (!is_permutation_of_indices(order_)) {
    throw InvalidTourError("tour of size " + std::to_string(order_.size()) +
                           " is not a permutation of its city indices");
  }
}

Tour Tour::identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return Tour(std::move(order));
}

void Tour::swap_positions(std::size_t i, std::size_t j) {
  if (i >= order_.size() || j >= order_.size()) throw VelocityError("swap position out of range");
  std::swap(order_[i], order_[j]);
}

void Tour::reverse_segment(std::size_t first, std::size_t last) {
  if (first > last || last >= order_.size()) throw DimensionError("segment out of range");
  std::reverse(order_.begin() + static_cast<std::ptrdiff_t>(first),
               order_.begin() + static_cast<std::ptrdiff_t>(last) + 1);
}

DistanceMatrix build_distance_matrix(const Instance& instance) {
  const std::size_t n = instance.size();
  const auto cities = instance.cities();
  std::vector<double> costs(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double d = std::hypot(cities[i].x - cities[j].x, cities[i].y - cities[j].y);
      if (instance.metric() == Metric::kEuclideanRounded) d = std::floor(d + 0.5);
      costs[i * n + j] = d;
      costs[j * n + i] = d;
    }
  }
  return DistanceMatrix(n, std::move(costs));
}

double tour_length(const Tour& tour, const DistanceMatrix& m) {
  const std::size_t n = tour.size();
  if (n != m.size()) {
    throw DimensionError("tour has " + std::to_string(n) + " cities but matrix has " + std::to_string(m.size()));
  }
  double total = 0.0;
  for (std::size_t k = 0; k < n; ++k) total += m(tour[k], tour[(k + 1) % n]);
  return total;
}

Tour canonicalize(const Tour& tour) {
  const std::size_t n = tour.size();
  if (n == 0) return tour;
  const auto order = tour.order();
  const auto zero = static_cast<std::size_t>(std::find(order.begin(), order.end(), 0) - order.begin());
  std::vector<std::size_t> rotated(n);
  for (std::size_t k = 0; k < n; ++k) rotated[k] = order[(zero + k) % n];
  if (n >= 3 && rotated[1] > rotated[n - 1]) std::reverse(rotated.begin() + 1, rotated.end());
  return Tour(std::move(rotated));
}

bool same_cycle(const Tour& a, const Tour& b) {
  return a.size() == b.size() && canonicalize(a) == canonicalize(b);
}

namespace {

// Depth-first enumeration in lexicographic order of positions 1..n-1. The
// partial sum accumulates edges in the same order as tour_length, so the
// reported optimum is bit-identical to re-evaluating the returned tour.
class Enumerator {
 public:
  explicit Enumerator(const DistanceMatrix& m)
      : m_(m), n_(m.size()), order_(n_, 0), used_(n_, false), best_order_(n_, 0) {}

  ExactSolution solve() {
    if (n_ <= 3) {
      // Every ordering is the same undirected cycle; the identity is canonical.
      Tour t = Tour::identity(n_);
      const double length = tour_length(t, m_);
      return {std::move(t), length};
    }
    used_[0] = true;
    order_[0] = 0;
    extend(1, 0.0);
    Tour best(best_order_);
    return {best, tour_length(best, m_)};
  }

 private:
  void extend(std::size_t depth, double partial) {
    if (depth == n_) {
      // Each undirected cycle appears twice; keep the orientation with order[1] < order[n-1].
      if (order_[1] > order_[n_ - 1]) return;
      const double total = partial + m_(order_[n_ - 1], order_[0]);
      if (total < best_) {
        best_ = total;
        best_order_ = order_;
      }
      return;
    }
    const std::size_t prev = order_[depth - 1];
    for (std::size_t c = 1; c < n_; ++c) {
      if (used_[c]) continue;
      used_[c] = true;
      order_[depth] = c;
      extend(depth + 1, partial + m_(prev, c));
      used_[c] = false;
    }
  }

  const DistanceMatrix& m_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<bool> used_;
  std::vector<std::size_t> best_order_;
  double best_ = std::numeric_limits<double>::infinity();
};

}  // namespace

ExactSolution brute_force_optimal(const DistanceMatrix& m) {
  if (m.size() > kBruteForceLimit) throw InstanceTooLargeError(m.size(), kBruteForceLimit);
  return Enumerator(m).solve();
}

ExactSolution brute_force_optimal(const Instance& instance) {
  if (instance.size() > kBruteForceLimit) throw InstanceTooLargeError(instance.size(), kBruteForceLimit);
  return brute_force_optimal(build_distance_matrix(instance));
}

Tour nearest_neighbor_tour(const DistanceMatrix& m, std::size_t start) {
  const std::size_t n = m.size();
  if (start >= n) throw DimensionError("start city " + std::to_string(start) + " out of range");
  std::vector<bool> visited(n, false);
  std::vector<std::size_t> order;
  order.reserve(n);
  std::size_t current = start;
  visited[current] = true;
  order.push_back(current);
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t next = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < n; ++c) {
      if (!visited[c] && m(current, c) < best) {
        best = m(current, c);
        next = c;
      }
    }
    visited[next] = true;
    order.push_back(next);
    current = next;
  }
  return Tour(std::move(order));
}

Tour nearest_neighbor_tour(const Instance& instance, std::size_t start) {
  return nearest_neighbor_tour(build_distance_matrix(instance), start);
}

Tour random_tour(std::size_t n, Rng& rng) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = rng.below(i);
    std::swap(order[i - 1], order[j]);
  }
  return Tour(std::move(order));
}

}  // namespace swarmtsp
