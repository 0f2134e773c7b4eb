#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace swarmtsp {

/// Seeded random stream shared by all solvers.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives doubles and bounded integers with explicit bit manipulation rather
/// than the implementation-defined std distributions, so a seed reproduces the
/// same run on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound). bound must be > 0.
  std::size_t below(std::size_t bound);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace swarmtsp
