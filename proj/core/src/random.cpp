#include "swarmtsp/random.hpp"

#include <cassert>
#include <limits>

namespace swarmtsp {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::below(std::size_t bound) {
  assert(bound > 0);
  const std::uint64_t b = bound;
  // Reject the low residue class so every value is equally likely.
  const std::uint64_t threshold = (std::numeric_limits<std::uint64_t>::max() - b + 1) % b;
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return static_cast<std::size_t>(r % b);
  }
}

}  // namespace swarmtsp
