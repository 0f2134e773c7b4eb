#include "swarmtsp/localsearch.hpp"

#include <array>
#include <vector>

#include "swarmtsp/error.hpp"

namespace swarmtsp {

double reversal_delta(const Tour& tour, const DistanceMatrix& m, std::size_t first, std::size_t last) {
  const std::size_t n = tour.size();
  if (first > last || last >= n) throw DimensionError("reversal segment out of range");
  if (last - first + 1 >= n - 1) return 0.0;
  const std::size_t a = tour[(first + n - 1) % n];
  const std::size_t b = tour[first];
  const std::size_t c = tour[last];
  const std::size_t e = tour[(last + 1) % n];
  return m(a, c) + m(b, e) - m(a, b) - m(c, e);
}

Tour two_opt(Tour tour, const DistanceMatrix& m) {
  const std::size_t n = tour.size();
  if (n != m.size()) throw DimensionError("tour and matrix sizes differ");
  if (n < 4) return tour;
  for (;;) {
    double best_delta = -kImprovementEpsilon;
    std::size_t best_i = 0;
    std::size_t best_j = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double delta = reversal_delta(tour, m, i, j);
        if (delta < best_delta) {
          best_delta = delta;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_j == 0) return tour;
    tour.reverse_segment(best_i, best_j);
  }
}

namespace {

enum class Piece { kFirst, kFirstReversed, kSecond, kSecondReversed };

struct Reconnection {
  std::array<Piece, 2> pieces;
};

// Inner-sequence layouts for the seven non-identity reconnections, in the
// order they are tried.
constexpr std::array<Reconnection, 7> kReconnections{{
    {{Piece::kFirstReversed, Piece::kSecond}},
    {{Piece::kFirst, Piece::kSecondReversed}},
    {{Piece::kSecondReversed, Piece::kFirstReversed}},
    {{Piece::kFirstReversed, Piece::kSecondReversed}},
    {{Piece::kSecond, Piece::kFirst}},
    {{Piece::kSecondReversed, Piece::kFirst}},
    {{Piece::kSecond, Piece::kFirstReversed}},
}};

Tour reconnect(const Tour& tour, std::size_t i, std::size_t j, std::size_t k, const Reconnection& r) {
  const auto t = tour.order();
  std::vector<std::size_t> out;
  out.reserve(t.size());
  out.insert(out.end(), t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
  for (Piece p : r.pieces) {
    const bool first = p == Piece::kFirst || p == Piece::kFirstReversed;
    const auto lo = t.begin() + static_cast<std::ptrdiff_t>(first ? i : j);
    const auto hi = t.begin() + static_cast<std::ptrdiff_t>(first ? j : k);
    if (p == Piece::kFirstReversed || p == Piece::kSecondReversed) {
      out.insert(out.end(), std::make_reverse_iterator(hi), std::make_reverse_iterator(lo));
    } else {
      out.insert(out.end(), lo, hi);
    }
  }
  out.insert(out.end(), t.begin() + static_cast<std::ptrdiff_t>(k), t.end());
  return Tour(std::move(out));
}

}  // namespace

Tour three_opt(Tour tour, const DistanceMatrix& m) {
  const std::size_t n = tour.size();
  if (n != m.size()) throw DimensionError("tour and matrix sizes differ");
  if (n < 4) return tour;

  bool improved = true;
  while (improved) {
    improved = false;
    // Removed edges: (a,b) before position i, (c,d) before j, (e,f) before k.
    // Segment one is b..c, segment two is d..e.
    for (std::size_t i = 1; i + 1 < n && !improved; ++i) {
      for (std::size_t j = i + 1; j < n && !improved; ++j) {
        for (std::size_t k = j + 1; k <= n && !improved; ++k) {
          const std::size_t a = tour[i - 1], b = tour[i];
          const std::size_t c = tour[j - 1], d = tour[j];
          const std::size_t e = tour[k - 1], f = tour[k % n];
          const double ab = m(a, b), cd = m(c, d), ef = m(e, f);
          const std::array<double, 7> deltas{
              m(a, c) + m(b, d) - ab - cd,
              m(c, e) + m(d, f) - cd - ef,
              m(a, e) + m(b, f) - ab - ef,
              m(a, c) + m(b, e) + m(d, f) - ab - cd - ef,
              m(a, d) + m(e, b) + m(c, f) - ab - cd - ef,
              m(a, e) + m(d, b) + m(c, f) - ab - cd - ef,
              m(a, d) + m(e, c) + m(b, f) - ab - cd - ef,
          };
          for (std::size_t v = 0; v < deltas.size(); ++v) {
            if (deltas[v] < -kImprovementEpsilon) {
              tour = reconnect(tour, i, j, k, kReconnections[v]);
              improved = true;
              break;
            }
          }
        }
      }
    }
  }
  return tour;
}

}  // namespace swarmtsp
