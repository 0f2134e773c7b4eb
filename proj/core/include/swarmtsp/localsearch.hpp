#pragma once

#include <cstddef>

#include "swarmtsp/instance.hpp"

namespace swarmtsp {

/// Change in tour length from reversing positions first..last (inclusive).
///
/// Uses the four-edge formula d[a][c] + d[b][e] - d[a][b] - d[c][e], where a
/// precedes the segment, b..c is the segment, and e follows it (cyclically).
/// Reversals spanning n-1 or more positions only re-orient the cycle and
/// report 0.
double reversal_delta(const Tour& tour, const DistanceMatrix& m, std::size_t first, std::size_t last);

/// Best-improvement 2-opt to a local optimum.
///
/// Each pass scans every reversal (i, j), 0 <= i < j < n, in lexicographic
/// order, and applies the single most improving one; passes repeat until no
/// reversal improves by more than kImprovementEpsilon.
Tour two_opt(Tour tour, const DistanceMatrix& m);

/// First-improvement 3-opt to a local optimum.
///
/// Removes edges before positions i < j < k (k may equal n, the closing edge)
/// and tries the seven reconnections of the two inner segments, in triple
/// order; the sweep restarts after every applied move.
Tour three_opt(Tour tour, const DistanceMatrix& m);

/// Moves must shorten the tour by more than this to be applied.
inline constexpr double kImprovementEpsilon = 1e-9;

}  // namespace swarmtsp
