#pragma once

#include <optional>
#include <string>

#include "swarmtsp/instance.hpp"

namespace swarmtsp {

struct SvgLayout {
  double width = 800.0;
  double height = 600.0;
  double margin = 40.0;
  double city_radius = 6.0;
};

/// Standalone SVG of an instance and (optionally) a tour.
///
/// Cities are circles labelled with 1-based ids. Coordinates are scaled
/// uniformly into the viewport inside the margin, centred, with y pointing up.
/// A tour adds one line per cycle edge (none for n = 1, one for n = 2) and a
/// caption with its length. Output is byte-stable for fixed input.
std::string render_svg(const Instance& instance, const std::optional<Tour>& tour, const SvgLayout& layout = {});

}  // namespace swarmtsp
