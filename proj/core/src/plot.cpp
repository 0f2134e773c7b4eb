#include "swarmtsp/plot.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "swarmtsp/error.hpp"

namespace swarmtsp {
namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Projection {
  double min_x, min_y, scale, offset_x, offset_y, height;

  double px(double x) const { return offset_x + (x - min_x) * scale; }
  double py(double y) const { return height - (offset_y + (y - min_y) * scale); }
};

Projection fit(const Instance& instance, const SvgLayout& layout) {
  double min_x = std::numeric_limits<double>::infinity(), max_x = -min_x;
  double min_y = min_x, max_y = -min_x;
  for (const City& c : instance.cities()) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  const double inner_w = layout.width - 2 * layout.margin;
  const double inner_h = layout.height - 2 * layout.margin;
  const double span_x = max_x - min_x;
  const double span_y = max_y - min_y;
  double scale = 1.0;
  if (span_x > 0 && span_y > 0) {
    scale = std::min(inner_w / span_x, inner_h / span_y);
  } else if (span_x > 0) {
    scale = inner_w / span_x;
  } else if (span_y > 0) {
    scale = inner_h / span_y;
  }
  const double offset_x = layout.margin + (inner_w - span_x * scale) / 2;
  const double offset_y = layout.margin + (inner_h - span_y * scale) / 2;
  return {min_x, min_y, scale, offset_x, offset_y, layout.height};
}

}  // namespace

std::string render_svg(const Instance& instance, const std::optional<Tour>& tour, const SvgLayout& layout) {
  if (tour && tour->size() != instance.size()) {
    throw DimensionError("tour has " + std::to_string(tour->size()) + " cities, instance has " +
                         std::to_string(instance.size()));
  }
  const Projection proj = fit(instance, layout);
  const auto cities = instance.cities();

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\">\n",
      layout.width, layout.height);
  out += fmt::format("  <title>{}</title>\n", escape_xml(instance.name()));
  out += "  <rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  if (tour) {
    const std::size_t n = tour->size();
    const std::size_t edges = n < 2 ? 0 : (n == 2 ? 1 : n);
    out += "  <g class=\"edges\" stroke=\"black\" stroke-width=\"2\">\n";
    for (std::size_t k = 0; k < edges; ++k) {
      const City& a = cities[(*tour)[k]];
      const City& b = cities[(*tour)[(k + 1) % n]];
      out += fmt::format("    <line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\"/>\n", proj.px(a.x),
                         proj.py(a.y), proj.px(b.x), proj.py(b.y));
    }
    out += "  </g>\n";
  }

  out += "  <g class=\"cities\" fill=\"#cfe0fc\" stroke=\"#1f3f7f\" stroke-width=\"1.5\">\n";
  for (const City& c : cities) {
    out += fmt::format("    <circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"{:.1f}\"/>\n", proj.px(c.x), proj.py(c.y),
                       layout.city_radius);
  }
  out += "  </g>\n";
  out += "  <g class=\"labels\" font-family=\"sans-serif\" font-size=\"14\" fill=\"black\">\n";
  for (const City& c : cities) {
    out += fmt::format("    <text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", proj.px(c.x) + layout.city_radius + 2,
                       proj.py(c.y) - layout.city_radius - 2, c.id + 1);
  }
  out += "  </g>\n";

  if (tour) {
    DistanceMatrix m = build_distance_matrix(instance);
    out += fmt::format(
        "  <text class=\"caption\" x=\"{:.2f}\" y=\"{:.2f}\" font-family=\"sans-serif\" font-size=\"16\">"
        "cost {:.5f}</text>\n",
        layout.margin, layout.height - layout.margin / 3, tour_length(*tour, m));
  }
  out += "</svg>\n";
  return out;
}

}  // namespace swarmtsp
