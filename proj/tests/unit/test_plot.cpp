#include <string>
#include <vector>

#include "doctest.h"
#include "swarmtsp/error.hpp"
#include "swarmtsp/plot.hpp"
#include "swarmtsp/tsplib.hpp"

using namespace swarmtsp;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Minimal tag-balance check: every <x ...> has a matching </x> unless self-closed.
bool balanced(const std::string& svg) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  while ((pos = svg.find('<', pos)) != std::string::npos) {
    const std::size_t end = svg.find('>', pos);
    if (end == std::string::npos) return false;
    const std::string tag = svg.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.empty() || tag[0] == '?' || tag[0] == '!') continue;
    if (tag[0] == '/') {
      if (stack.empty() || stack.back() != tag.substr(1)) return false;
      stack.pop_back();
    } else if (tag.back() != '/') {
      stack.push_back(tag.substr(0, tag.find(' ')));
    }
  }
  return stack.empty();
}

}  // namespace

TEST_CASE("render_svg draws cities, edges and caption") {
  const Instance inst = builtin_instance();
  const std::string svg = render_svg(inst, Tour::identity(5));
  CHECK(count(svg, "<circle") == 5);
  CHECK(count(svg, "<line") == 5);
  CHECK(svg.find(">5</text>") != std::string::npos);
  CHECK(svg.find("cost 15.15298") != std::string::npos);
  CHECK(svg.find("<title>builtin5</title>") != std::string::npos);
  CHECK(balanced(svg));
}

TEST_CASE("render_svg without a tour has no edges or caption") {
  const std::string svg = render_svg(builtin_instance(), std::nullopt);
  CHECK(count(svg, "<circle") == 5);
  CHECK(count(svg, "<line") == 0);
  CHECK(svg.find("cost ") == std::string::npos);
  CHECK(balanced(svg));
}

TEST_CASE("render_svg degenerate sizes") {
  const auto one = Instance::from_points("one", {{3, 3}}, Metric::kEuclideanExact);
  const std::string svg1 = render_svg(one, Tour::identity(1));
  CHECK(count(svg1, "<circle") == 1);
  CHECK(count(svg1, "<line") == 0);
  CHECK(balanced(svg1));

  const auto two = Instance::from_points("two", {{0, 0}, {0, 5}}, Metric::kEuclideanExact);
  const std::string svg2 = render_svg(two, Tour::identity(2));
  CHECK(count(svg2, "<line") == 1);
  CHECK(balanced(svg2));
}

TEST_CASE("render_svg keeps points inside the viewport with y pointing up") {
  const auto inst = Instance::from_points("v", {{0, 0}, {10, 10}}, Metric::kEuclideanExact);
  const std::string svg = render_svg(inst, std::nullopt, SvgLayout{200, 100, 10, 3});
  // Span 10 fits the 80-pixel inner height: scale 8, horizontally centred.
  CHECK(svg.find("<circle cx=\"60.00\" cy=\"90.00\"") != std::string::npos);
  CHECK(svg.find("<circle cx=\"140.00\" cy=\"10.00\"") != std::string::npos);
}

TEST_CASE("render_svg is byte-stable, escapes names and checks sizes") {
  const Instance inst = builtin_instance();
  CHECK(render_svg(inst, Tour::identity(5)) == render_svg(inst, Tour::identity(5)));

  const auto odd = Instance::from_points("a<b&\"c\"", {{0, 0}, {1, 1}}, Metric::kEuclideanExact);
  const std::string svg = render_svg(odd, std::nullopt);
  CHECK(svg.find("<title>a&lt;b&amp;&quot;c&quot;</title>") != std::string::npos);
  CHECK(balanced(svg));

  CHECK_THROWS_AS(render_svg(inst, Tour::identity(4)), DimensionError);
}
