#include <string>

#include "doctest.h"
#include "trigon/errors.hpp"
#include "trigon/geometry.hpp"
#include "trigon/render.hpp"
#include "trigon/wiring.hpp"

using namespace trigon;

namespace {

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size()))
    ++count;
  return count;
}

}  // namespace

TEST_CASE("diagram rendering draws every wire and crossing") {
  const WiringDiagram d =
      WiringDiagram::from_columns(3, {Column{1}, Column{2}, Column{1}});
  RenderOptions opt;
  const std::string svg = render_diagram_svg(d, opt);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(occurrences(svg, "<polyline class=\"wire\"") == 3);
  CHECK(occurrences(svg, "<circle class=\"switch\"") == 3);
  CHECK(occurrences(svg, "<text class=\"label\"") == 3);
  CHECK(occurrences(svg, "<polygon class=\"tri\"") == 0);

  RenderOptions plain = opt;
  plain.label_wires = false;
  CHECK(occurrences(render_diagram_svg(d, plain), "<text class=\"label\"") ==
        0);
}

TEST_CASE("triangle highlighting shades one polygon per triangle") {
  const WiringDiagram d = WiringDiagram::from_columns(
      5, {Column{1, 3}, Column{2}, Column{1, 3}, Column{4}, Column{3},
          Column{2}, Column{1, 3}});
  RenderOptions opt;
  opt.highlight_triangles = true;
  const std::string svg = render_diagram_svg(d, opt);
  CHECK(occurrences(svg, "<polygon class=\"tri\"") == 5);
  CHECK(occurrences(svg, "<polyline class=\"wire\"") == 5);
}

TEST_CASE("render options are validated") {
  const WiringDiagram d =
      WiringDiagram::from_columns(3, {Column{1}, Column{2}, Column{1}});
  auto rejects = [&](RenderOptions opt) {
    try {
      render_diagram_svg(d, opt);
    } catch (const Error& e) {
      return e.code() == Errc::invalid_parameter;
    }
    return false;
  };
  RenderOptions zero_width;
  zero_width.width = 0;
  CHECK(rejects(zero_width));
  RenderOptions negative_margin;
  negative_margin.margin = -1;
  CHECK(rejects(negative_margin));
  RenderOptions tight;
  tight.width = 40;
  tight.margin = 24;  // no room left between the margins
  CHECK(rejects(tight));
}

TEST_CASE("arrangement rendering covers all lines and crossings") {
  const LineArrangement a = hexagonal7();
  RenderOptions opt;
  const std::string svg = render_arrangement_svg(a, opt);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(occurrences(svg, "<line class=\"wire\"") == 7);
  CHECK(occurrences(svg, "<circle class=\"switch\"") == 21);
}
