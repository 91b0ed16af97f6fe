#pragma once

#include <string>

#include "trigon/geometry.hpp"
#include "trigon/wiring.hpp"

namespace trigon {

struct RenderOptions {
  int width = 960;
  /// 0 picks a height from the content (wire spacing or a square).
  int height = 0;
  int margin = 24;
  bool label_wires = true;
  bool highlight_triangles = false;
};

/// Wires as horizontal tracks with X switches at the crossings. Each
/// wire is one polyline, each crossing carries a "switch" marker, and
/// with highlighting on every triangle face gets a "tri" polygon.
std::string render_diagram_svg(const WiringDiagram& d,
                               const RenderOptions& opt = {});

/// Straight-line drawing clipped to the bounding box of the crossings
/// plus a margin.
std::string render_arrangement_svg(const LineArrangement& a,
                                   const RenderOptions& opt = {});

}  // namespace trigon
