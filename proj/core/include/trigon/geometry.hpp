#pragma once

#include <string>
#include <vector>

#include "trigon/faces.hpp"
#include "trigon/real.hpp"
#include "trigon/wiring.hpp"

namespace trigon {

// Straight line y = slope * (x - anchor). Never vertical.
struct Line {
  Real slope;
  Real anchor;
};

// Distinct slopes and simplicity are certified where they matter (in
// to_wiring and the construction routines), not at construction.
struct LineArrangement {
  std::vector<Line> lines;
  long precision = 256;  // working precision in bits
};

struct Crossing {
  int i = 0;  // indices into LineArrangement::lines, i < j
  int j = 0;
  Interval x;
  Interval y;
};

inline constexpr long kDefaultPrecision = 256;
inline constexpr long kMaxPrecision = 16384;

// Seven lines with hexagonal symmetry: anchors tan(k*pi/6), k=-2..2,
// plus -eps and eps; slopes 3, 1, 0, -1, -3, -7, 7. Certified by
// conversion and recount: 11 triangles, the horizontal line touching 5.
LineArrangement hexagonal7(const mpq_class& eps = mpq_class(1, 1000));

// The 15-line perfect arrangement: anchors tan(k*pi/14), k=-6..6, plus
// -eps and eps. Certified: 65 triangles, no unused segment, the
// horizontal line touching 13.
LineArrangement simmons15(const mpq_class& eps = mpq_class(1, 10000));

// Doubling step: takes an arrangement of n+1 lines (n even) whose
// anchors follow the tan(k*pi/n) pattern with two near-zero anchors
// and whose horizontal line touches n-1 triangles, and adds n almost
// horizontal lines. Certified on output: the result is simple, has
// exactly n^2 more triangles, and the horizontal line touches 2n-1.
// Certification failures caused by interval overlap retry with doubled
// precision up to the cap.
LineArrangement duplicate(const LineArrangement& a);

enum class Seed { hexagonal7, simmons15 };

// t rounds of duplicate() on the chosen seed, built with
// eps = 1/n^3 for the final line count n so every round stays within
// the near-zero anchor tolerance.
LineArrangement iterate_duplication(Seed seed, int t);

// Conversion to a wiring diagram: wires ordered top-to-bottom at
// x -> -infinity by ascending slope; crossings sorted by certified
// x enclosure; crossings whose enclosures overlap are merged into one
// column when their rows are distinct and non-adjacent, otherwise the
// precision is insufficient to order them.
WiringDiagram to_wiring(const LineArrangement& a);

// All crossings with certified coordinates, sorted by x enclosure.
std::vector<Crossing> crossings(const LineArrangement& a);

// Wire number (1..n) that each line receives in to_wiring order.
std::vector<int> wire_of_line(const LineArrangement& a);

// Index into a.lines of the unique line with exact zero slope, or -1.
int horizontal_index(const LineArrangement& a);

// Text format: header "lines k precision p", then k rows "slope anchor"
// where each value is a decimal literal or tan(<rational>*pi). Lines
// starting with '#' are skipped.
LineArrangement read_arrangement(const std::string& text);

// Exact rational from "p/q", an integer, or a decimal like "2.5e-3".
mpq_class parse_rational(const std::string& text);
std::string write_arrangement(const LineArrangement& a);

}  // namespace trigon
