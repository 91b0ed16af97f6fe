#pragma once

#include <compare>
#include <vector>

#include "trigon/wiring.hpp"

namespace trigon {

// Bounded piece of a wire between two of its consecutive crossings.
// Piece index j is the stretch after the wire's j-th crossing; indices
// 1..n-2 are the bounded ones on a fully crossed wire.
struct SegmentId {
  int wire;
  int index;
  auto operator<=>(const SegmentId&) const = default;
};

// A triangle is identified by the column where its face opened and the
// gap row the face lives in.
struct TriangleAt {
  int opening_column;
  int gap;
  auto operator<=>(const TriangleAt&) const = default;
};

struct FaceReport {
  long triangle_count = 0;
  std::vector<TriangleAt> triangles;       // sorted by (column, gap)
  std::vector<SegmentId> used;             // sides of triangles, sorted
  std::vector<SegmentId> unused;           // provably not a triangle side
  std::vector<int> wire_contact;           // [1..n], triangles touching wire
};

struct PartialReport {
  long closed_triangles = 0;
  long provably_unused = 0;

  bool operator==(const PartialReport&) const = default;
};

// Full face classification. Works on any valid diagram; on a complete
// one, used and unused partition the n*(n-2) bounded segments and
// |used| == 3 * triangle_count. Counts on complete diagrams with
// n >= 4 are checked against the provable ceilings; a violation throws
// std::logic_error since it can only mean a broken implementation.
FaceReport count_triangles(const WiringDiagram& d);

// Cheap summary for search pruning: triangles already closed, plus
// bounded segments that can no longer touch a triangle because both
// incident faces are dead (closed non-triangular, unbounded, or open
// with two or more boundary vertices already). Both values are
// monotone non-decreasing under push_column and match count_triangles
// on complete diagrams.
PartialReport partial_report(const WiringDiagram& d);

}  // namespace trigon
