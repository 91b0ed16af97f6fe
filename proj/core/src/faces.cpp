#include "trigon/faces.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sweep.hpp"

namespace trigon {

namespace {

// Largest triangle count any fully crossed diagram on n wires can
// reach. These are the ceilings count_triangles guards against.
long triangle_ceiling(int n) {
  const long long nn = n;
  if (n % 2 == 1) return static_cast<long>(nn * (nn - 2) / 3);
  return static_cast<long>(nn * (3 * nn - 7) / 9);
}

}  // namespace

FaceReport count_triangles(const WiringDiagram& d) {
  detail::Sweep sweep(d.n(), /*record_details=*/true);
  for (const Column& col : d.columns()) sweep.push(col);
  const bool complete = is_complete(d);
  if (complete) sweep.finalize_complete();

  FaceReport report;
  report.triangle_count = static_cast<long>(sweep.closed_triangles());
  report.triangles = sweep.triangles();
  std::sort(report.triangles.begin(), report.triangles.end());
  report.used = sweep.used_segments();
  std::sort(report.used.begin(), report.used.end());
  report.unused = sweep.dead_segments();
  std::sort(report.unused.begin(), report.unused.end());
  report.wire_contact = sweep.wire_contact();

  if (report.used.size() != 3 * static_cast<std::size_t>(report.triangle_count))
    throw std::logic_error("triangle side bookkeeping out of sync");
  if (std::adjacent_find(report.used.begin(), report.used.end()) !=
      report.used.end())
    throw std::logic_error("segment attributed to two triangles");

  if (complete && d.n() >= 4) {
    const long ceiling = triangle_ceiling(d.n());
    if (report.triangle_count > ceiling)
      throw std::logic_error("triangle count " +
                             std::to_string(report.triangle_count) +
                             " exceeds the provable ceiling " +
                             std::to_string(ceiling) + " for " +
                             std::to_string(d.n()) + " wires");
    const auto bounded =
        static_cast<std::size_t>(d.n()) * static_cast<std::size_t>(d.n() - 2);
    if (report.used.size() + report.unused.size() != bounded)
      throw std::logic_error("used and unused segments do not partition");
  }
  return report;
}

PartialReport partial_report(const WiringDiagram& d) {
  detail::Sweep sweep(d.n(), /*record_details=*/false);
  for (const Column& col : d.columns()) sweep.push(col);
  if (is_complete(d)) sweep.finalize_complete();
  PartialReport r;
  r.closed_triangles = static_cast<long>(sweep.closed_triangles());
  r.provably_unused = static_cast<long>(sweep.provably_unused());
  return r;
}

}  // namespace trigon
