#pragma once

#include <optional>
#include <vector>

#include "trigon/faces.hpp"
#include "trigon/wiring.hpp"

namespace trigon {

struct SearchConfig {
  int n = 0;
  // Stop as soon as a complete diagram with >= target triangles is found
  // (ignored when exhaustive is set).
  std::optional<long> target;
  // Prune prefixes whose provably unused segment count exceeds this.
  // Defaults to n*(n-2) - 3*target when a target is set, else unlimited.
  std::optional<long> budget;
  bool exhaustive = false;
  // Cap on the number of columns; default n*(n-1)/2.
  std::optional<int> max_columns;
  // Number of worker threads; 1 is the reference (deterministic) mode.
  int parallel_width = 1;
};

struct SearchResult {
  long best_count = 0;
  std::optional<WiringDiagram> witness;
  // Canonical prefixes examined, including the empty diagram. Pruned
  // children are not counted. Deterministic for parallel_width == 1.
  unsigned long long nodes_visited = 0;
  // True iff the search space was exhausted under the given config
  // (no early exit on target).
  bool complete = false;
};

// All non-empty columns c such that push_column(d, c) is valid and the
// extension stays leftmost-canonical, in lexicographic order of the
// row sets. d must be incomplete.
std::vector<Column> enumerate_children(const WiringDiagram& d);

// Depth-first search over leftmost-canonical complete diagrams for the
// maximum triangle count. Children are generated in lexicographic
// order and only the first diagram attaining the best count is kept,
// so results are reproducible. Pruning never removes all optima that
// fit the unused-segment budget: provably_unused is monotone along any
// completion, so a pruned prefix cannot reach target triangles.
SearchResult depth_first_search(const SearchConfig& cfg);

// True iff d is complete and counts exactly `claimed` triangles.
bool verify_witness(const WiringDiagram& d, long claimed);

}  // namespace trigon
