#pragma once

#include <random>
#include <vector>

#include "trigon/wiring.hpp"

namespace trigon::testsupport {

// Uniform-ish complete diagram: repeatedly crosses random still-open
// adjacent pairs, sometimes several per column. Not canonical.
WiringDiagram random_complete_diagram(int n, std::mt19937& rng);

// Every leftmost-canonical complete diagram on n wires, in the
// enumeration order of the search children.
std::vector<WiringDiagram> all_canonical_complete(int n);

}  // namespace trigon::testsupport
