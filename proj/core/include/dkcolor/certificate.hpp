#pragma once

#include <optional>

#include "dkcolor/graph.hpp"

namespace dkc {

// Exact c-colorability of a small graph given as an adjacency matrix
// (branch and bound with symmetry breaking on color indices).
bool is_c_colorable(const std::vector<std::vector<char>>& adj, int c);

// Exact chromatic number of a small graph; intended for test oracles.
int chromatic_number(const std::vector<std::vector<char>>& adj);

// Some vertex whose closed neighborhood is not c-colorable, or nullopt.
// Throws CapacityError if any closed neighborhood exceeds `neighborhood_cap`.
std::optional<Vertex> certificate_check(const Graph& graph, int c,
                                        int neighborhood_cap = 30);

}  // namespace dkc
