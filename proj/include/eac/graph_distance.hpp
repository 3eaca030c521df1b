#pragma once

#include "eac/multigraph.hpp"

namespace eac {

/// Mean BFS distance from `source` to the other vertices of its connected
/// component; 0 for an isolated vertex. Loops and repeated edges are ignored.
double mean_distance_to_vertex(const Multigraph& graph, Vertex source);

}  // namespace eac
