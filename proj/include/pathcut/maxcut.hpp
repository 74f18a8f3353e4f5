#pragma once

#include <cstdint>

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Single-vertex-flip local search from a seeded random bipartition. The
// returned cut is flip-optimal, hence every vertex has cross-degree at least
// ceil(d/2). Also fills cut.cross_connectivity with the edge connectivity of
// (V, cross).
Cut locally_max_cut(const MultiGraph& g, uint64_t seed);

// The bipartite graph (V, F) of the crossing edges. origin maps new edge ids
// back to host ids.
MultiGraph induced_cross_graph(const MultiGraph& g, const Cut& cut,
                               std::vector<int>* origin = nullptr);

}  // namespace pathcut
