#pragma once

#include <vector>

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Spanning out-arborescence: every non-root vertex has exactly one entering
// arc (stored as its host edge id), all arcs directed away from the root.
struct Arborescence {
    int root = 0;
    std::vector<int> enter_edge;  // per vertex, -1 at the root

    bool valid(const MultiGraph& g, const Orientation& d) const;
};

// k pairwise arc-disjoint spanning out-arborescences rooted at z, built arc
// by arc. An arc is admitted only if the residual digraph keeps lambda(z,w)
// >= trees-still-to-build for every w, and (with the grown set contracted
// into z) one more for vertices not yet reached; both checked by max-flow.
// Throws PreconditionError naming a violating cut when lambda(z,v) < k.
std::vector<Arborescence> pack_arborescences(const MultiGraph& g, const Orientation& d, int z,
                                             int k);

}  // namespace pathcut
