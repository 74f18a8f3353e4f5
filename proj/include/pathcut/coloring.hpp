#pragma once

#include <functional>
#include <vector>

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Improper edge coloring with colors 1..k and per-vertex tallies d_i(v).
struct EdgeColoring {
    int k = 0;
    std::vector<int> color;               // per edge, in 1..k
    std::vector<std::vector<int>> tally;  // tally[v][i-1] = d_i(v)

    int d(int v, int i) const { return tally[v][i - 1]; }
    // max over v, i != j of |d_i(v) - d_j(v)|
    int max_spread(const MultiGraph& g) const;
    bool consistent(const MultiGraph& g) const;
};

// de Werra: every multigraph has an improper k-edge-coloring with
// |d_i(v) - d_j(v)| <= 2 for all v and i != j. Constructive: rebalance a
// violating color pair along an alternately-recolored euler circuit of the
// pair subgraph; the potential sum_v sum_i d_i(v)^2 strictly decreases.
EdgeColoring nearly_equitable_coloring(const MultiGraph& g, int k);

// Recolors the (i,j)-component containing v along an euler circuit, keeping
// whichever alternation phase minimizes `score` (evaluated over the
// component's vertices); no change when the current coloring already scores
// best. Returns true when the coloring changed. Building block for the main
// loop and for downstream chain-aware refinements.
using ColoringScore =
    std::function<long long(const EdgeColoring&, const std::vector<int>&)>;
bool rebalance_pair_scored(const MultiGraph& g, EdgeColoring& col, int i, int j, int v,
                           const ColoringScore& score, uint64_t traversal_seed = 0);

}  // namespace pathcut
