#pragma once

#include <algorithm>
#include <vector>

#include "pathcut/multigraph.hpp"
#include "pathcut/rng.hpp"

namespace pathcut::testutil {

// Random multigraph: m edges drawn uniformly with replacement (no loops).
inline MultiGraph random_multigraph(int n, int m, uint64_t seed) {
    Rng rng(seed);
    MultiGraph g(n);
    for (int i = 0; i < m; ++i) {
        int u = rng.index(n), v = rng.index(n);
        while (v == u) v = rng.index(n);
        g.add_edge(u, v);
    }
    return g;
}

// Random 2-edge-connected multigraph via ear growth: start from a cycle and
// repeatedly attach ears (paths between existing vertices).
inline MultiGraph random_bridgeless(int n, uint64_t seed) {
    Rng rng(seed);
    int c = 3 + rng.index(std::max(1, n - 3));
    MultiGraph g(n);
    for (int i = 0; i < c; ++i) g.add_edge(i, (i + 1) % c);
    int placed = c;
    while (placed < n) {
        // ear from u to v through up to 3 fresh vertices
        int len = 1 + rng.index(std::min(3, n - placed));
        int u = rng.index(placed);
        int v = rng.index(placed);
        while (v == u) v = rng.index(placed);
        int prev = u;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, placed);
            prev = placed++;
        }
        g.add_edge(prev, v);
    }
    // a few chords for variety
    int extra = rng.index(n / 2 + 1);
    for (int i = 0; i < extra; ++i) {
        int u = rng.index(n), v = rng.index(n);
        if (u != v) g.add_edge(u, v);
    }
    return g;
}

}  // namespace pathcut::testutil
