#include "pathcut/maxcut.hpp"

#include "pathcut/connectivity.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/rng.hpp"

namespace pathcut {

Cut locally_max_cut(const MultiGraph& g, uint64_t seed) {
    require(g.num_vertices() >= 1, "locally_max_cut: empty graph");
    int n = g.num_vertices();
    Rng rng(mix_seed(seed, 0x6d617863757431ULL));
    Cut cut;
    cut.side.resize(n);
    for (int v = 0; v < n; ++v) cut.side[v] = rng.coin() ? 1 : 0;

    // cross[v] = number of incident edges crossing under the current sides
    std::vector<int> cross(n, 0);
    auto recompute = [&](int v) {
        int c = 0;
        for (int e : g.incident(v)) c += cut.side[g.other_end(e, v)] != cut.side[v];
        return c;
    };
    for (int v = 0; v < n; ++v) cross[v] = recompute(v);

    // Flip any vertex with cross-degree below half its degree; each flip
    // raises |F| by d - 2*cross >= 1, so this terminates.
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    bool improved = true;
    while (improved) {
        improved = false;
        rng.shuffle(order);
        for (int v : order) {
            if (2 * cross[v] >= g.degree(v)) continue;
            cut.side[v] ^= 1;
            improved = true;
            for (int e : g.incident(v)) {
                int w = g.other_end(e, v);
                bool now_cross = cut.side[w] != cut.side[v];
                cross[w] += now_cross ? 1 : -1;
            }
            cross[v] = g.degree(v) - cross[v];
        }
    }

    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends(e);
        if (cut.side[u] != cut.side[v]) cut.cross.push_back(e);
    }
    MultiGraph gf = induced_cross_graph(g, cut);
    cut.cross_connectivity = gf.num_vertices() >= 2 ? edge_connectivity(gf) : 0;
    return cut;
}

MultiGraph induced_cross_graph(const MultiGraph& g, const Cut& cut, std::vector<int>* origin) {
    EdgeSet keep(g.num_edges());
    for (int e : cut.cross) keep.insert(e);
    return subgraph(g, keep, origin);
}

}  // namespace pathcut
