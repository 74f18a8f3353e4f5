#include "pathcut/generators.hpp"

#include <set>

#include "pathcut/errors.hpp"
#include "pathcut/rng.hpp"

namespace pathcut {

MultiGraph gen_circulant(int n, const std::vector<int>& offsets) {
    require(n >= 2, "gen_circulant: n >= 2");
    std::set<int> seen;
    MultiGraph g(n);
    for (int s : offsets) {
        require(s >= 1 && 2 * s <= n, "gen_circulant: offset out of range");
        require(seen.insert(s).second, "gen_circulant: duplicate offset");
        if (2 * s == n) {
            for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + s);
        } else {
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + s) % n);
        }
    }
    return g;
}

MultiGraph gen_random_regular(int n, int d, uint64_t seed) {
    require(n >= 1 && d >= 0 && (1LL * n * d) % 2 == 0, "gen_random_regular: nd must be even");
    require(d < n, "gen_random_regular: d < n required for simplicity");
    // Pairing model, rejecting loops/duplicates pair by pair; a full restart
    // when the tail of the stub pool gets stuck.
    for (int attempt = 0; attempt < 400; ++attempt) {
        Rng rng(mix_seed(seed, attempt));
        std::vector<int> stubs;
        stubs.reserve(n * d);
        for (int v = 0; v < n; ++v)
            for (int i = 0; i < d; ++i) stubs.push_back(v);
        std::set<std::pair<int, int>> used;
        std::vector<std::pair<int, int>> picked;
        bool ok = true;
        while (!stubs.empty() && ok) {
            ok = false;
            for (int redraw = 0; redraw < 200; ++redraw) {
                int i = rng.index(static_cast<int>(stubs.size()));
                int j = rng.index(static_cast<int>(stubs.size()));
                if (i == j) continue;
                int u = stubs[i], v = stubs[j];
                if (u == v) continue;
                auto key = std::make_pair(std::min(u, v), std::max(u, v));
                if (used.count(key)) continue;
                used.insert(key);
                picked.emplace_back(u, v);
                if (i < j) std::swap(i, j);
                stubs.erase(stubs.begin() + i);
                stubs.erase(stubs.begin() + j);
                ok = true;
                break;
            }
        }
        if (!ok) continue;
        MultiGraph g(n);
        for (auto [u, v] : picked) g.add_edge(u, v);
        return g;
    }
    throw BudgetError("gen_random_regular: simplicity rejection failed");
}

MultiGraph gen_fig1_gadget() {
    MultiGraph g(1);  // vertex 0 = center
    for (int arm = 0; arm < 3; ++arm) {
        int apex = g.add_vertex();
        for (int chain = 0; chain < 3; ++chain) {
            // 8-edge path of 9 fresh vertices, tied to center below and apex above
            int prev = -1;
            int first = -1;
            for (int i = 0; i < 9; ++i) {
                int v = g.add_vertex();
                if (i == 0) first = v;
                else g.add_edge(prev, v);
                prev = v;
            }
            g.add_edge(0, first);
            g.add_edge(prev, apex);
        }
    }
    check_internal(g.num_edges() == 90, "gen_fig1_gadget: edge count");
    return g;
}

}  // namespace pathcut
