#include "pathcut/orientation.hpp"

#include <algorithm>
#include <queue>

#include "pathcut/connectivity.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/euler.hpp"
#include "pathcut/rng.hpp"

namespace pathcut {

namespace {

Orientation orient_balanced(const MultiGraph& g, Rng* rng) {
    int n = g.num_vertices();
    int m = g.num_edges();
    Orientation d;
    d.head.assign(m, -1);

    std::vector<uint8_t> seen(n, 0);
    for (int root = 0; root < n; ++root) {
        if (seen[root] || g.degree(root) == 0) continue;
        // component sweep
        std::vector<int> comp, stack{root};
        seen[root] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int e : g.incident(u)) {
                int w = g.other_end(e, u);
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());

        std::vector<int> odd;
        for (int u : comp)
            if (g.degree(u) % 2) odd.push_back(u);
        if (rng) rng->shuffle(odd);

        EulerAdj adj(n);
        std::vector<uint8_t> edge_in(m, 0);
        for (int u : comp)
            for (int e : g.incident(u)) {
                if (edge_in[e]) continue;
                edge_in[e] = 1;
                adj.add(g.ends(e).first, g.ends(e).second, e);
            }
        int virt = 0;
        for (size_t i = 0; i + 1 < odd.size(); i += 2) adj.add(odd[i], odd[i + 1], m + virt++);
        if (rng)
            for (auto& lst : adj.adj) rng->shuffle(lst);

        auto circuit = euler_circuit(adj, comp.front());
        for (const auto& step : circuit) {
            if (step.tag >= m) continue;  // virtual pairing edge, discarded
            d.head[step.tag] = g.other_end(step.tag, step.from);
        }
    }
    return d;
}

}  // namespace

Orientation balanced_orientation(const MultiGraph& g) { return orient_balanced(g, nullptr); }

Orientation balanced_orientation_seeded(const MultiGraph& g, uint64_t seed) {
    Rng rng(mix_seed(seed, 0x62616c6f72ULL));
    return orient_balanced(g, &rng);
}

int balance_defect(const MultiGraph& g, const Orientation& d) {
    int worst = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        worst = std::max(worst, std::abs(d.out_degree(g, v) - d.in_degree(g, v)));
    return worst;
}

std::optional<int> arc_strong_deficiency(const MultiGraph& g, const Orientation& d, int k) {
    int z = 0;
    UnitFlow f = make_flow_digraph(g, d);
    for (int v = 1; v < g.num_vertices(); ++v) {
        if (f.max_flow(z, v, k) < k) return v;
        if (f.max_flow(v, z, k) < k) return v;
    }
    return std::nullopt;
}

namespace {

// Reverses a directed path from an out-excess vertex outside the deficient
// cut's source side to an in-excess vertex inside it; raises the deficient
// out-cut by one while keeping |d+ - d-| <= 1 everywhere.
bool repair_once(const MultiGraph& g, Orientation& d, const std::vector<uint8_t>& in_s) {
    int n = g.num_vertices();
    std::vector<int> imb(n, 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        imb[d.tail_of(g, e)]++;
        imb[d.head_of(e)]--;
    }
    std::vector<int> parent_edge(n, -1);
    std::vector<uint8_t> vis(n, 0);
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (!in_s[v] && imb[v] > 0) {
            vis[v] = 1;
            q.push(v);
        }
    int target = -1;
    while (!q.empty() && target < 0) {
        int u = q.front();
        q.pop();
        for (int e : g.incident(u)) {
            if (d.tail_of(g, e) != u) continue;
            int w = d.head_of(e);
            if (vis[w]) continue;
            vis[w] = 1;
            parent_edge[w] = e;
            if (in_s[w] && imb[w] < 0) {
                target = w;
                break;
            }
            q.push(w);
        }
    }
    if (target < 0) return false;
    for (int v = target; parent_edge[v] >= 0;) {
        int e = parent_edge[v];
        int t = d.tail_of(g, e);
        d.head[e] = t;  // reverse
        v = t;
    }
    return true;
}

}  // namespace

ArcStrongResult balanced_arc_strong(const MultiGraph& g, int k, int budget, uint64_t seed) {
    require(k >= 1, "balanced_arc_strong: k >= 1 required");
    require(g.num_vertices() >= 2, "balanced_arc_strong: need at least two vertices");
    int lambda = edge_connectivity(g);
    require(lambda >= 2 * k, "balanced_arc_strong: edge connectivity " + std::to_string(lambda) +
                                 " below 2k = " + std::to_string(2 * k));

    ArcStrongResult res;
    int iterations = 0;
    int attempt = 0;
    while (iterations < budget) {
        Orientation d = balanced_orientation_seeded(g, mix_seed(seed, attempt++));
        ++iterations;
        bool stuck = false;
        while (iterations < budget && !stuck) {
            // certify, stopping at the first deficient direction
            UnitFlow f = make_flow_digraph(g, d);
            int z = 0;
            int bad_v = -1;
            bool bad_toward_root = false;
            for (int v = 1; v < g.num_vertices() && bad_v < 0; ++v) {
                if (f.max_flow(z, v, k) < k) {
                    bad_v = v;
                } else if (f.max_flow(v, z, k) < k) {
                    bad_v = v;
                    bad_toward_root = true;
                }
            }
            if (bad_v < 0) {
                check_internal(balance_defect(g, d) <= 1, "balanced_arc_strong: balance lost");
                res.orientation = std::move(d);
                res.certified = true;
                return res;
            }
            // deficient out-cut around the source side of the failed flow
            auto side = f.cut_source_side(bad_toward_root ? bad_v : z);
            std::vector<uint8_t> in_s(g.num_vertices(), 0);
            for (int v : side) in_s[v] = 1;
            if (repair_once(g, d, in_s)) {
                ++iterations;
                ++res.repairs;
            } else {
                stuck = true;  // no balance-preserving flip available, reseed
            }
        }
        ++res.restarts;
    }
    throw BudgetError("balanced_arc_strong: budget exhausted after " + std::to_string(res.repairs) +
                      " repairs / " + std::to_string(res.restarts) + " restarts");
}

}  // namespace pathcut
