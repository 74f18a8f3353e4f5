#include "pathcut/arborescence.hpp"

#include <algorithm>
#include <string>

#include "pathcut/connectivity.hpp"
#include "pathcut/errors.hpp"

namespace pathcut {

bool Arborescence::valid(const MultiGraph& g, const Orientation& d) const {
    int n = g.num_vertices();
    if (static_cast<int>(enter_edge.size()) != n) return false;
    if (root < 0 || root >= n || enter_edge[root] != -1) return false;
    std::vector<uint8_t> used_edge(g.num_edges(), 0);
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        int e = enter_edge[v];
        if (e < 0 || e >= g.num_edges()) return false;
        if (d.head_of(e) != v) return false;
        if (used_edge[e]) return false;
        used_edge[e] = 1;
    }
    // acyclic and rooted: walking tails must reach the root from every vertex
    for (int v = 0; v < n; ++v) {
        int u = v, steps = 0;
        while (u != root) {
            u = d.tail_of(g, enter_edge[u]);
            if (++steps > n) return false;
        }
    }
    return true;
}

namespace {

std::string cut_report(const MultiGraph& g, const std::vector<int>& side) {
    std::string s = "{";
    for (size_t i = 0; i < side.size() && i < 12; ++i) {
        if (i) s += ",";
        s += std::to_string(g.label(side[i]));
    }
    if (side.size() > 12) s += ",...";
    s += "}";
    return s;
}

}  // namespace

std::vector<Arborescence> pack_arborescences(const MultiGraph& g, const Orientation& d, int z,
                                             int k) {
    require(k >= 1, "pack_arborescences: k >= 1 required");
    int n = g.num_vertices();
    int m = g.num_edges();
    require(z >= 0 && z < n, "pack_arborescences: bad root");
    if (n == 1) return std::vector<Arborescence>(k, Arborescence{z, {-1}});

    // One flow structure serves both families: real arcs plus a super source
    // whose arcs stand for the contraction of the grown set S into z. Each
    // vertex gets k parallel super arcs so contraction does not throttle flow.
    const int super = n;
    UnitFlow flow(n + 1);
    for (int e = 0; e < m; ++e) flow.add_arc(d.tail_of(g, e), d.head_of(e));
    std::vector<std::vector<int>> super_arc(n);
    auto set_super = [&](int v, bool on) {
        for (int a : super_arc[v]) flow.set_enabled(a, on);
    };
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < k; ++c) super_arc[v].push_back(flow.add_arc(super, v));
        set_super(v, false);
    }

    std::vector<uint8_t> alive(m, 1);
    std::vector<int> out_load(n, 0);  // arcs consumed across all trees per tail
    std::vector<Arborescence> trees;

    for (int round = 1; round <= k; ++round) {
        const int qa = k - round;      // trees still to build after this one
        const int qb = k - round + 1;  // plus the current tree's own entry

        std::vector<uint8_t> in_s(n, 0);
        in_s[z] = 1;
        set_super(z, true);

        // support[w][e] = 1 when w's cached flow routes through arc e
        std::vector<std::vector<uint8_t>> supA(n), supB(n);
        auto run_and_store = [&](int src, int w, int q, std::vector<uint8_t>& sup) {
            int got = flow.max_flow(src, w, q);
            if (got < q) return got;
            sup.assign(m, 0);
            for (int e = 0; e < m; ++e)
                if (flow.flow_on(e)) sup[e] = 1;
            return got;
        };

        for (int w = 0; w < n; ++w) {
            if (w == z) continue;
            if (qa > 0) {
                int got = run_and_store(z, w, qa, supA[w]);
                check_internal(got >= qa, "pack_arborescences: family-A invariant broken at round " +
                                              std::to_string(round));
            }
            int got = run_and_store(super, w, qb, supB[w]);
            if (got < qb) {
                auto side = flow.cut_source_side(super);
                side.erase(std::remove(side.begin(), side.end(), super), side.end());
                if (round == 1)
                    throw PreconditionError(
                        "pack_arborescences: lambda(z," + std::to_string(g.label(w)) + ") = " +
                        std::to_string(got) + " < k = " + std::to_string(k) +
                        "; violating cut side " + cut_report(g, side));
                throw InternalError("pack_arborescences: family-B invariant broken at round " +
                                    std::to_string(round));
            }
        }

        Arborescence tree;
        tree.root = z;
        tree.enter_edge.assign(n, -1);
        int covered = 1;

        while (covered < n) {
            // boundary arcs ordered by how loaded their tail already is, so
            // the union of the trees keeps near-uniform degrees
            std::vector<std::pair<int, int>> boundary;
            for (int e = 0; e < m; ++e) {
                if (!alive[e]) continue;
                int u = d.tail_of(g, e), v = d.head_of(e);
                if (!in_s[u] || in_s[v]) continue;
                boundary.push_back({out_load[u], e});
            }
            std::sort(boundary.begin(), boundary.end());
            int chosen = -1;
            for (auto [load, e] : boundary) {
                if (chosen >= 0) break;
                int u = d.tail_of(g, e), v = d.head_of(e);
                if (!in_s[u] || in_s[v]) continue;

                // Tentatively delete the arc, contract v into the source side,
                // and re-derive every cached flow that used the arc; all must
                // still meet their demands.
                flow.set_enabled(e, false);
                set_super(v, true);
                bool ok = true;
                std::vector<std::pair<int, std::vector<uint8_t>>> newA, newB;
                for (int w = 0; w < n && ok; ++w) {
                    if (w == z) continue;
                    if (qa > 0 && supA[w][e]) {
                        std::vector<uint8_t> sup;
                        if (run_and_store(z, w, qa, sup) < qa)
                            ok = false;
                        else
                            newA.emplace_back(w, std::move(sup));
                    }
                    if (ok && !in_s[w] && w != v && supB[w][e]) {
                        std::vector<uint8_t> sup;
                        if (run_and_store(super, w, qb, sup) < qb)
                            ok = false;
                        else
                            newB.emplace_back(w, std::move(sup));
                    }
                }
                if (!ok) {
                    flow.set_enabled(e, true);
                    set_super(v, false);
                    continue;
                }
                for (auto& [w, sup] : newA) supA[w] = std::move(sup);
                for (auto& [w, sup] : newB) supB[w] = std::move(sup);
                chosen = e;
            }
            check_internal(chosen >= 0,
                           "pack_arborescences: no admissible boundary arc at round " +
                               std::to_string(round) + " with " + std::to_string(covered) +
                               " vertices covered");
            int v = d.head_of(chosen);
            alive[chosen] = 0;  // consumed by this tree, stays disabled
            tree.enter_edge[v] = chosen;
            out_load[d.tail_of(g, chosen)]++;
            in_s[v] = 1;  // super arcs for v already enabled by the accepted test
            ++covered;
        }

        check_internal(tree.valid(g, d), "pack_arborescences: built tree failed validation");
        trees.push_back(std::move(tree));
        for (int v = 0; v < n; ++v) set_super(v, false);
    }

    // pairwise arc-disjointness: every edge consumed at most once overall
    std::vector<uint8_t> used(m, 0);
    for (const auto& t : trees)
        for (int v = 0; v < n; ++v) {
            if (v == t.root) continue;
            check_internal(!used[t.enter_edge[v]], "pack_arborescences: arc reused across trees");
            used[t.enter_edge[v]] = 1;
        }
    return trees;
}

}  // namespace pathcut
