#include "pathcut/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

#include "pathcut/errors.hpp"

namespace pathcut {

std::string VerificationReport::summary() const {
    if (verdict) return "ok";
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += v.type + (v.where.empty() ? "" : " at " + v.where);
    }
    return s;
}

VerificationReport verify_decomposition(const MultiGraph& g, const std::vector<Path>& paths,
                                        const std::optional<Path>& leftover, int ell) {
    VerificationReport rep;
    rep.path_count = static_cast<int>(paths.size());
    rep.leftover_length = leftover ? leftover->length() : 0;
    std::vector<int> cover(g.num_edges(), 0);
    auto check_path = [&](const Path& p, bool is_leftover) {
        std::string where = (is_leftover ? "leftover" : "path") + std::string(" ") +
                            std::to_string(&p - paths.data());
        if (!p.valid(g)) {
            rep.violations.push_back({"invalid path", where});
            return;
        }
        if (!is_leftover && p.length() != ell)
            rep.violations.push_back({"length != ell", where});
        if (is_leftover && (p.length() < 1 || p.length() > ell))
            rep.violations.push_back({"leftover length outside 1..ell", where});
        for (int e : p.edges) {
            if (++cover[e] > 1) rep.violations.push_back({"duplicate edge", std::to_string(e)});
        }
    };
    for (const Path& p : paths) check_path(p, false);
    if (leftover) check_path(*leftover, true);
    for (int e = 0; e < g.num_edges(); ++e)
        if (cover[e] == 0) {
            rep.violations.push_back({"uncovered edge", std::to_string(e)});
            rep.coverage_delta++;
        }
    rep.verdict = rep.violations.empty();
    return rep;
}

namespace {

// all simple ell-paths through edge e0 over uncovered edges, deterministic
// order; paths reported as edge-id lists
void enum_paths_through(const MultiGraph& g, const std::vector<int>& cover, int e0, int ell,
                        std::vector<std::vector<int>>& out) {
    auto [u0, v0] = g.ends(e0);
    // left part from u0 (a edges), right part from v0 (ell-1-a edges)
    std::vector<int> left, right;
    std::vector<uint8_t> on_path(g.num_vertices(), 0);

    std::function<void(int, int)> grow_right;
    std::function<void(int, int, int)> grow_left;

    grow_right = [&](int from, int need) {
        if (need == 0) {
            std::vector<int> path;
            path.insert(path.end(), left.rbegin(), left.rend());
            path.push_back(e0);
            path.insert(path.end(), right.begin(), right.end());
            out.push_back(std::move(path));
            return;
        }
        for (int e : g.incident(from)) {
            if (cover[e] || e == e0) continue;
            if (std::find(right.begin(), right.end(), e) != right.end()) continue;
            if (std::find(left.begin(), left.end(), e) != left.end()) continue;
            int w = g.other_end(e, from);
            if (on_path[w]) continue;
            right.push_back(e);
            on_path[w] = 1;
            grow_right(w, need - 1);
            on_path[w] = 0;
            right.pop_back();
        }
    };
    grow_left = [&](int from, int need, int right_need) {
        if (need == 0) {
            grow_right(v0, right_need);
            return;
        }
        for (int e : g.incident(from)) {
            if (cover[e] || e == e0) continue;
            if (std::find(left.begin(), left.end(), e) != std::end(left)) continue;
            int w = g.other_end(e, from);
            if (on_path[w]) continue;
            left.push_back(e);
            on_path[w] = 1;
            grow_left(w, need - 1, right_need);
            on_path[w] = 0;
            left.pop_back();
        }
    };

    on_path[u0] = 1;
    on_path[v0] = 1;
    for (int a = 0; a < ell; ++a) grow_left(u0, a, ell - 1 - a);
    on_path[u0] = 0;
    on_path[v0] = 0;
}

Path path_from_edges(const MultiGraph& g, const std::vector<int>& edges) {
    Path p;
    if (edges.size() == 1) {
        auto [a, b] = g.ends(edges[0]);
        p.verts = {a, b};
        p.edges = edges;
        return p;
    }
    // orient: first vertex is the end of edge[0] not shared with edge[1]
    auto [a, b] = g.ends(edges[0]);
    int shared = (g.is_end(edges[1], a)) ? a : b;
    int cur = (shared == a) ? b : a;
    p.verts.push_back(cur);
    cur = shared;
    p.verts.push_back(cur);
    p.edges.push_back(edges[0]);
    for (size_t i = 1; i < edges.size(); ++i) {
        cur = g.other_end(edges[i], cur);
        p.verts.push_back(cur);
        p.edges.push_back(edges[i]);
    }
    return p;
}

struct CapSignal {
    std::vector<int> state;
};

}  // namespace

OracleResult brute_force_decomposable(const MultiGraph& g, int ell, const OracleOptions& opt) {
    require(ell >= 1, "brute_force_decomposable: ell >= 1");
    require(g.num_edges() <= opt.edge_limit, "brute_force_decomposable: edge limit exceeded");
    OracleResult res;
    res.verdict = OracleResult::Verdict::no;
    int m = g.num_edges();
    if (m % ell != 0) return res;

    std::vector<int> cover(m, 0);
    std::vector<int> deg(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) deg[v] = g.degree(v);
    int covered = 0;
    std::vector<std::vector<int>> chosen;
    std::vector<int> stack_choice;

    auto started = std::chrono::steady_clock::now();
    auto over_budget = [&] {
        if (opt.budget_seconds <= 0) return false;
        if ((res.nodes_explored & 1023) != 0) return false;
        auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double>(now - started).count() > opt.budget_seconds;
    };

    std::function<bool(int)> dfs = [&](int level) -> bool {
        ++res.nodes_explored;
        if (covered == m) return true;
        if (over_budget()) throw CapSignal{stack_choice};
        // degree-parity pruning: each placed path fixes at most two odd ends
        int odd = 0;
        for (int v = 0; v < g.num_vertices(); ++v) odd += deg[v] % 2;
        int remaining = (m - covered) / ell;
        if (odd > 2 * remaining) return false;

        int e0 = -1;
        for (int e = 0; e < m; ++e)
            if (!cover[e]) {
                e0 = e;
                break;
            }
        std::vector<std::vector<int>> cands;
        enum_paths_through(g, cover, e0, ell, cands);
        size_t start = 0;
        if (level < static_cast<int>(opt.resume_state.size())) {
            start = static_cast<size_t>(opt.resume_state[level]);
            if (start >= cands.size()) return false;
        }
        for (size_t i = start; i < cands.size(); ++i) {
            stack_choice.push_back(static_cast<int>(i));
            for (int e : cands[i]) {
                cover[e] = 1;
                ++covered;
                auto [a, b] = g.ends(e);
                deg[a]--;
                deg[b]--;
            }
            chosen.push_back(cands[i]);
            if (dfs(level + 1)) return true;
            chosen.pop_back();
            for (int e : cands[i]) {
                cover[e] = 0;
                --covered;
                auto [a, b] = g.ends(e);
                deg[a]++;
                deg[b]++;
            }
            stack_choice.pop_back();
        }
        return false;
    };

    try {
        if (dfs(0)) {
            res.verdict = OracleResult::Verdict::yes;
            for (const auto& edges : chosen) res.witness.push_back(path_from_edges(g, edges));
        }
    } catch (const CapSignal& cap) {
        res.verdict = OracleResult::Verdict::capped;
        res.state = cap.state;
    }
    return res;
}

bool permutation_decomposable(const MultiGraph& g, int ell) {
    int m = g.num_edges();
    if (m % ell != 0) return false;
    if (m == 0) return true;
    require(m <= 10, "permutation_decomposable: too many edges");
    std::vector<int> perm(m);
    for (int e = 0; e < m; ++e) perm[e] = e;

    auto block_is_path = [&](int from) {
        // walk-ordered: consecutive edges chain through shared endpoints with
        // all vertices distinct
        std::vector<int> edges(perm.begin() + from, perm.begin() + from + ell);
        if (ell == 1) return true;
        // try both orientations of the first edge
        for (int flip = 0; flip < 2; ++flip) {
            auto [a, b] = g.ends(edges[0]);
            int start = flip ? b : a;
            int cur = flip ? a : b;
            std::set<int> seen{start, cur};
            if (start == cur) continue;
            bool ok = true;
            for (int i = 1; i < ell && ok; ++i) {
                if (!g.is_end(edges[i], cur)) {
                    ok = false;
                    break;
                }
                cur = g.other_end(edges[i], cur);
                if (!seen.insert(cur).second) ok = false;
            }
            if (ok) return true;
        }
        return false;
    };

    do {
        bool ok = true;
        for (int from = 0; from < m && ok; from += ell)
            if (!block_is_path(from)) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace pathcut
