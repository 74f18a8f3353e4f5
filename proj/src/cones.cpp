#include "pathcut/cones.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <unordered_map>

#include "pathcut/errors.hpp"
#include "pathcut/fraction.hpp"
#include "pathcut/orientation.hpp"
#include "pathcut/rng.hpp"

namespace pathcut {

int ConeSystem::item_color(int item) const {
    if (is_dummy(item)) return dummies[item - host->num_edges()].color;
    return coloring.color[item];
}

int ConeSystem::item_tail(int item) const {
    if (is_dummy(item)) {
        const Dummy& d = dummies[item - host->num_edges()];
        return d.from_dummy ? -1 : d.vertex;
    }
    return orientation.tail_of(*host, item);
}

int ConeSystem::item_head(int item) const {
    if (is_dummy(item)) {
        const Dummy& d = dummies[item - host->num_edges()];
        return d.from_dummy ? d.vertex : -1;
    }
    return orientation.head_of(item);
}

int ConeSystem::cone_size(int cone) const {
    const Cone& co = cones[cone];
    int h = co.minus >= 0 ? co.minus : co.plus;
    return static_cast<int>(halves[h].items.size());
}

namespace {

// Per-vertex, per-color in-excess targets (in_i - out_i at odd class
// degrees) chosen to minimize sum_i ||E_i^-(v)| - |E_{i+1}^+(v)||, i.e. the
// number of dummy edges the cone stage would need. Small DP over the color
// chain.
std::vector<int> chain_targets(const std::vector<int>& class_deg, long long* cost_out = nullptr) {
    int k = static_cast<int>(class_deg.size());
    auto choices = [&](int i) {
        return class_deg[i] % 2 == 0 ? std::vector<int>{0} : std::vector<int>{-1, 1};
    };
    // dp[t-index] = (cost, previous choice chain)
    std::vector<std::vector<int>> keep(k);
    std::vector<int> prev_choice = choices(0);
    std::vector<long long> prev_cost(prev_choice.size(), 0);
    std::vector<std::vector<int>> back(k);
    for (int i = 1; i < k; ++i) {
        std::vector<int> cur_choice = choices(i);
        std::vector<long long> cur_cost(cur_choice.size(), LLONG_MAX);
        back[i].assign(cur_choice.size(), 0);
        for (size_t a = 0; a < prev_choice.size(); ++a)
            for (size_t b = 0; b < cur_choice.size(); ++b) {
                // |in_i - out_{i+1}| = |(d_i + t_i) - (d_{i+1} - t_{i+1})| / 2
                long long gap = std::llabs((class_deg[i - 1] + prev_choice[a]) -
                                           (class_deg[i] - cur_choice[b]));
                long long c = prev_cost[a] + gap;
                if (c < cur_cost[b]) {
                    cur_cost[b] = c;
                    back[i][b] = static_cast<int>(a);
                }
            }
        keep[i - 1] = prev_choice;
        prev_choice = cur_choice;
        prev_cost = cur_cost;
    }
    keep[k - 1] = prev_choice;
    size_t best = 0;
    for (size_t b = 1; b < prev_cost.size(); ++b)
        if (prev_cost[b] < prev_cost[best]) best = b;
    if (cost_out) *cost_out = k >= 2 ? prev_cost[best] : 0;
    std::vector<int> t(k, 0);
    int cur = static_cast<int>(best);
    for (int i = k - 1; i >= 0; --i) {
        t[i] = keep[i][cur];
        if (i > 0) cur = back[i][cur];
    }
    return t;
}

// Steers a balanced orientation toward prescribed in-excess signs at odd
// vertices by reversing directed paths between mis-signed vertices; each
// reversal fixes a (+,-) pair and keeps |d+ - d-| <= 1 everywhere.
void steer_signs(const MultiGraph& sub, Orientation& d, const std::vector<int>& target) {
    int n = sub.num_vertices();
    // per-component flip bit: reversing a whole euler component negates every
    // sign in it; take the better side
    {
        std::vector<int> comp(n, -1);
        int ncomp = 0;
        for (int v = 0; v < n; ++v) {
            if (comp[v] >= 0 || sub.degree(v) == 0) continue;
            std::vector<int> stack{v};
            comp[v] = ncomp;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int e : sub.incident(u)) {
                    int w = sub.other_end(e, u);
                    if (comp[w] < 0) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ++ncomp;
        }
        std::vector<int> sign(n, 0);
        for (int e = 0; e < sub.num_edges(); ++e) {
            sign[d.head_of(e)]++;
            sign[d.tail_of(sub, e)]--;
        }
        std::vector<int> gain(ncomp, 0);  // flipped-matches minus current-matches
        for (int v = 0; v < n; ++v) {
            if (comp[v] < 0 || target[v] == 0 || sub.degree(v) % 2 == 0) continue;
            int now = sign[v] == target[v] ? 1 : 0;
            int flipped = -sign[v] == target[v] ? 1 : 0;
            gain[comp[v]] += flipped - now;
        }
        for (int e = 0; e < sub.num_edges(); ++e) {
            int c = comp[d.head_of(e)];
            if (gain[c] > 0) d.head[e] = d.tail_of(sub, e);
        }
    }
    while (true) {
        std::vector<int> sign(n, 0);
        for (int e = 0; e < sub.num_edges(); ++e) {
            sign[d.head_of(e)]++;
            sign[d.tail_of(sub, e)]--;
        }
        // want +1 (more in) but have -1: path must START here (reversal adds in)
        std::vector<uint8_t> is_src(n, 0), is_dst(n, 0);
        bool any_src = false, any_dst = false;
        for (int v = 0; v < n; ++v) {
            if (target[v] == 0 || sub.degree(v) % 2 == 0) continue;
            if (sign[v] == -1 && target[v] == 1) is_src[v] = any_src = true;
            if (sign[v] == 1 && target[v] == -1) is_dst[v] = any_dst = true;
        }
        if (!any_src || !any_dst) return;
        std::vector<int> parent(n, -1);
        std::vector<uint8_t> vis(n, 0);
        std::vector<int> queue;
        for (int v = 0; v < n; ++v)
            if (is_src[v]) {
                vis[v] = 1;
                queue.push_back(v);
            }
        int found = -1;
        for (size_t qi = 0; qi < queue.size() && found < 0; ++qi) {
            int u = queue[qi];
            for (int e : sub.incident(u)) {
                if (d.tail_of(sub, e) != u) continue;
                int w = d.head_of(e);
                if (vis[w]) continue;
                vis[w] = 1;
                parent[w] = e;
                if (is_dst[w]) {
                    found = w;
                    break;
                }
                queue.push_back(w);
            }
        }
        if (found < 0) return;  // unreachable; leave the rest to dummy edges
        for (int v = found; parent[v] >= 0;) {
            int e = parent[v];
            int t = d.tail_of(sub, e);
            d.head[e] = t;
            v = t;
        }
    }
}

}  // namespace

namespace {

// Swaps colors i/j along an alternating trail from v (first edge colored j):
// v trades one j for one i, interior visits cancel, and the far endpoint
// trades according to the last edge's color. The stop position is chosen to
// strictly lower the summed chain cost of the two endpoints while keeping
// the de Werra spread. This is the classical alternating-trail move.
bool chain_trail_swap(const MultiGraph& g, EdgeColoring& col, int v, int i, int j,
                      uint64_t seed) {
    auto vcost = [](const std::vector<int>& t) {
        long long c = 0;
        chain_targets(t, &c);
        return c;
    };
    auto spread_ok = [](const std::vector<int>& t) {
        auto [lo, hi] = std::minmax_element(t.begin(), t.end());
        return *hi - *lo <= 2;
    };
    Rng rng(seed);
    std::vector<uint8_t> used(g.num_edges(), 0);
    std::vector<int> trail;
    int cur = v;
    int want = j;
    long long base_v = vcost(col.tally[v]);
    int best_stop = -1;
    long long best_gain = 0;
    int cap = std::min(g.num_edges(), 240);
    for (int step = 0; step < cap; ++step) {
        std::vector<int> cands;
        for (int e : g.incident(cur))
            if (!used[e] && col.color[e] == want) cands.push_back(e);
        if (cands.empty()) break;
        int e = cands[rng.index(static_cast<int>(cands.size()))];
        used[e] = 1;
        trail.push_back(e);
        cur = g.other_end(e, cur);
        int last_color = want;
        want = want == i ? j : i;
        if (cur == v) continue;
        // endpoint deltas if we stop here
        std::vector<int> tv = col.tally[v];
        tv[j - 1]--;
        tv[i - 1]++;
        std::vector<int> tu = col.tally[cur];
        tu[last_color - 1]--;
        tu[(last_color == i ? j : i) - 1]++;
        if (!spread_ok(tv) || !spread_ok(tu)) continue;
        long long gain = base_v + vcost(col.tally[cur]) - vcost(tv) - vcost(tu);
        if (gain > best_gain) {
            best_gain = gain;
            best_stop = static_cast<int>(trail.size());
        }
    }
    if (best_stop < 0) return false;
    for (int t = 0; t < best_stop; ++t) {
        int e = trail[t];
        int old_c = col.color[e];
        int new_c = old_c == i ? j : i;
        auto [a, b] = g.ends(e);
        col.tally[a][old_c - 1]--;
        col.tally[b][old_c - 1]--;
        col.tally[a][new_c - 1]++;
        col.tally[b][new_c - 1]++;
        col.color[e] = new_c;
    }
    return true;
}

}  // namespace

void refine_coloring_for_chains(const MultiGraph& g, EdgeColoring& col, int sweeps) {
    if (col.k < 2) return;
    ColoringScore chain_score = [](const EdgeColoring& c, const std::vector<int>& comp) {
        long long s = 0;
        for (int u : comp) {
            long long cost = 0;
            chain_targets(c.tally[u], &cost);
            s += cost * 4096;
            auto [lo, hi] = std::minmax_element(c.tally[u].begin(), c.tally[u].end());
            if (*hi - *lo > 2) s += (1LL << 40);  // never break the de Werra bound
            for (int t : c.tally[u]) s += 1LL * t * t;
        }
        return s;
    };
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        bool any = false;
        for (int v = 0; v < g.num_vertices(); ++v) {
            long long cost = 0;
            chain_targets(col.tally[v], &cost);
            if (cost == 0) continue;
            for (int i = 1; i <= col.k && cost > 0; ++i)
                for (int j = i + 1; j <= col.k; ++j) {
                    // several euler traversals of the pair component; each
                    // offers two alternation phases
                    for (uint64_t var = 0; var < 4; ++var) {
                        if (rebalance_pair_scored(g, col, i, j, v, chain_score,
                                                  var == 0 ? 0 : mix_seed(0x9eC4, sweep, v, var))) {
                            any = true;
                            chain_targets(col.tally[v], &cost);
                            break;
                        }
                    }
                    if (cost == 0) break;
                }
            // stalled patterns: alternating-trail swaps between endpoints
            for (int i = 1; i <= col.k && cost > 0; ++i)
                for (int j = 1; j <= col.k && cost > 0; ++j) {
                    if (i == j) continue;
                    for (uint64_t var = 0; var < 3 && cost > 0; ++var)
                        if (chain_trail_swap(g, col, v, i, j, mix_seed(0x7311, sweep, v, i * 8 + j + var * 64))) {
                            any = true;
                            chain_targets(col.tally[v], &cost);
                        }
                }
        }
        if (!any) break;
    }
}

namespace {

// all cost-minimal target vectors of a degree chain (parity-locked signs)
std::vector<std::vector<int>> optimal_target_vectors(const std::vector<int>& deg) {
    int k = static_cast<int>(deg.size());
    std::vector<int> odd_pos;
    for (int i = 0; i < k; ++i)
        if (deg[i] % 2) odd_pos.push_back(i);
    long long best = -1;
    std::vector<std::vector<int>> out;
    int combos = 1 << odd_pos.size();
    for (int mask = 0; mask < combos; ++mask) {
        std::vector<int> t(k, 0);
        for (size_t b = 0; b < odd_pos.size(); ++b) t[odd_pos[b]] = (mask >> b) & 1 ? 1 : -1;
        long long cost = 0;
        for (int i = 0; i + 1 < k; ++i)
            cost += std::llabs((deg[i] + t[i]) - (deg[i + 1] - t[i + 1]));
        if (best < 0 || cost < best) {
            best = cost;
            out.clear();
        }
        if (cost == best) out.push_back(std::move(t));
    }
    return out;
}

}  // namespace

Orientation per_color_balanced_orientation(const MultiGraph& g, const EdgeColoring& col) {
    Orientation out;
    out.head.assign(g.num_edges(), -1);
    // in-excess targets that flatten |E_i^-(v)| vs |E_{i+1}^+(v)|; among the
    // cost-minimal vectors per vertex, hill-climb toward per-class balance
    // (sum of targets 0) so the sign steering is not structurally blocked
    int n = g.num_vertices();
    std::vector<std::vector<std::vector<int>>> options(n);
    std::vector<int> choice(n, 0);
    for (int v = 0; v < n; ++v) options[v] = optimal_target_vectors(col.tally[v]);

    // bucket = (class, component of the class subgraph); steering can only
    // trade signs inside one bucket, so each bucket's target sum should be 0
    std::vector<std::vector<int>> bucket_of(col.k, std::vector<int>(n, -1));
    int nbuckets = 0;
    for (int i = 0; i < col.k; ++i) {
        std::vector<std::vector<int>> adj(n);
        for (int e = 0; e < g.num_edges(); ++e)
            if (col.color[e] == i + 1) {
                auto [a, b] = g.ends(e);
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
        for (int v = 0; v < n; ++v) {
            if (bucket_of[i][v] >= 0 || adj[v].empty()) continue;
            int id = nbuckets++;
            std::vector<int> stack{v};
            bucket_of[i][v] = id;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int w : adj[u])
                    if (bucket_of[i][w] < 0) {
                        bucket_of[i][w] = id;
                        stack.push_back(w);
                    }
            }
        }
    }
    std::vector<long long> bucket_sum(nbuckets, 0);
    auto apply_vec = [&](int v, int a, int sign) {
        for (int i = 0; i < col.k; ++i) {
            int b = bucket_of[i][v];
            if (b >= 0) bucket_sum[b] += sign * options[v][a][i];
        }
    };
    for (int v = 0; v < n; ++v) apply_vec(v, choice[v], +1);
    auto imbalance = [&] {
        long long s = 0;
        for (long long x : bucket_sum) s += std::llabs(x);
        return s;
    };
    for (int pass = 0; pass < 8 && imbalance() > 0; ++pass) {
        bool any = false;
        for (int v = 0; v < n; ++v) {
            if (options[v].size() <= 1) continue;
            int best_alt = -1;
            long long best_val = imbalance();
            for (size_t a = 0; a < options[v].size(); ++a) {
                if (static_cast<int>(a) == choice[v]) continue;
                apply_vec(v, choice[v], -1);
                apply_vec(v, static_cast<int>(a), +1);
                long long val = imbalance();
                apply_vec(v, static_cast<int>(a), -1);
                apply_vec(v, choice[v], +1);
                if (val < best_val) {
                    best_val = val;
                    best_alt = static_cast<int>(a);
                }
            }
            if (best_alt >= 0) {
                apply_vec(v, choice[v], -1);
                apply_vec(v, best_alt, +1);
                choice[v] = best_alt;
                any = true;
            }
        }
        if (!any) break;
    }
    std::vector<std::vector<int>> targets(n);
    for (int v = 0; v < n; ++v) targets[v] = options[v][choice[v]];

    for (int i = 1; i <= col.k; ++i) {
        EdgeSet cls(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e)
            if (col.color[e] == i) cls.insert(e);
        std::vector<int> origin;
        MultiGraph sub = subgraph(g, cls, &origin);
        std::vector<int> tgt(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) tgt[v] = targets[v][i - 1];
        auto mismatches = [&](const Orientation& d) {
            int bad = 0;
            std::vector<int> sign(g.num_vertices(), 0);
            for (int e = 0; e < sub.num_edges(); ++e) {
                sign[d.head_of(e)]++;
                sign[d.tail_of(sub, e)]--;
            }
            for (int v = 0; v < g.num_vertices(); ++v)
                if (tgt[v] != 0 && sub.degree(v) % 2 == 1 && sign[v] != tgt[v]) ++bad;
            return bad;
        };
        Orientation best;
        int best_bad = -1;
        for (uint64_t attempt = 0; attempt < 4; ++attempt) {
            Orientation d = attempt == 0 ? balanced_orientation(sub)
                                         : balanced_orientation_seeded(sub, mix_seed(0x57EE, i, attempt));
            steer_signs(sub, d, tgt);
            int bad = mismatches(d);
            if (best_bad < 0 || bad < best_bad) {
                best_bad = bad;
                best = std::move(d);
            }
            if (best_bad == 0) break;
        }
        for (int j = 0; j < sub.num_edges(); ++j) out.head[origin[j]] = best.head[j];
    }
    return out;
}

namespace {

// sizes of the {c, c-1} partition of a set of size s; one undersized part
// when s < r*c and strict is off
std::vector<int> half_cone_sizes(int s, int c, bool strict, bool* strict_ok) {
    std::vector<int> sizes;
    if (s == 0) return sizes;
    int r = s % (c - 1);
    if (s >= r * c) {
        int t = (s - r * c) / (c - 1);
        sizes.assign(r, c);
        sizes.insert(sizes.end(), t, c - 1);
    } else {
        *strict_ok = false;
        if (strict) throw PreconditionError("cone partition infeasible: set of size " +
                                            std::to_string(s) + " with c = " + std::to_string(c));
        int q = s / (c - 1);
        sizes.assign(q, c - 1);
        if (s % (c - 1)) sizes.push_back(s % (c - 1));
    }
    return sizes;
}

}  // namespace

ConeSystem build_cone_system(const MultiGraph& g, const EdgeColoring& coloring,
                             const Orientation& orientation, int ell, int c, uint64_t seed,
                             bool strict) {
    require(ell >= 2, "build_cone_system: ell >= 2");
    require(c >= 3, "build_cone_system: c >= 3");
    require(coloring.k == ell, "build_cone_system: coloring must use ell colors");
    int n = g.num_vertices();
    int m = g.num_edges();

    ConeSystem cs;
    cs.host = &g;
    cs.ell = ell;
    cs.c = c;
    cs.coloring = coloring;
    cs.orientation = orientation;

    // in/out item lists per (vertex, color)
    auto idx = [&](int v, int i) { return v * ell + (i - 1); };
    std::vector<std::vector<int>> in_items(static_cast<size_t>(n) * ell);
    std::vector<std::vector<int>> out_items(static_cast<size_t>(n) * ell);
    for (int e = 0; e < m; ++e) {
        int i = coloring.color[e];
        in_items[idx(orientation.head_of(e), i)].push_back(e);
        out_items[idx(orientation.tail_of(g, e), i)].push_back(e);
    }

    // dummy edges equalize |E_i^-(v)| and |E_{i+1}^+(v)|
    for (int v = 0; v < n; ++v)
        for (int i = 1; i < ell; ++i) {
            int diff = static_cast<int>(in_items[idx(v, i)].size()) -
                       static_cast<int>(out_items[idx(v, i + 1)].size());
            while (diff > 0) {  // add out-dummies v -> v0 of color i+1
                int item = m + static_cast<int>(cs.dummies.size());
                cs.dummies.push_back({v, i + 1, false});
                out_items[idx(v, i + 1)].push_back(item);
                --diff;
            }
            while (diff < 0) {  // add in-dummies v0 -> v of color i
                int item = m + static_cast<int>(cs.dummies.size());
                cs.dummies.push_back({v, i, true});
                in_items[idx(v, i)].push_back(item);
                ++diff;
            }
        }

    // half-cone partitions (seeded), then size-matched pairing
    Rng rng(mix_seed(seed, 0xC04E5ULL));
    auto make_halves = [&](std::vector<int>& items, int v, int i, bool incoming) {
        rng.shuffle(items);
        std::vector<int> sizes = half_cone_sizes(static_cast<int>(items.size()), c, strict,
                                                 &cs.strict_sizes_ok);
        std::vector<int> out;
        size_t pos = 0;
        for (int s : sizes) {
            ConeSystem::HalfCone h{v, i, incoming, {}};
            h.items.assign(items.begin() + pos, items.begin() + pos + s);
            pos += s;
            out.push_back(static_cast<int>(cs.halves.size()));
            cs.halves.push_back(std::move(h));
        }
        check_internal(pos == items.size(), "build_cone_system: partition mismatch");
        return out;
    };

    for (int v = 0; v < n; ++v) {
        for (int i = 1; i < ell; ++i) {
            auto minus = make_halves(in_items[idx(v, i)], v, i, true);
            auto plus = make_halves(out_items[idx(v, i + 1)], v, i + 1, false);
            check_internal(minus.size() == plus.size(), "build_cone_system: pairing count");
            // both sides carry the same size multiset in descending order
            for (size_t t = 0; t < minus.size(); ++t) {
                check_internal(cs.halves[minus[t]].items.size() == cs.halves[plus[t]].items.size(),
                               "build_cone_system: paired half-cones differ in size");
                cs.cones.push_back({minus[t], plus[t]});
            }
        }
        for (int h : make_halves(out_items[idx(v, 1)], v, 1, false))
            cs.cones.push_back({-1, h});  // special 1-half cones
        for (int h : make_halves(in_items[idx(v, ell)], v, ell, true))
            cs.cones.push_back({h, -1});  // special ell-half cones
    }

    // item -> cones membership: [0] head side (as in-item), [1] tail side
    cs.item_cones.assign(cs.num_items(), {-1, -1});
    for (int ci = 0; ci < static_cast<int>(cs.cones.size()); ++ci) {
        const auto& co = cs.cones[ci];
        if (co.minus >= 0)
            for (int item : cs.halves[co.minus].items) cs.item_cones[item][0] = ci;
        if (co.plus >= 0)
            for (int item : cs.halves[co.plus].items) cs.item_cones[item][1] = ci;
    }
    for (int item = 0; item < cs.num_items(); ++item) {
        if (cs.item_head(item) >= 0)
            check_internal(cs.item_cones[item][0] >= 0, "build_cone_system: uncovered in-item");
        if (cs.item_tail(item) >= 0)
            check_internal(cs.item_cones[item][1] >= 0, "build_cone_system: uncovered out-item");
    }
    return cs;
}

ConeSystem build_cone_system(const MultiGraph& g, int ell, int c, uint64_t seed, bool strict) {
    EdgeColoring col = nearly_equitable_coloring(g, ell);
    Orientation ori = per_color_balanced_orientation(g, col);
    return build_cone_system(g, col, ori, ell, c, seed, strict);
}

namespace {

WalkDecomposition trace_walks(const ConeSystem& cs, uint64_t master,
                              const std::vector<int>& epochs) {
    int items = cs.num_items();
    std::vector<int> succ(items, -1), pred(items, -1);
    for (int ci = 0; ci < static_cast<int>(cs.cones.size()); ++ci) {
        const auto& co = cs.cones[ci];
        Rng rng(mix_seed(master, static_cast<uint64_t>(ci), static_cast<uint64_t>(epochs[ci])));
        if (co.minus < 0 || co.plus < 0) {
            // special single half-cone: permutation drawn for uniformity, no
            // pairing effect
            int h = co.minus >= 0 ? co.minus : co.plus;
            std::vector<int> perm = cs.halves[h].items;
            rng.shuffle(perm);
            continue;
        }
        std::vector<int> a = cs.halves[co.minus].items;
        std::vector<int> b = cs.halves[co.plus].items;
        rng.shuffle(a);
        rng.shuffle(b);
        for (size_t t = 0; t < a.size(); ++t) {
            succ[a[t]] = b[t];
            pred[b[t]] = a[t];
        }
    }

    WalkDecomposition wd;
    wd.walk_of_item.assign(items, -1);
    for (int start = 0; start < items; ++start) {
        if (pred[start] >= 0) continue;
        WalkDecomposition::Walk w;
        bool has_dummy = false;
        int expect_color = cs.item_color(start);
        for (int it = start; it >= 0; it = succ[it]) {
            check_internal(cs.item_color(it) == expect_color++, "trace_walks: color order broken");
            wd.walk_of_item[it] = static_cast<int>(wd.walks.size());
            w.items.push_back(it);
            if (cs.is_dummy(it)) has_dummy = true;
        }
        if (has_dummy) {
            w.kind = WalkDecomposition::Kind::shortw;
            wd.short_count++;
        } else {
            check_internal(static_cast<int>(w.items.size()) == cs.ell,
                           "trace_walks: dummy-free walk shorter than ell");
            // vertex repeat check over tail of first item then heads
            std::vector<int> verts{cs.item_tail(w.items.front())};
            for (int it : w.items) verts.push_back(cs.item_head(it));
            std::sort(verts.begin(), verts.end());
            bool repeat = std::adjacent_find(verts.begin(), verts.end()) != verts.end();
            if (repeat) {
                w.kind = WalkDecomposition::Kind::bad;
                wd.bad_count++;
            } else {
                w.kind = WalkDecomposition::Kind::path;
            }
        }
        wd.walks.push_back(std::move(w));
    }
    for (int it = 0; it < items; ++it)
        check_internal(wd.walk_of_item[it] >= 0, "trace_walks: item missed by every walk");
    return wd;
}

}  // namespace

WalkDecomposition sample_and_classify(const ConeSystem& cs, uint64_t seed) {
    std::vector<int> epochs(cs.cones.size(), 0);
    return trace_walks(cs, seed, epochs);
}

ConeEvents cone_events(const ConeSystem& cs, const WalkDecomposition& wd, int b) {
    ConeEvents ev;
    int ell = cs.ell;
    std::vector<int> walk_marker(wd.walks.size(), -1);
    std::unordered_map<int, int> mult;
    for (int ci = 0; ci < static_cast<int>(cs.cones.size()); ++ci) {
        ConeEvents::Row row;
        row.cone = ci;
        row.size = cs.cone_size(ci);
        mult.clear();
        auto scan_half = [&](int h) {
            if (h < 0) return;
            for (int item : cs.halves[h].items) {
                int w = wd.walk_of_item[item];
                if (walk_marker[w] == ci) continue;
                walk_marker[w] = ci;
                const auto& walk = wd.walks[w];
                if (walk.kind == WalkDecomposition::Kind::bad) row.bad++;
                if (walk.kind == WalkDecomposition::Kind::shortw) row.shortw++;
                // vertex membership, deduped per walk
                std::vector<int> verts{cs.item_tail(walk.items.front())};
                for (int it : walk.items) verts.push_back(cs.item_head(it));
                std::sort(verts.begin(), verts.end());
                verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                for (int v : verts)
                    if (v >= 0) row.max_mult = std::max(row.max_mult, ++mult[v]);
            }
        };
        scan_half(cs.cones[ci].minus);
        scan_half(cs.cones[ci].plus);
        row.flag_a = row.bad > ell * ell * b;
        row.flag_b = row.max_mult > ell * b;
        row.flag_bp = row.shortw > ell * b;
        if (row.flag_a || row.flag_b || row.flag_bp) ev.flagged++;
        ev.rows.push_back(row);
    }
    return ev;
}

ResampleResult resample_until_clear(const ConeSystem& cs, int b, int budget, uint64_t seed) {
    require(b >= 1, "resample_until_clear: b >= 1");
    require(budget >= 1, "resample_until_clear: budget >= 1");
    std::vector<int> epochs(cs.cones.size(), 0);
    int best_flagged = -1;
    WalkDecomposition best_wd;
    ConeEvents best_ev;
    int rounds = 0;
    bool cleared = false;
    WalkDecomposition wd;
    ConeEvents ev;
    for (rounds = 1; rounds <= budget; ++rounds) {
        wd = trace_walks(cs, seed, epochs);
        ev = cone_events(cs, wd, b);
        if (best_flagged < 0 || ev.flagged < best_flagged) {
            best_flagged = ev.flagged;
            best_wd = wd;
            best_ev = ev;
        }
        if (ev.flagged == 0) {
            cleared = true;
            break;
        }
        if (rounds == budget) break;
        if (2 * rounds == budget) {
            // global restart halfway through
            for (auto& e : epochs) ++e;
            continue;
        }
        // Moser-Tardos locality: reseed flagged cones and every cone met by a
        // walk through them
        std::vector<uint8_t> bump(cs.cones.size(), 0);
        std::vector<uint8_t> walk_seen(wd.walks.size(), 0);
        for (const auto& row : ev.rows) {
            if (!(row.flag_a || row.flag_b || row.flag_bp)) continue;
            bump[row.cone] = 1;
            auto mark_walks = [&](int h) {
                if (h < 0) return;
                for (int item : cs.halves[h].items) walk_seen[wd.walk_of_item[item]] = 1;
            };
            mark_walks(cs.cones[row.cone].minus);
            mark_walks(cs.cones[row.cone].plus);
        }
        for (size_t w = 0; w < wd.walks.size(); ++w) {
            if (!walk_seen[w]) continue;
            for (int item : wd.walks[w].items)
                for (int side : {0, 1})
                    if (cs.item_cones[item][side] >= 0) bump[cs.item_cones[item][side]] = 1;
        }
        for (size_t ci = 0; ci < epochs.size(); ++ci)
            if (bump[ci]) ++epochs[ci];
    }

    const WalkDecomposition& use_wd = cleared ? wd : best_wd;
    ResampleResult res;
    res.cleared = cleared;
    res.rounds = std::min(rounds, budget);
    res.events = cleared ? ev : best_ev;
    res.walks = use_wd;
    res.remainder = EdgeSet(cs.host->num_edges());
    std::vector<Path> paths;
    for (const auto& w : use_wd.walks) {
        if (w.kind == WalkDecomposition::Kind::path) {
            Path p;
            p.verts.push_back(cs.item_tail(w.items.front()));
            for (int it : w.items) {
                p.edges.push_back(it);
                p.verts.push_back(cs.item_head(it));
            }
            paths.push_back(std::move(p));
        } else {
            for (int it : w.items)
                if (!cs.is_dummy(it)) res.remainder.insert(it);
        }
    }
    res.h = PathGraph(cs.host, std::move(paths));
    res.forward.assign(res.h.num_paths(), 1);
    // partition identity: every real edge is in the path graph or remainder
    check_internal(res.h.underlying_edges().size() + res.remainder.size() ==
                       cs.host->num_edges(),
                   "resample_until_clear: edges lost by the walk partition");
    return res;
}

DenseResult dense_path_graph(const MultiGraph& g, const DenseParams& params, uint64_t seed) {
    require(params.ell >= 2, "dense_path_graph: ell >= 2");
    require(g.min_degree() >= params.l_desk,
            "dense_path_graph: min degree " + std::to_string(g.min_degree()) +
                " below configured threshold " + std::to_string(params.l_desk));
    EdgeColoring col = nearly_equitable_coloring(g, params.ell);
    refine_coloring_for_chains(g, col);
    Orientation ori = per_color_balanced_orientation(g, col);
    ConeSystem cs = build_cone_system(g, col, ori, params.ell, params.c,
                                      mix_seed(seed, 0xB111DULL), params.strict_cones);
    ResampleResult rr =
        resample_until_clear(cs, params.b, params.resample_budget, mix_seed(seed, 0x5A3ULL));
    if (!rr.cleared)
        throw BudgetError("dense_path_graph: resample budget exhausted with " +
                          std::to_string(rr.events.flagged) + " flagged cones");

    DenseResult out;
    out.h.graph = rr.h;
    out.h.forward = rr.forward;
    out.remainder = rr.remainder;
    out.stats.dummy_edges = static_cast<int>(cs.dummies.size());
    out.stats.bad_walks = rr.walks.bad_count;
    out.stats.short_walks = rr.walks.short_count;
    out.stats.rounds = rr.rounds;

    // Window checks at the configured eps.
    const PathGraph& h = out.h.graph;
    auto rdeg = subset_degrees(g, out.remainder);
    double lo = 2.0, hi = 0.0, worst_rem = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0) continue;
        double ratio = static_cast<double>(h.shadow_degree(v)) / g.degree(v);
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
        if (h.shadow_degree(v) > 0)
            worst_rem = std::max(worst_rem, static_cast<double>(rdeg[v]) / h.shadow_degree(v));
        else if (rdeg[v] > 0)
            worst_rem = std::max(worst_rem, 1e9);
    }
    ConflictStats conf = conflict_ratio(h);
    out.stats.min_ratio = lo;
    out.stats.max_ratio = hi;
    out.stats.max_conf = conf.max_conf;
    out.stats.max_remainder_ratio = worst_rem;
    double ell = params.ell, eps = params.eps;
    out.stats.windows_ok = lo >= (1 - eps) / ell && hi <= (1 + eps) / ell &&
                           conf.max_conf <= eps && worst_rem <= eps;
    if (params.strict_eps && !out.stats.windows_ok)
        throw BudgetError("dense_path_graph: eps windows failed (ratio [" + std::to_string(lo) +
                          "," + std::to_string(hi) + "], conf " + std::to_string(conf.max_conf) +
                          ", remainder " + std::to_string(worst_rem) + ")");
    return out;
}

namespace {

// Maps a path graph built on a subgraph back into host coordinates.
std::vector<Path> to_host_paths(const PathGraph& sub_h, const std::vector<int>& origin) {
    std::vector<Path> out;
    out.reserve(sub_h.num_paths());
    for (const Path& p : sub_h.paths()) {
        Path q;
        q.verts = p.verts;
        for (int e : p.edges) q.edges.push_back(origin[e]);
        out.push_back(std::move(q));
    }
    return out;
}

}  // namespace

namespace {

Ll1Result ll1_attempt(const MultiGraph& g, const Ll1Params& params, uint64_t seed) {
    int ell = params.dense.ell;

    Ll1Stats stats;
    // the paper splits off a 1/(9 ell)-fraction; at desk degrees that side
    // would be too thin for the cone machinery, so fall back to one block
    bool split = params.strict_split ||
                 g.min_degree() / (9 * ell) >= params.split_min_degree;
    stats.split_used = split;

    std::vector<Path> h1_paths;           // host coordinates, oriented start-first
    std::vector<Path> h2_paths;
    EdgeSet remainder(g.num_edges());

    if (split) {
        Fraction frac = alpha_fraction(g, 1, 9LL * ell, 4);
        std::vector<int> origin1, origin2;
        MultiGraph g1 = subgraph(g, frac.edges, &origin1);
        MultiGraph g2 = subgraph(g, frac.edges.complement(), &origin2);
        DenseParams dp = params.dense;
        dp.l_desk = 0;
        DenseResult d1 = dense_path_graph(g1, dp, mix_seed(seed, 1));
        DenseResult d2 = dense_path_graph(g2, dp, mix_seed(seed, 2));
        stats.dense1 = d1.stats;
        stats.dense2 = d2.stats;
        h1_paths = to_host_paths(d1.h.graph, origin1);
        h2_paths = to_host_paths(d2.h.graph, origin2);
        for (int e : d1.remainder.to_vector()) remainder.insert(origin1[e]);
        for (int e : d2.remainder.to_vector()) remainder.insert(origin2[e]);
    } else {
        DenseResult d1 = dense_path_graph(g, params.dense, mix_seed(seed, 1));
        stats.dense1 = d1.stats;
        h1_paths = to_host_paths(d1.h.graph, [&] {
            std::vector<int> id(g.num_edges());
            for (int e = 0; e < g.num_edges(); ++e) id[e] = e;
            return id;
        }());
        remainder = d1.remainder;
    }

    // Absorb every remainder edge into a private ell-path of its tail: the
    // arc vu plus a path starting at v avoiding u gives an (ell+1)-path.
    // The remainder is oriented in a balanced way so no vertex carries more
    // arcs than its private supply; the proof leaves the orientation free.
    // Preference order: outgoing H1 paths, then (as desk fallbacks) incoming
    // H1 paths, then H2 paths at the vertex.
    std::vector<Path> pool = std::move(h1_paths);
    size_t h1_count = pool.size();
    pool.insert(pool.end(), h2_paths.begin(), h2_paths.end());
    std::vector<std::vector<int>> by_start(g.num_vertices());
    std::vector<std::vector<int>> by_end(g.num_vertices());
    for (int p = 0; p < static_cast<int>(pool.size()); ++p) {
        by_start[pool[p].front()].push_back(p);
        by_end[pool[p].back()].push_back(p);
    }
    std::vector<uint8_t> used(pool.size(), 0);

    // Assign arcs to extension paths by bipartite matching rather than
    // greedily, so a scarce vertex is never starved by processing order.
    (void)used;
    std::vector<int> rem_edges = remainder.to_vector();
    struct Cand {
        int path;
        int tail;       // the vertex the path must start from
        bool reversed;  // pool path stored ending at tail
    };
    std::vector<std::vector<Cand>> cands(rem_edges.size());
    Rng pick(mix_seed(seed, 0xF00DULL));
    for (size_t i = 0; i < rem_edges.size(); ++i) {
        auto [a, b] = g.ends(rem_edges[i]);
        auto push = [&](int v, int u, bool h1_only) {
            std::vector<int> starts = by_start[v], ends = by_end[v];
            pick.shuffle(starts);
            pick.shuffle(ends);
            for (int p : starts) {
                bool is_h1 = p < static_cast<int>(h1_count);
                if (is_h1 != h1_only) continue;
                if (pool[p].front() == v && !pool[p].contains_vertex(u))
                    cands[i].push_back({p, v, false});
            }
            if (!params.allow_any_incident_path) return;
            for (int p : ends) {
                bool is_h1 = p < static_cast<int>(h1_count);
                if (is_h1 != h1_only) continue;
                if (pool[p].back() == v && pool[p].front() != v && !pool[p].contains_vertex(u))
                    cands[i].push_back({p, v, true});
            }
        };
        // private H1 supply at both endpoints first, then the fallbacks
        push(a, b, true);
        push(b, a, true);
        push(a, b, false);
        push(b, a, false);
    }
    std::vector<int> matched_arc(pool.size(), -1);
    std::vector<int> match_of(rem_edges.size(), -1);
    std::vector<int> stamp(pool.size(), -1);
    std::function<bool(int, int)> try_arc = [&](int i, int mark) {
        for (size_t ci = 0; ci < cands[i].size(); ++ci) {
            int p = cands[i][ci].path;
            if (stamp[p] == mark) continue;
            stamp[p] = mark;
            if (matched_arc[p] < 0 || try_arc(matched_arc[p], mark)) {
                matched_arc[p] = i;
                match_of[i] = static_cast<int>(ci);
                return true;
            }
        }
        return false;
    };
    for (size_t i = 0; i < rem_edges.size(); ++i) {
        if (!try_arc(static_cast<int>(i), static_cast<int>(i)))
            throw BudgetError("ll1_decomposition: private-path exhaustion at vertex " +
                              std::to_string(g.label(g.ends(rem_edges[i]).first)));
    }
    for (size_t i = 0; i < rem_edges.size(); ++i) {
        const Cand& c = cands[i][match_of[i]];
        Path& p = pool[c.path];
        if (c.reversed) p = p.reversed();
        int u = g.other_end(rem_edges[i], c.tail);
        Path ext;
        ext.verts.push_back(u);
        ext.verts.insert(ext.verts.end(), p.verts.begin(), p.verts.end());
        ext.edges.push_back(rem_edges[i]);
        ext.edges.insert(ext.edges.end(), p.edges.begin(), p.edges.end());
        p = std::move(ext);
        stats.extended_paths++;
    }

    std::vector<Path> all = std::move(pool);
    Ll1Result out;
    out.h.graph = PathGraph(&g, std::move(all));
    out.h.forward.assign(out.h.graph.num_paths(), 1);
    out.stats = stats;

    // verification: exact coverage, lengths, windows, conf
    check_internal(out.h.graph.underlying_edges().size() == g.num_edges(),
                   "ll1_decomposition: not a decomposition");
    for (const Path& p : out.h.graph.paths())
        check_internal(p.length() == ell || p.length() == ell + 1,
                       "ll1_decomposition: path length outside {ell, ell+1}");
    double lo = 2.0, hi = 0.0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) == 0) continue;
        double r = static_cast<double>(out.h.graph.shadow_degree(v)) / g.degree(v);
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    out.stats.min_ratio = lo;
    out.stats.max_ratio = hi;
    out.stats.window_ok =
        lo >= (1 - params.eps_prime) / ell && hi <= (1 + params.eps_prime) / ell;
    ConflictStats conf = conflict_ratio(out.h.graph);
    out.stats.max_conf = conf.max_conf;
    out.stats.conf_bound = 1.0 / (4.0 * (ell + 10));
    out.stats.conf_ok = conf.max_conf <= out.stats.conf_bound;
    if (params.strict_conf && !out.stats.conf_ok)
        throw BudgetError("ll1_decomposition: conf " + std::to_string(conf.max_conf) +
                          " exceeds 1/(4(ell+10))");
    return out;
}

}  // namespace

Ll1Result ll1_decomposition(const MultiGraph& g, const Ll1Params& params, uint64_t seed) {
    require(params.dense.ell >= 2, "ll1_decomposition: ell >= 2");
    require(g.min_degree() >= params.dense.l_desk, "ll1_decomposition: min degree below threshold");
    std::string last;
    for (int attempt = 0; attempt < params.attempts; ++attempt) {
        try {
            return ll1_attempt(g, params, mix_seed(seed, attempt, 0x111ULL));
        } catch (const BudgetError& e) {
            last = e.what();
        }
    }
    throw BudgetError("ll1_decomposition: all " + std::to_string(params.attempts) +
                      " attempts failed; last: " + last);
}

}  // namespace pathcut
