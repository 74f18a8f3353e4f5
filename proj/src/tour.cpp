#include "pathcut/tour.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pathcut/rng.hpp"

#include "pathcut/errors.hpp"
#include "pathcut/euler.hpp"
#include "pathcut/rng.hpp"

namespace pathcut {

std::vector<int> Tour::edge_sequence(const PathGraph& h) const {
    std::vector<int> out;
    for (const Step& s : steps) {
        const Path& p = h.path(s.path);
        if (s.forward)
            out.insert(out.end(), p.edges.begin(), p.edges.end());
        else
            out.insert(out.end(), p.edges.rbegin(), p.edges.rend());
    }
    return out;
}

std::vector<int> Tour::vertex_sequence(const PathGraph& h) const {
    std::vector<int> out;
    for (const Step& s : steps) {
        const Path& p = h.path(s.path);
        if (s.forward)
            out.insert(out.end(), p.verts.begin(), p.verts.end() - 1);
        else
            out.insert(out.end(), p.verts.rbegin(), p.verts.rend() - 1);
    }
    if (!steps.empty()) out.push_back(out.front());
    return out;
}

TourCheck verify_tour(const PathGraph& h, const TransitionSystem& s, const Tour& t) {
    TourCheck chk;
    int m = h.num_paths();
    std::vector<int> used(m, 0);
    for (const auto& st : t.steps) used[st.path]++;
    chk.each_path_once =
        static_cast<int>(t.steps.size()) == m && std::count(used.begin(), used.end(), 1) == m;
    chk.continuous = true;
    int T = static_cast<int>(t.steps.size());
    for (int i = 0; i < T; ++i)
        if (t.end_of(h, i) != t.start_of(h, (i + 1) % T)) chk.continuous = false;
    if (!chk.each_path_once || !chk.continuous) return chk;
    chk.conflicting_pairs = 0;
    for (int i = 0; i < T; ++i) {
        int j = (i + 1) % T;
        int v = t.end_of(h, i);
        if (T > 1 && s.forbidden(v, t.steps[i].path, t.steps[j].path)) chk.conflicting_pairs++;
    }
    return chk;
}

namespace {

void rotate_tour(Tour& t, int new_start) {
    std::rotate(t.steps.begin(), t.steps.begin() + new_start, t.steps.end());
}

// canonical form: start at the lowest vertex id that begins any step, with
// the smallest starting path id among those rotations
void canonicalize(const PathGraph& h, Tour& t) {
    int T = static_cast<int>(t.steps.size());
    if (T == 0) return;
    int best = 0;
    for (int i = 1; i < T; ++i) {
        int vi = t.start_of(h, i), vb = t.start_of(h, best);
        if (vi < vb || (vi == vb && t.steps[i].path < t.steps[best].path)) best = i;
    }
    rotate_tour(t, best);
}

}  // namespace

TourResult euler_tour_nonconflicting(const PathGraph& h, uint64_t seed, int restart_budget) {
    require(h.num_paths() > 0, "euler_tour_nonconflicting: empty path graph");
    require(h.shadow_even(), "euler_tour_nonconflicting: shadow not eulerian (odd degree)");
    require(h.shadow_connected(), "euler_tour_nonconflicting: shadow not connected");
    TransitionSystem s = TransitionSystem::conflict_induced(h);

    TourResult res;
    res.jackson_holds = jackson_condition(h, s);

    // Ports: 2p = front end of path p, 2p+1 = back end. A tour alternates
    // path traversals (port -> sibling port) with vertex transitions
    // (port -> mate port). A non-conflicting tour is a set of per-vertex
    // perfect matchings on ports avoiding forbidden pairs that links all
    // paths into one circuit.
    int P = h.num_paths();
    std::vector<std::vector<int>> ports_at(h.host().num_vertices());
    for (int p = 0; p < P; ++p) {
        ports_at[h.path(p).front()].push_back(2 * p);
        ports_at[h.path(p).back()].push_back(2 * p + 1);
    }
    auto allowed = [&](int v, int a, int b) { return !s.forbidden(v, a / 2, b / 2); };

    // backtracking perfect matching on the ports of one vertex
    auto solve_vertex = [&](int v, Rng& rng, std::vector<int>& mate) -> bool {
        std::vector<int> slots = ports_at[v];
        rng.shuffle(slots);
        int d = static_cast<int>(slots.size());
        std::vector<int> pick(d, -1);
        std::function<bool(int)> go = [&](int used) -> bool {
            int first = -1;
            for (int i = 0; i < d; ++i)
                if (pick[i] < 0) {
                    first = i;
                    break;
                }
            if (first < 0) return true;
            for (int j = first + 1; j < d; ++j) {
                if (pick[j] >= 0) continue;
                if (!allowed(v, slots[first], slots[j])) continue;
                pick[first] = j;
                pick[j] = first;
                if (go(used + 2)) return true;
                pick[first] = pick[j] = -1;
            }
            return false;
        };
        if (!go(0)) return false;
        for (int i = 0; i < d; ++i)
            if (pick[i] >= 0 && i < pick[i]) {
                mate[slots[i]] = slots[pick[i]];
                mate[slots[pick[i]]] = slots[i];
            }
        return true;
    };

    // circuit labels under (sibling . mate)
    std::vector<int> circuit(2 * P);
    auto recompute_circuits = [&](const std::vector<int>& mate) {
        std::fill(circuit.begin(), circuit.end(), -1);
        int nc = 0;
        for (int start = 0; start < 2 * P; ++start) {
            if (circuit[start] >= 0) continue;
            int cur = start;
            do {
                circuit[cur] = nc;
                circuit[cur ^ 1] = nc;
                cur = mate[cur ^ 1];
            } while (cur != start);
            ++nc;
        }
        return nc;
    };

    for (int attempt = 0; attempt < restart_budget; ++attempt) {
        if (attempt > 0) ++res.restarts;
        Rng rng(mix_seed(seed, attempt, 0x746f7572ULL));
        std::vector<int> mate(2 * P, -1);
        bool feasible = true;
        for (int v = 0; v < h.host().num_vertices() && feasible; ++v) {
            if (ports_at[v].empty()) continue;
            if (!solve_vertex(v, rng, mate)) feasible = false;
        }
        if (!feasible) continue;

        int nc = recompute_circuits(mate);
        int kicks = 0;
        long long guard = 8LL * P + 64;
        while (nc > 1 && guard-- > 0) {
            // cross-circuit swap at some vertex merges two circuits
            bool merged = false;
            for (int v = 0; v < h.host().num_vertices() && !merged; ++v) {
                const auto& slots = ports_at[v];
                if (slots.size() < 4) continue;
                for (size_t i = 0; i < slots.size() && !merged; ++i) {
                    int a1 = slots[i], b1 = mate[a1];
                    if (b1 < a1) continue;  // one scan per pair
                    for (size_t j = i + 1; j < slots.size() && !merged; ++j) {
                        int a2 = slots[j], b2 = mate[a2];
                        if (b2 < a2 || a2 == b1) continue;
                        if (circuit[a1] == circuit[a2]) continue;
                        if (allowed(v, a1, a2) && allowed(v, b1, b2)) {
                            mate[a1] = a2;
                            mate[a2] = a1;
                            mate[b1] = b2;
                            mate[b2] = b1;
                            merged = true;
                        } else if (allowed(v, a1, b2) && allowed(v, b1, a2)) {
                            mate[a1] = b2;
                            mate[b2] = a1;
                            mate[b1] = a2;
                            mate[a2] = b1;
                            merged = true;
                        }
                    }
                }
            }
            if (merged) {
                ++res.repairs;
                nc = recompute_circuits(mate);
                continue;
            }
            // no valid cross swap: kick one vertex's pairing
            if (++kicks > 40) break;
            int tries = 40;
            while (tries-- > 0) {
                int v = rng.index(h.host().num_vertices());
                if (ports_at[v].size() < 4) continue;
                std::vector<int> saved = mate;
                if (solve_vertex(v, rng, mate)) {
                    nc = recompute_circuits(mate);
                    ++res.repairs;
                    break;
                }
                mate = std::move(saved);
            }
        }
        if (nc != 1) continue;

        // extract the tour by walking the single circuit
        Tour t;
        int cur = 0;
        do {
            int path = cur / 2;
            bool forward = (cur & 1) == 0;
            t.steps.push_back({path, forward});
            cur = mate[cur ^ 1];
        } while (cur != 0 && static_cast<int>(t.steps.size()) <= P);
        check_internal(static_cast<int>(t.steps.size()) == P,
                       "euler_tour_nonconflicting: circuit walk incomplete");
        canonicalize(h, t);
        TourCheck chk = verify_tour(h, s, t);
        check_internal(chk.ok(), "euler_tour_nonconflicting: verifier rejected tour");
        res.tour = std::move(t);
        return res;
    }
    throw BudgetError("euler_tour_nonconflicting: restart budget exhausted (" +
                      std::to_string(res.repairs) + " repairs)");
}

}  // namespace pathcut
