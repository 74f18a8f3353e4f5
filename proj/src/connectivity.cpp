#include "pathcut/connectivity.hpp"

#include <algorithm>
#include <queue>

#include "pathcut/errors.hpp"

namespace pathcut {

int UnitFlow::add_arc(int u, int v) {
    int a = num_arcs();
    tail_.push_back(u);
    head_.push_back(v);
    enabled_.push_back(1);
    flow_.push_back(0);
    adj_[u].push_back(a);
    if (radj_.empty()) radj_.resize(n_);
    radj_[v].push_back(a);
    return a;
}

// BFS in the residual graph: forward over enabled zero-flow arcs, backward
// over flow-carrying arcs.
bool UnitFlow::augment(int s, int t) {
    ++stamp_;
    if (static_cast<int>(seen_.size()) != n_) {
        seen_.assign(n_, 0);
        parent_arc_.assign(n_, -1);
        parent_dir_.assign(n_, 0);
        stamp_ = 1;
    }
    std::queue<int> q;
    q.push(s);
    seen_[s] = stamp_;
    while (!q.empty() && seen_[t] != stamp_) {
        int u = q.front();
        q.pop();
        for (int a : adj_[u]) {
            if (!enabled_[a] || flow_[a]) continue;
            int v = head_[a];
            if (seen_[v] == stamp_) continue;
            seen_[v] = stamp_;
            parent_arc_[v] = a;
            parent_dir_[v] = +1;
            q.push(v);
        }
        for (int a : radj_[u]) {
            if (!enabled_[a] || !flow_[a]) continue;
            int v = tail_[a];
            if (seen_[v] == stamp_) continue;
            seen_[v] = stamp_;
            parent_arc_[v] = a;
            parent_dir_[v] = -1;
            q.push(v);
        }
    }
    if (seen_[t] != stamp_) return false;
    for (int v = t; v != s;) {
        int a = parent_arc_[v];
        if (parent_dir_[v] > 0) {
            flow_[a] = 1;
            v = tail_[a];
        } else {
            flow_[a] = 0;
            v = head_[a];
        }
    }
    return true;
}

int UnitFlow::max_flow(int s, int t, int limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    if (radj_.empty()) radj_.resize(n_);
    int value = 0;
    while ((limit < 0 || value < limit) && augment(s, t)) ++value;
    return value;
}

std::vector<int> UnitFlow::cut_source_side(int s) const {
    // Residual reachability from s under the last flow.
    std::vector<uint8_t> vis(n_, 0);
    std::vector<int> stack{s}, out;
    vis[s] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int a : adj_[u])
            if (enabled_[a] && !flow_[a] && !vis[head_[a]]) {
                vis[head_[a]] = 1;
                stack.push_back(head_[a]);
            }
        for (int a : radj_[u])
            if (enabled_[a] && flow_[a] && !vis[tail_[a]]) {
                vis[tail_[a]] = 1;
                stack.push_back(tail_[a]);
            }
    }
    return out;
}

UnitFlow make_flow_digraph(const MultiGraph& g, const Orientation& d) {
    UnitFlow f(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) f.add_arc(d.tail_of(g, e), d.head_of(e));
    return f;
}

UnitFlow make_flow_undirected(const MultiGraph& g) {
    UnitFlow f(g.num_vertices());
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends(e);
        f.add_arc(u, v);
        f.add_arc(v, u);
    }
    return f;
}

int edge_connectivity(const MultiGraph& g) {
    require(g.num_vertices() >= 1, "edge_connectivity: empty graph");
    if (g.num_vertices() == 1) return g.num_edges() == 0 ? 0 : 0;
    if (!is_connected(g)) return 0;
    // A global min cut separates vertex 0 from some other vertex.
    UnitFlow f = make_flow_undirected(g);
    int best = g.num_edges() + 1;
    for (int v = 1; v < g.num_vertices(); ++v) {
        best = std::min(best, f.max_flow(0, v, best));
        if (best == 0) break;
    }
    return best;
}

int edge_connectivity_brute(const MultiGraph& g) {
    int n = g.num_vertices();
    require(n >= 2 && n <= 20, "edge_connectivity_brute: n out of range");
    int best = g.num_edges() + 1;
    for (uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        // vertex n-1 always on side 0, mask chooses sides of the rest
        int cross = 0;
        for (int e = 0; e < g.num_edges(); ++e) {
            auto [u, v] = g.ends(e);
            int su = u == n - 1 ? 0 : (mask >> u) & 1;
            int sv = v == n - 1 ? 0 : (mask >> v) & 1;
            cross += su != sv;
        }
        best = std::min(best, cross);
    }
    return best;
}

bool is_connected(const MultiGraph& g) {
    return is_connected_subset(g, EdgeSet::all(g.num_edges()));
}

bool is_connected_subset(const MultiGraph& g, const EdgeSet& edges) {
    int n = g.num_vertices();
    if (n == 0) return true;
    std::vector<uint8_t> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int e : g.incident(u)) {
            if (!edges.contains(e)) continue;
            int v = g.other_end(e, u);
            if (!vis[v]) {
                vis[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

namespace {
void bridge_dfs(const MultiGraph& g, int root, int& timer, std::vector<int>& disc,
                std::vector<int>& low, std::vector<int>& out) {
    // Iterative lowpoint DFS; a tree edge is a bridge iff low(child) > disc(parent)
    // and no parallel edge duplicates it.
    struct Frame {
        int v;
        int parent_edge;
        size_t idx;
    };
    std::vector<Frame> st;
    st.push_back({root, -1, 0});
    disc[root] = low[root] = ++timer;
    while (!st.empty()) {
        Frame& f = st.back();
        if (f.idx < g.incident(f.v).size()) {
            int e = g.incident(f.v)[f.idx++];
            if (e == f.parent_edge) continue;
            int w = g.other_end(e, f.v);
            if (disc[w] == 0) {
                disc[w] = low[w] = ++timer;
                st.push_back({w, e, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[w]);
            }
        } else {
            int v = f.v;
            int pe = f.parent_edge;
            st.pop_back();
            if (!st.empty()) {
                int p = st.back().v;
                low[p] = std::min(low[p], low[v]);
                if (low[v] > disc[p]) out.push_back(pe);
            }
        }
    }
}
}  // namespace

std::vector<int> bridges(const MultiGraph& g) {
    std::vector<int> disc(g.num_vertices(), 0), low(g.num_vertices(), 0), out;
    int timer = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (disc[v] == 0) bridge_dfs(g, v, timer, disc, low, out);
    return out;
}

bool is_two_edge_connected(const MultiGraph& g) {
    if (g.num_vertices() <= 1) return true;
    return is_connected(g) && bridges(g).empty();
}

}  // namespace pathcut
