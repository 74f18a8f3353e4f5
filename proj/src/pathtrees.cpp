#include "pathcut/pathtrees.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pathcut/connectivity.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/fraction.hpp"
#include "pathcut/orientation.hpp"
#include "pathcut/rng.hpp"

namespace pathcut {

bool PathTree::shadow_is_tree() const {
    auto sup = support();
    if (sup.empty()) return graph.num_paths() == 0;
    if (graph.num_paths() != static_cast<int>(sup.size()) - 1) return false;
    return graph.shadow_connected();
}

std::vector<int> PathTree::support() const {
    std::vector<int> out;
    for (int v = 0; v < graph.host().num_vertices(); ++v)
        if (graph.shadow_degree(v) > 0) out.push_back(v);
    return out;
}

int PathTree::max_shadow_degree() const {
    int d = 0;
    for (int v = 0; v < graph.host().num_vertices(); ++v)
        d = std::max(d, graph.shadow_degree(v));
    return d;
}

namespace {

void log_step(StepTrace trace, const std::string& line) {
    if (trace) trace->push_back(line);
}

Path one_edge_path(const MultiGraph& host, int e) {
    auto [u, v] = host.ends(e);
    return Path{{u, v}, {e}};
}

Path path_from(const Path& p, int start) {
    return p.front() == start ? p : p.reversed();
}

// concatenation of a and b where a ends at b's front; simplicity is the
// caller's responsibility (checked downstream by PathGraph)
Path concat(const Path& a, const Path& b) {
    Path out = a;
    out.verts.insert(out.verts.end(), b.verts.begin() + 1, b.verts.end());
    out.edges.insert(out.edges.end(), b.edges.begin(), b.edges.end());
    return out;
}

// ------------------------------------------------------------------
// Lemma "subcubic spanning (1,2)-path-tree" structured tree
// ------------------------------------------------------------------

struct SubcubicEngine {
    const MultiGraph& host;
    const EdgeSet& avail;
    StepTrace trace;
    uint64_t dfs_seed;

    struct Node {
        std::vector<int> members;
        int parent = -1;
        int fwd_edge = -1;      // host edge of the entering forward arc
        int fwd_endpoint = -1;  // its endpoint inside this node
        int back_edge = -1;
        int back_origin = -1;   // vertex in this node
        int back_target = -1;   // node id
        std::vector<Path> paths;
        std::vector<int> children;
        bool alive = true;
    };
    std::vector<Node> nodes;
    std::vector<int> shadow_deg;  // per vertex, inside its node's path tree
    int alive_count = 0;
    int root_node = 0;

    SubcubicEngine(const MultiGraph& h, const EdgeSet& a, StepTrace t, uint64_t seed)
        : host(h), avail(a), trace(t), dfs_seed(seed), shadow_deg(h.num_vertices(), 0) {}

    // --- initial structured tree from a DFS arborescence ---
    void init() {
        int n = host.num_vertices();
        std::vector<int> parent_edge(n, -1), depth(n, -1), order;
        std::vector<int> tin(n, 0), tout(n, 0);
        int timer = 0;
        // iterative DFS from vertex 0 over avail edges
        // seeded adjacency order gives retry attempts genuinely different trees
        std::vector<std::vector<int>> adj_order(n);
        for (int v = 0; v < n; ++v) adj_order[v] = host.incident(v);
        if (dfs_seed != 0) {
            Rng rng(dfs_seed);
            for (auto& lst : adj_order) rng.shuffle(lst);
        }
        struct Frame {
            int v;
            size_t idx = 0;
        };
        std::vector<Frame> st;
        st.push_back({0});
        depth[0] = 0;
        tin[0] = ++timer;
        while (!st.empty()) {
            Frame& f = st.back();
            if (f.idx < adj_order[f.v].size()) {
                int e = adj_order[f.v][f.idx++];
                if (!avail.contains(e)) continue;
                int w = host.other_end(e, f.v);
                if (depth[w] >= 0) continue;
                depth[w] = depth[f.v] + 1;
                parent_edge[w] = e;
                tin[w] = ++timer;
                order.push_back(w);
                st.push_back({w});
            } else {
                tout[f.v] = ++timer;
                st.pop_back();
            }
        }
        for (int v = 0; v < n; ++v)
            require(depth[v] >= 0, "subcubic_12_path_tree: graph not connected");

        auto is_ancestor = [&](int a, int v) { return tin[a] <= tin[v] && tout[v] <= tout[a]; };

        // per vertex: back edge to the lowest (minimum-depth) proper ancestor
        std::vector<int> back_edge(n, -1), back_to(n, -1);
        for (int e = 0; e < host.num_edges(); ++e) {
            if (!avail.contains(e)) continue;
            auto [a, b] = host.ends(e);
            if (parent_edge[a] == e || parent_edge[b] == e) continue;
            int v = -1, w = -1;
            if (is_ancestor(a, b)) {
                v = b;
                w = a;
            } else if (is_ancestor(b, a)) {
                v = a;
                w = b;
            } else {
                throw InternalError("subcubic_12_path_tree: non-tree edge joins unrelated vertices");
            }
            if (back_edge[v] < 0 || depth[w] < depth[back_to[v]]) {
                back_edge[v] = e;
                back_to[v] = w;
            }
        }

        nodes.assign(n, {});
        for (int v = 0; v < n; ++v) {
            Node& nd = nodes[v];
            nd.members = {v};
            if (v != 0) {
                int pe = parent_edge[v];
                nd.parent = host.other_end(pe, v);
                nd.fwd_edge = pe;
                nd.fwd_endpoint = v;
                nodes[nd.parent].children.push_back(v);
            }
            if (back_edge[v] >= 0) {
                nd.back_edge = back_edge[v];
                nd.back_origin = v;
                nd.back_target = back_to[v];
            }
        }
        alive_count = n;
        root_node = 0;

        // prune back arcs not needed for strong connectivity, in edge order
        std::vector<std::pair<int, int>> by_edge;  // (edge id, node)
        for (int v = 0; v < n; ++v)
            if (nodes[v].back_edge >= 0) by_edge.push_back({nodes[v].back_edge, v});
        std::sort(by_edge.begin(), by_edge.end());
        for (auto [e, v] : by_edge) {
            int saved_e = nodes[v].back_edge, saved_o = nodes[v].back_origin,
                saved_t = nodes[v].back_target;
            nodes[v].back_edge = -1;
            nodes[v].back_origin = -1;
            nodes[v].back_target = -1;
            if (!strongly_connected()) {
                nodes[v].back_edge = saved_e;
                nodes[v].back_origin = saved_o;
                nodes[v].back_target = saved_t;
            } else {
                log_step(trace, "prune-back | node " + std::to_string(v));
            }
        }
        check_internal(strongly_connected(), "subcubic_12_path_tree: initial tree not strong");
    }

    bool strongly_connected() const {
        int n = static_cast<int>(nodes.size());
        std::vector<std::vector<int>> fwd(n), rev(n);
        int alive_total = 0;
        for (int id = 0; id < n; ++id) {
            if (!nodes[id].alive) continue;
            ++alive_total;
            for (int c : nodes[id].children) {
                fwd[id].push_back(c);
                rev[c].push_back(id);
            }
            if (nodes[id].back_target >= 0) {
                fwd[id].push_back(nodes[id].back_target);
                rev[nodes[id].back_target].push_back(id);
            }
        }
        auto bfs = [&](const std::vector<std::vector<int>>& adj) {
            std::vector<uint8_t> vis(n, 0);
            std::vector<int> q{root_node};
            vis[root_node] = 1;
            int cnt = 1;
            for (size_t i = 0; i < q.size(); ++i)
                for (int w : adj[q[i]])
                    if (!vis[w]) {
                        vis[w] = 1;
                        ++cnt;
                        q.push_back(w);
                    }
            return cnt == alive_total;
        };
        return bfs(fwd) && bfs(rev);
    }

    std::vector<int> depths() const {
        std::vector<int> d(nodes.size(), -1);
        std::vector<int> q{root_node};
        d[root_node] = 0;
        for (size_t i = 0; i < q.size(); ++i) {
            int u = q[i];
            for (int c : nodes[u].children)
                if (nodes[c].alive) {
                    d[c] = d[u] + 1;
                    q.push_back(c);
                }
        }
        return d;
    }

    // deepest internal node whose children are all leaves; ties -> lowest id
    int pick_internal() const {
        auto d = depths();
        int best = -1;
        for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
            const Node& nd = nodes[id];
            if (!nd.alive || nd.children.empty()) continue;
            bool leaf_children = true;
            for (int c : nd.children)
                if (!nodes[c].children.empty()) leaf_children = false;
            if (!leaf_children) continue;
            if (best < 0 || d[id] > d[best] || (d[id] == d[best] && id < best)) best = id;
        }
        return best;
    }

    void add_shadow(const Path& p) {
        shadow_deg[p.front()]++;
        shadow_deg[p.back()]++;
    }

    int new_node() {
        nodes.push_back({});
        return static_cast<int>(nodes.size()) - 1;
    }

    void detach_child(int parent, int child) {
        auto& cs = nodes[parent].children;
        cs.erase(std::remove(cs.begin(), cs.end(), child), cs.end());
    }

    // invariant sweep used after every reduction in test builds
    void validate() const {
        int alive_total = 0;
        for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
            const Node& nd = nodes[id];
            if (!nd.alive) continue;
            ++alive_total;
            if (id != root_node) check_internal(nd.parent >= 0, "structA: missing parent");
            if (!nd.children.empty())
                check_internal(nd.members.size() == 1, "structA: internal node not singleton");
            for (int v : nd.members) {
                check_internal(shadow_deg[v] <= 3, "structA: shadow degree above 3");
            }
            if (nd.children.empty() && id != root_node) {
                check_internal(nd.back_edge >= 0, "structA: leaf without back arc");
            }
            if (nd.back_edge >= 0) {
                check_internal(nd.back_target != id, "structA: self back arc");
                check_internal(nodes[nd.back_target].alive, "structA: dead back target");
                // forward/backward arc endpoints keep the degree room the
                // merge cases rely on
                if (nd.fwd_endpoint >= 0 && nd.fwd_endpoint == nd.back_origin)
                    check_internal(shadow_deg[nd.fwd_endpoint] <= 1,
                                   "structA: coinciding arc endpoints above degree 1");
                else {
                    if (nd.fwd_endpoint >= 0)
                        check_internal(shadow_deg[nd.fwd_endpoint] <= 2,
                                       "structA: forward endpoint above degree 2");
                    check_internal(shadow_deg[nd.back_origin] <= 2,
                                   "structA: back origin above degree 2");
                }
            }
        }
        check_internal(alive_total == alive_count, "structA: alive count drift");
        check_internal(strongly_connected(), "structA: strong connectivity lost");
    }

    PathTree run() {
        init();
        validate();
        while (alive_count > 1) {
            int j = pick_internal();
            check_internal(j >= 0, "structA: no internal node with leaf children");
            Node& xj = nodes[j];
            check_internal(xj.members.size() == 1, "structA: internal not singleton");

            // children ordered by descending back-target depth: deepest first
            auto d = depths();
            std::vector<int> kids = xj.children;
            std::sort(kids.begin(), kids.end(), [&](int a, int b) {
                int da = d[nodes[a].back_target], db = d[nodes[b].back_target];
                if (da != db) return da > db;
                return a < b;
            });
            int r = static_cast<int>(kids.size());
            bool has_back = xj.back_edge >= 0;

            if (r == 1 && !has_back && j == root_node) {
                merge_single(j, kids[0], /*use_child_back=*/true, true);
            } else if (r == 1) {
                merge_single(j, kids[0], /*use_child_back=*/!has_back, false);
            } else if (r >= 3 || (r == 2 && has_back)) {
                merge_pair(j, kids[0], kids[1]);
            } else {  // r == 2, no back arc
                merge_triple(j, kids[0], kids[1]);
            }
            validate();
        }
        int final_node = -1;
        for (int id = 0; id < static_cast<int>(nodes.size()); ++id)
            if (nodes[id].alive) final_node = id;
        PathTree out;
        out.graph = PathGraph(&host, nodes[final_node].paths);
        auto sup = out.support();
        out.root = sup.empty() ? 0 : sup.front();
        return out;
    }

    // cases 1 and 2: single child merges into X_j
    void merge_single(int j, int c, bool use_child_back, bool is_root) {
        int id = new_node();
        Node& nn = nodes[id];
        Node& xj2 = nodes[j];
        Node& xc2 = nodes[c];
        nn.members = xc2.members;
        nn.members.insert(nn.members.end(), xj2.members.begin(), xj2.members.end());
        nn.paths = std::move(xc2.paths);
        nn.paths.insert(nn.paths.end(), xj2.paths.begin(), xj2.paths.end());
        Path join = one_edge_path(host, xc2.fwd_edge);
        add_shadow(join);
        nn.paths.push_back(join);
        if (!is_root) {
            nn.parent = xj2.parent;
            nn.fwd_edge = xj2.fwd_edge;
            nn.fwd_endpoint = xj2.fwd_endpoint;
            detach_child(xj2.parent, j);
            nodes[xj2.parent].children.push_back(id);
            if (use_child_back) {
                check_internal(xc2.back_target != j,
                               "structA: child back arc would become a loop");
                nn.back_edge = xc2.back_edge;
                nn.back_origin = xc2.back_origin;
                nn.back_target = xc2.back_target;
            } else {
                nn.back_edge = xj2.back_edge;
                nn.back_origin = xj2.back_origin;
                nn.back_target = xj2.back_target;
            }
        }
        xj2.alive = xc2.alive = false;
        nn.alive = true;
        alive_count -= 1;  // two die, one born
        if (is_root) root_node = id;
        log_step(trace, std::string(is_root ? "merge-root" : use_child_back ? "case1" : "case2") +
                            " | " + std::to_string(j) + "+" + std::to_string(c));
    }

    // case 3: two children fuse via the 2-path through x_j
    void merge_pair(int j, int c1, int c2) {
        int cx = nodes[j].members[0];
        int id = new_node();
        Node& nn = nodes[id];
        Node& x1b = nodes[c1];
        Node& x2b = nodes[c2];
        nn.members = x1b.members;
        nn.members.insert(nn.members.end(), x2b.members.begin(), x2b.members.end());
        nn.paths = std::move(x1b.paths);
        nn.paths.insert(nn.paths.end(), x2b.paths.begin(), x2b.paths.end());
        // 2-path x1 - x_j - x2 from the two forward edges
        Path left = path_from(one_edge_path(host, x1b.fwd_edge), x1b.fwd_endpoint);
        Path right = path_from(one_edge_path(host, x2b.fwd_edge), cx);
        check_internal(left.back() == cx && right.front() == cx, "structA: fork mismatch");
        Path mid = concat(left, right);
        check_internal(mid.length() == 2, "structA: malformed 2-path");
        add_shadow(mid);
        nn.paths.push_back(mid);
        // forward arc: reversal of X_1's back arc, parent X'_1
        int p1 = x1b.back_target;
        nn.parent = p1;
        nn.fwd_edge = x1b.back_edge;
        nn.fwd_endpoint = x1b.back_origin;
        nodes[p1].children.push_back(id);
        // back arc: X_2's
        nn.back_edge = x2b.back_edge;
        nn.back_origin = x2b.back_origin;
        nn.back_target = x2b.back_target;
        check_internal(nn.back_target != id && nodes[nn.back_target].alive,
                       "structA: case3 back target invalid");
        detach_child(j, c1);
        detach_child(j, c2);
        x1b.alive = x2b.alive = false;
        nn.alive = true;
        alive_count -= 1;
        log_step(trace, "case3 | " + std::to_string(c1) + "+" + std::to_string(c2) + " under " +
                            std::to_string(p1));
    }

    // case 4: X_j with exactly two children and no back arc
    void merge_triple(int j, int c1, int c2) {
        bool is_root = j == root_node;
        int id = new_node();
        Node& nn = nodes[id];
        Node& x1 = nodes[c1];
        Node& x2 = nodes[c2];
        Node& xj = nodes[j];
        int cx = xj.members[0];
        nn.members = x1.members;
        nn.members.insert(nn.members.end(), x2.members.begin(), x2.members.end());
        nn.members.insert(nn.members.end(), xj.members.begin(), xj.members.end());
        nn.paths = std::move(x1.paths);
        nn.paths.insert(nn.paths.end(), x2.paths.begin(), x2.paths.end());
        nn.paths.insert(nn.paths.end(), xj.paths.begin(), xj.paths.end());
        Path j1 = one_edge_path(host, x1.fwd_edge);
        Path j2 = one_edge_path(host, x2.fwd_edge);
        add_shadow(j1);
        add_shadow(j2);
        nn.paths.push_back(j1);
        nn.paths.push_back(j2);
        (void)cx;
        if (!is_root) {
            nn.parent = xj.parent;
            nn.fwd_edge = xj.fwd_edge;
            nn.fwd_endpoint = xj.fwd_endpoint;
            detach_child(xj.parent, j);
            nodes[xj.parent].children.push_back(id);
            check_internal(x2.back_target != j, "structA: case4 back arc would become a loop");
            nn.back_edge = x2.back_edge;
            nn.back_origin = x2.back_origin;
            nn.back_target = x2.back_target;
        }
        x1.alive = x2.alive = xj.alive = false;
        nn.alive = true;
        alive_count -= 2;
        if (is_root) root_node = id;
        log_step(trace, "case4 | " + std::to_string(c1) + "+" + std::to_string(c2) + "+" +
                            std::to_string(j));
    }
};

}  // namespace

PathTree subcubic_12_path_tree(const MultiGraph& host, const EdgeSet& avail, StepTrace trace,
                               uint64_t dfs_seed) {
    require(host.num_vertices() >= 1, "subcubic_12_path_tree: empty graph");
    if (host.num_vertices() == 1) {
        PathTree t;
        t.graph = PathGraph(&host, {});
        return t;
    }
    require(is_connected_subset(host, avail), "subcubic_12_path_tree: graph not connected");
    {
        std::vector<int> origin;
        MultiGraph sub = subgraph(host, avail, &origin);
        auto br = bridges(sub);
        if (!br.empty())
            throw PreconditionError("subcubic_12_path_tree: bridge at host edge " +
                                    std::to_string(origin[br.front()]));
    }
    SubcubicEngine engine(host, avail, trace, dfs_seed);
    PathTree out = engine.run();
    // output invariants, checked unconditionally
    check_internal(out.shadow_is_tree(), "subcubic_12_path_tree: shadow not a tree");
    check_internal(out.max_shadow_degree() <= 3, "subcubic_12_path_tree: not subcubic");
    for (const Path& p : out.graph.paths())
        check_internal(p.length() == 1 || p.length() == 2,
                       "subcubic_12_path_tree: path length outside {1,2}");
    check_internal(static_cast<int>(out.support().size()) == host.num_vertices(),
                   "subcubic_12_path_tree: not spanning");
    return out;
}

PathTree subcubic_12_path_tree(const MultiGraph& host, StepTrace trace, uint64_t dfs_seed) {
    return subcubic_12_path_tree(host, EdgeSet::all(host.num_edges()), trace, dfs_seed);
}

namespace {

// ------------------------------------------------------------------
// shared machinery for the merge-tree reductions (variants of the
// structured tree with nodes joined by tree paths)
// ------------------------------------------------------------------

struct MergeNode {
    std::vector<int> members;
    int parent = -1;
    int parent_path = -1;  // index into the tree-path store
    std::vector<int> children;
    std::vector<Path> out_paths;  // the T'_i path tree of this node
    bool alive = true;
};

struct MergeForest {
    std::vector<MergeNode> nodes;
    std::vector<int> node_of;  // vertex -> node id (-1 when dropped)
    std::vector<Path> tpaths;  // the joining tree paths
    int root = -1;
    int alive_count = 0;

    // singleton nodes over the support of a path tree, edges = its paths
    void init(const PathTree& tree, int root_vertex, int num_vertices) {
        node_of.assign(num_vertices, -1);
        auto sup = tree.support();
        for (int v : sup) {
            node_of[v] = static_cast<int>(nodes.size());
            MergeNode nd;
            nd.members = {v};
            nodes.push_back(std::move(nd));
        }
        alive_count = static_cast<int>(nodes.size());
        tpaths = tree.graph.paths();
        if (sup.empty()) return;
        root = node_of[root_vertex];
        // orient the shadow tree away from the root
        std::vector<std::vector<std::pair<int, int>>> adj(num_vertices);
        for (int p = 0; p < static_cast<int>(tpaths.size()); ++p) {
            adj[tpaths[p].front()].push_back({p, tpaths[p].back()});
            adj[tpaths[p].back()].push_back({p, tpaths[p].front()});
        }
        std::vector<int> q{root_vertex};
        std::vector<uint8_t> vis(num_vertices, 0);
        vis[root_vertex] = 1;
        for (size_t i = 0; i < q.size(); ++i) {
            int v = q[i];
            for (auto [p, w] : adj[v]) {
                if (vis[w]) continue;
                vis[w] = 1;
                nodes[node_of[w]].parent = node_of[v];
                nodes[node_of[w]].parent_path = p;
                nodes[node_of[v]].children.push_back(node_of[w]);
                q.push_back(w);
            }
        }
    }

    std::vector<int> depths() const {
        std::vector<int> d(nodes.size(), -1);
        if (root < 0) return d;
        std::vector<int> q{root};
        d[root] = 0;
        for (size_t i = 0; i < q.size(); ++i)
            for (int c : nodes[q[i]].children)
                if (nodes[c].alive) {
                    d[c] = d[q[i]] + 1;
                    q.push_back(c);
                }
        return d;
    }

    int pick_deepest_internal() const {
        auto d = depths();
        int best = -1;
        for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
            const MergeNode& nd = nodes[id];
            if (!nd.alive || nd.children.empty()) continue;
            bool leaf_children = true;
            for (int c : nd.children)
                if (!nodes[c].children.empty()) leaf_children = false;
            if (!leaf_children) continue;
            if (best < 0 || d[id] > d[best] || (d[id] == d[best] && id < best)) best = id;
        }
        return best;
    }

    int pick_deepest_leaf() const {
        auto d = depths();
        int best = -1;
        for (int id = 0; id < static_cast<int>(nodes.size()); ++id) {
            const MergeNode& nd = nodes[id];
            if (!nd.alive || !nd.children.empty() || id == root) continue;
            if (best < 0 || d[id] > d[best] || (d[id] == d[best] && id < best)) best = id;
        }
        return best;
    }

    void detach(int child) {
        auto& cs = nodes[nodes[child].parent].children;
        cs.erase(std::remove(cs.begin(), cs.end(), child), cs.end());
    }

    // moves `src` (a leaf) into `dst`, adding `join` to dst's path tree
    void absorb(int src, int dst, Path join) {
        MergeNode& s = nodes[src];
        MergeNode& t = nodes[dst];
        for (int v : s.members) node_of[v] = dst;
        t.members.insert(t.members.end(), s.members.begin(), s.members.end());
        t.out_paths.insert(t.out_paths.end(), std::make_move_iterator(s.out_paths.begin()),
                           std::make_move_iterator(s.out_paths.end()));
        t.out_paths.push_back(std::move(join));
        detach(src);
        s.alive = false;
        --alive_count;
    }

    // deletes a leaf entirely (its members drop out of the structure)
    void drop_leaf(int id) {
        for (int v : nodes[id].members) node_of[v] = -1;
        detach(id);
        nodes[id].alive = false;
        --alive_count;
    }

    int the_single_node() const {
        for (int id = 0; id < static_cast<int>(nodes.size()); ++id)
            if (nodes[id].alive) return id;
        return -1;
    }

    // vertex of the node the path `p` touches inside node `id`
    int end_in(int p, int id) const {
        if (node_of[tpaths[p].front()] == id) return tpaths[p].front();
        check_internal(node_of[tpaths[p].back()] == id, "merge-tree: path end not in node");
        return tpaths[p].back();
    }
};

// unused private supply of oriented paths with seeded scan order
struct PrivatePool {
    std::vector<Path> paths;  // oriented: front = start
    std::vector<uint8_t> used;
    std::vector<std::vector<int>> by_start, by_end;
    Rng rng;
    bool allow_any;

    PrivatePool(int n, uint64_t seed, bool allow) : rng(seed), allow_any(allow) {
        by_start.resize(n);
        by_end.resize(n);
    }

    int add(Path p) {
        int id = static_cast<int>(paths.size());
        by_start[p.front()].push_back(id);
        by_end[p.back()].push_back(id);
        paths.push_back(std::move(p));
        used.push_back(0);
        return id;
    }

    // unused path starting at v whose vertices meet each of `against` only at
    // v and whose far end satisfies `far_ok`; under allow_any also paths
    // ending at v (returned re-oriented). Paths flagged in `skip` are
    // reserved elsewhere.
    template <typename F>
    int acquire(int v, const std::vector<const Path*>& against, F far_ok,
                const std::vector<uint8_t>* skip = nullptr) {
        auto try_list = [&](const std::vector<int>& list, bool at_end) {
            std::vector<int> cand = list;
            rng.shuffle(cand);
            for (int p : cand) {
                if (used[p]) continue;
                if (skip && (*skip)[p]) continue;
                if ((at_end ? paths[p].back() : paths[p].front()) != v) continue;
                if (!far_ok(at_end ? paths[p].front() : paths[p].back())) continue;
                bool ok = true;
                for (const Path* a : against)
                    if (conflicting(paths[p], *a, v)) ok = false;
                if (!ok) continue;
                used[p] = 1;
                if (at_end) paths[p] = paths[p].reversed();
                return p;
            }
            return -1;
        };
        int p = try_list(by_start[v], false);
        if (p < 0 && allow_any) p = try_list(by_end[v], true);
        return p;
    }
    int acquire(int v, const std::vector<const Path*>& against) {
        return acquire(v, against, [](int) { return true; });
    }
};

}  // namespace

// ------------------------------------------------------------------
// Lemma "(1,k) to (1,k+1)" extension
// ------------------------------------------------------------------

ExtendResult extend_path_tree(const MultiGraph& host, const PathTree& tree, int k,
                              const EdgeSet& h, uint64_t seed, StepTrace trace) {
    require(k >= 2, "extend_path_tree: k >= 2");
    for (const Path& p : tree.graph.paths())
        require(p.length() == 1 || p.length() == k, "extend_path_tree: input not a (1,k)-tree");

    // private edges: balanced orientation of the additional graph
    std::vector<int> origin;
    MultiGraph hsub = subgraph(host, h, &origin);
    Orientation hd = balanced_orientation(hsub);
    std::vector<std::vector<int>> out_edges(host.num_vertices());
    for (int j = 0; j < hsub.num_edges(); ++j)
        out_edges[hd.tail_of(hsub, j)].push_back(j);
    std::vector<uint8_t> h_used(hsub.num_edges(), 0);
    Rng rng(mix_seed(seed, 0xE87E4DULL));

    ExtendResult res;
    res.used_h = EdgeSet(host.num_edges());
    res.released = EdgeSet(host.num_edges());

    MergeForest f;
    f.init(tree, tree.root, host.num_vertices());
    if (f.alive_count <= 1) {
        res.tree = tree;
        return res;
    }

    // private edge at v avoiding the given vertex sets; falls back to any
    // unused incident edge of h
    auto acquire_edge = [&](int v, const std::vector<const Path*>& avoid) {
        auto scan = [&](const std::vector<int>& list, bool need_tail) {
            std::vector<int> cand = list;
            rng.shuffle(cand);
            for (int j : cand) {
                if (h_used[j]) continue;
                if (need_tail && hd.tail_of(hsub, j) != v) continue;
                int y = hsub.other_end(j, v);
                if (f.node_of[y] < 0) continue;  // leads outside the structure
                bool ok = true;
                for (const Path* a : avoid)
                    if (a->contains_vertex(y)) ok = false;
                if (!ok) continue;
                h_used[j] = 1;
                return j;
            }
            return -1;
        };
        int j = scan(out_edges[v], true);
        if (j < 0) {
            std::vector<int> all;
            for (int e : hsub.incident(v)) all.push_back(e);
            j = scan(all, false);
        }
        return j;
    };

    while (f.alive_count > 1) {
        int j = f.pick_deepest_internal();
        check_internal(j >= 0, "extend_path_tree: no reducible node");
        std::vector<int> kids = f.nodes[j].children;
        std::sort(kids.begin(), kids.end());

        // 1-path children merge directly
        int short_child = -1;
        for (int c : kids)
            if (f.tpaths[f.nodes[c].parent_path].length() == 1) short_child = c;
        if (short_child >= 0) {
            Path join = f.tpaths[f.nodes[short_child].parent_path];
            f.absorb(short_child, j, join);
            log_step(trace, "extend-1path | " + std::to_string(short_child) + " into " +
                                std::to_string(j));
            continue;
        }

        int c1 = kids[0];
        const Path& p1 = f.tpaths[f.nodes[c1].parent_path];
        int xj = f.end_in(f.nodes[c1].parent_path, j);
        // all child paths of X_j attach at its center
        for (int c : kids)
            check_internal(f.end_in(f.nodes[c].parent_path, j) == xj,
                           "extend_path_tree: center not unique");
        std::vector<const Path*> avoid{&p1};
        if (kids.size() >= 2) avoid.push_back(&f.tpaths[f.nodes[kids[1]].parent_path]);

        int je = acquire_edge(xj, avoid);
        if (je < 0)
            throw BudgetError("extend_path_tree: private-edge exhaustion at vertex " +
                              std::to_string(host.label(xj)));
        res.used_h.insert(origin[je]);
        int y = hsub.other_end(je, xj);
        int t = f.node_of[y];
        if (t == c1 && kids.size() >= 2) {
            std::swap(c1, kids[1]);  // exchange X_1 and X_2
        }
        Path priv_edge{{xj, y}, {origin[je]}};
        if (t != c1) {
            // concatenate the k-path with the private edge into a (k+1)-path
            Path grown = concat(path_from(f.tpaths[f.nodes[c1].parent_path],
                                          f.end_in(f.nodes[c1].parent_path, c1)),
                                priv_edge);
            f.absorb(c1, t, grown);
            log_step(trace, "extend-grow | " + std::to_string(c1) + " into " + std::to_string(t));
        } else {
            // single child holding y: join via the private edge alone and
            // release the k-path
            for (int e : f.tpaths[f.nodes[c1].parent_path].edges) res.released.insert(e);
            f.absorb(c1, j, priv_edge);
            log_step(trace, "extend-release | " + std::to_string(c1) + " into " +
                                std::to_string(j));
        }
    }

    int last = f.the_single_node();
    res.tree.graph = PathGraph(&host, f.nodes[last].out_paths);
    auto sup = res.tree.support();
    res.tree.root = sup.empty() ? 0 : sup.front();
    check_internal(res.tree.shadow_is_tree(), "extend_path_tree: shadow not a tree");
    for (const Path& p : res.tree.graph.paths())
        check_internal(p.length() == 1 || p.length() == k + 1,
                       "extend_path_tree: output length outside {1,k+1}");
    return res;
}

// ------------------------------------------------------------------
// Corollary route: (1,2) tree grown into a (1, ell+1) tree
// ------------------------------------------------------------------

GrowResult grow_1_ellplus1(const MultiGraph& host, const EdgeSet& g, const EdgeSet& h, int ell,
                           const GrowParams& params, uint64_t seed, StepTrace trace) {
    require(ell >= 1, "grow_1_ellplus1: ell >= 1");
    std::string last = "none";
    for (int attempt = 0; attempt < params.attempts; ++attempt) {
        try {
            uint64_t s = mix_seed(seed, attempt, 0x9203ULL);
            PathTree t = subcubic_12_path_tree(host, g, trace);
            if (ell == 1) {
                GrowResult out;
                out.tree = std::move(t);
                out.leftover = g;
                out.leftover |= h;
                for (int e : out.tree.graph.underlying_edges().to_vector()) out.leftover.erase(e);
                return out;
            }
            // split h into ell-1 fraction blocks
            EdgeSet rest = h;
            std::vector<EdgeSet> blocks;
            for (int i = 1; i <= ell - 1; ++i) {
                if (i == ell - 1) {
                    blocks.push_back(rest);
                    break;
                }
                long long num = 1, den = ell - i;  // equal split of the rest
                if (!params.equal_fractions) {
                    // eps_{i+1} = 4 eps_i schedule relative to the rest
                    long long p4 = 1;
                    for (int q = 0; q < i - 1; ++q) p4 *= 4;
                    num = 3 * p4;
                    long long top = 1;
                    for (int q = 0; q < ell - 1; ++q) top *= 4;
                    den = top - p4;
                }
                std::vector<int> origin;
                MultiGraph sub = subgraph(host, rest, &origin);
                Fraction fr = alpha_fraction(sub, num, den, 2 * ell + 8);
                EdgeSet block(host.num_edges());
                for (int j = 0; j < sub.num_edges(); ++j)
                    if (fr.edges.contains(j)) block.insert(origin[j]);
                blocks.push_back(block);
                rest -= block;
            }
            for (int k = 2; k <= ell; ++k) {
                ExtendResult er = extend_path_tree(host, t, k, blocks[k - 2],
                                                   mix_seed(s, k), trace);
                t = std::move(er.tree);
            }
            GrowResult out;
            out.tree = std::move(t);
            out.leftover = g;
            out.leftover |= h;
            auto hdeg = subset_degrees(host, h);
            for (int v = 0; v < host.num_vertices(); ++v)
                if (out.tree.graph.shadow_degree(v) > hdeg[v]) out.degree_dominated = false;
            for (int e : out.tree.graph.underlying_edges().to_vector()) out.leftover.erase(e);
            return out;
        } catch (const BudgetError& e) {
            last = e.what();
        }
    }
    throw BudgetError("grow_1_ellplus1: all attempts failed; last: " + last);
}

// ------------------------------------------------------------------
// Bipartite (ell, 2ell)-path-tree spanning the A side
// ------------------------------------------------------------------

namespace {

L2LResult l2l_attempt(const MultiGraph& host, const EdgeSet& g, const EdgeSet& h,
                      const std::vector<uint8_t>& side, int ell, const L2LParams& params,
                      uint64_t seed, StepTrace trace) {
    // reserve a fraction of h for the (1, ell+1) tree
    std::vector<int> origin;
    MultiGraph hsub = subgraph(host, h, &origin);
    Fraction fr = alpha_fraction(hsub, params.reserve_num, params.reserve_den, 2 * ell + 8);
    EdgeSet h_tree(host.num_edges()), h_dense(host.num_edges());
    for (int j = 0; j < hsub.num_edges(); ++j)
        (fr.edges.contains(j) ? h_tree : h_dense).insert(origin[j]);

    GrowResult grown = grow_1_ellplus1(host, g, h_tree, ell, params.grow,
                                       mix_seed(seed, 0x61ULL), trace);

    // dense (ell-1)-path-graph on the remaining h, orientation preserved
    std::vector<int> dorigin;
    MultiGraph dsub = subgraph(host, h_dense, &dorigin);
    DenseParams dp = params.dense;
    dp.ell = ell - 1;
    dp.l_desk = 0;
    DenseResult dense = dense_path_graph(dsub, dp, mix_seed(seed, 0x62ULL));

    PrivatePool pool(host.num_vertices(), mix_seed(seed, 0x63ULL),
                     params.allow_any_incident_path);
    for (int p = 0; p < dense.h.graph.num_paths(); ++p) {
        Path q = dense.h.graph.path(p);
        for (int& e : q.edges) e = dorigin[e];
        if (!dense.h.forward[p]) q = q.reversed();
        pool.add(std::move(q));
    }

    // merge-tree reduction: B vertices stay singletons and drop out; A is
    // collected into one node
    MergeForest f;
    int root_vertex = -1;
    for (int v : grown.tree.support())
        if (!side[v]) {
            root_vertex = v;
            break;
        }
    require(root_vertex >= 0, "bipartite_l2l_tree: no A-side vertex");
    f.init(grown.tree, root_vertex, host.num_vertices());

    EdgeSet released(host.num_edges());
    auto release_path = [&](int p) {
        for (int e : f.tpaths[p].edges) released.insert(e);
    };

    while (f.alive_count > 1) {
        // prune B-side leaves
        bool pruned = false;
        for (int id = 0; id < static_cast<int>(f.nodes.size()); ++id) {
            MergeNode& nd = f.nodes[id];
            if (!nd.alive || id == f.root || !nd.children.empty()) continue;
            bool all_b = true;
            for (int v : nd.members)
                if (!side[v]) all_b = false;
            if (!all_b) continue;
            release_path(nd.parent_path);
            f.drop_leaf(id);
            log_step(trace, "l2l-prune-B | " + std::to_string(id));
            pruned = true;
        }
        if (pruned) continue;
        if (f.alive_count <= 1) break;

        int j = f.pick_deepest_internal();
        check_internal(j >= 0, "bipartite_l2l_tree: no reducible node");
        MergeNode& xjn = f.nodes[j];
        check_internal(xjn.members.size() == 1 && side[xjn.members[0]],
                       "bipartite_l2l_tree: reduction center not a B singleton");
        int xj = xjn.members[0];
        std::vector<int> kids = xjn.children;
        std::sort(kids.begin(), kids.end());
        int c1 = kids[0];
        const Path* p1 = &f.tpaths[f.nodes[c1].parent_path];

        if (kids.size() >= 2) {
            const Path* p2 = &f.tpaths[f.nodes[kids[1]].parent_path];
            int pr = pool.acquire(xj, {p1, p2}, [&](int far) { return f.node_of[far] >= 0; });
            if (pr < 0)
                throw BudgetError("bipartite_l2l_tree: private-path exhaustion at vertex " +
                                  std::to_string(host.label(xj)));
            const Path& priv = pool.paths[pr];
            int y = priv.back();
            check_internal(!side[y], "bipartite_l2l_tree: private path ends on the B side");
            int t = f.node_of[y];
            if (t == c1) {
                std::swap(c1, kids[1]);
                p1 = &f.tpaths[f.nodes[c1].parent_path];
            }
            Path joined = concat(path_from(*p1, f.end_in(f.nodes[c1].parent_path, c1)), priv);
            f.absorb(c1, t, joined);
            log_step(trace, "l2l-pair | " + std::to_string(c1) + " into " + std::to_string(t));
        } else {
            // single child: look at the parent side as well
            int kparent = xjn.parent;
            check_internal(kparent >= 0, "bipartite_l2l_tree: dangling B node");
            const Path* pk = &f.tpaths[xjn.parent_path];
            int pr = pool.acquire(xj, {p1, pk}, [&](int far) { return f.node_of[far] >= 0; });
            if (pr < 0)
                throw BudgetError("bipartite_l2l_tree: private-path exhaustion at vertex " +
                                  std::to_string(host.label(xj)));
            const Path& priv = pool.paths[pr];
            int y = priv.back();
            int t = f.node_of[y];
            if (t != c1) {
                Path joined = concat(path_from(*p1, f.end_in(f.nodes[c1].parent_path, c1)), priv);
                f.absorb(c1, t, joined);
                log_step(trace, "l2l-single | " + std::to_string(c1) + " into " +
                                    std::to_string(t));
                // X_j is now a B leaf; the prune pass reclaims it
            } else {
                // child holds y: fuse child and parent through x_j, drop x_j
                Path joined = concat(path_from(*pk, f.end_in(xjn.parent_path, kparent)), priv);
                release_path(f.nodes[c1].parent_path);
                f.absorb(c1, kparent, joined);
                f.drop_leaf(j);
                log_step(trace, "l2l-fuse | " + std::to_string(c1) + "+" + std::to_string(j) +
                                    " into " + std::to_string(kparent));
            }
        }
    }

    int last = f.the_single_node();
    check_internal(last >= 0, "bipartite_l2l_tree: structure vanished");
    L2LResult out;
    out.tree.graph = PathGraph(&host, f.nodes[last].out_paths);
    auto sup = out.tree.support();
    out.tree.root = sup.empty() ? root_vertex : sup.front();

    check_internal(out.tree.shadow_is_tree(), "bipartite_l2l_tree: shadow not a tree");
    for (const Path& p : out.tree.graph.paths())
        check_internal(p.length() == ell || p.length() == 2 * ell,
                       "bipartite_l2l_tree: path length outside {ell, 2ell}");
    // spans exactly the A vertices of the grown tree's support
    for (int v : grown.tree.support())
        if (!side[v])
            check_internal(out.tree.graph.shadow_degree(v) > 0 ||
                               (f.nodes[last].members.size() == 1 && v == root_vertex),
                           "bipartite_l2l_tree: A vertex dropped");

    auto hdeg = subset_degrees(host, h);
    for (int v = 0; v < host.num_vertices(); ++v)
        if (out.tree.graph.shadow_degree(v) > hdeg[v]) out.degree_dominated = false;

    out.leftover = g;
    out.leftover |= h;
    for (int e : out.tree.graph.underlying_edges().to_vector()) out.leftover.erase(e);
    return out;
}

}  // namespace

L2LResult bipartite_l2l_tree(const MultiGraph& host, const EdgeSet& g, const EdgeSet& h,
                             const std::vector<uint8_t>& side, int ell, const L2LParams& params,
                             uint64_t seed, StepTrace trace) {
    require(ell >= 2 && ell % 2 == 0, "bipartite_l2l_tree: ell must be even and >= 2");
    for (int e = 0; e < host.num_edges(); ++e)
        if (g.contains(e) || h.contains(e)) {
            auto [u, v] = host.ends(e);
            require(side[u] != side[v], "bipartite_l2l_tree: edge inside one side");
        }
    std::string last = "none";
    for (int attempt = 0; attempt < params.attempts; ++attempt) {
        try {
            return l2l_attempt(host, g, h, side, ell, params, mix_seed(seed, attempt, 0x7AULL),
                               trace);
        } catch (const BudgetError& e) {
            last = e.what();
        }
    }
    throw BudgetError("bipartite_l2l_tree: all attempts failed; last: " + last);
}

// ------------------------------------------------------------------
// Lemma route: connected [ell, ell+3]-path-graph covering g1 union g2
// ------------------------------------------------------------------

namespace {

CoverResult cover_attempt(const MultiGraph& host, const EdgeSet& g1, const EdgeSet& g2, int ell,
                          const CoverParams& params, uint64_t seed, StepTrace trace) {
    PathTree t = subcubic_12_path_tree(host, g1, trace, mix_seed(seed, 0x7EEDULL));

    // unused g1 edges join the pool that ll1 decomposes
    EdgeSet pool_edges = g2;
    EdgeSet tree_edges = t.graph.underlying_edges();
    for (int e : g1.to_vector())
        if (!tree_edges.contains(e)) pool_edges.insert(e);

    CoverStats stats;
    std::vector<int> porigin;
    MultiGraph psub = subgraph(host, pool_edges, &porigin);

    // the 1/(5 ell) split between the absorbing block and the rest is kept
    // only when both sides stay above the cone threshold
    bool split = params.strict_split ||
                 psub.min_degree() / (5 * ell) >= params.split_min_degree;
    stats.split_used = split;

    std::vector<Path> h1_paths, h2_paths;
    if (split) {
        Fraction fr = alpha_fraction(psub, params.split_num, 5LL * ell, 2 * ell + 8);
        EdgeSet r1(host.num_edges()), r2(host.num_edges());
        for (int j = 0; j < psub.num_edges(); ++j)
            (fr.edges.contains(j) ? r1 : r2).insert(porigin[j]);
        std::vector<int> o1, o2;
        MultiGraph s1 = subgraph(host, r1, &o1);
        MultiGraph s2 = subgraph(host, r2, &o2);
        Ll1Params lp = params.ll1;
        lp.dense.l_desk = 0;
        Ll1Result a = ll1_decomposition(s1, lp, mix_seed(seed, 0xA1ULL));
        Ll1Result b = ll1_decomposition(s2, lp, mix_seed(seed, 0xA2ULL));
        for (int p = 0; p < a.h.graph.num_paths(); ++p) {
            Path q = a.h.graph.path(p);
            for (int& e : q.edges) e = o1[e];
            h1_paths.push_back(std::move(q));
        }
        for (int p = 0; p < b.h.graph.num_paths(); ++p) {
            Path q = b.h.graph.path(p);
            for (int& e : q.edges) e = o2[e];
            h2_paths.push_back(std::move(q));
        }
    } else {
        Ll1Params lp = params.ll1;
        lp.dense.l_desk = 0;
        Ll1Result a = ll1_decomposition(psub, lp, mix_seed(seed, 0xA1ULL));
        for (int p = 0; p < a.h.graph.num_paths(); ++p) {
            Path q = a.h.graph.path(p);
            for (int& e : q.edges) e = porigin[e];
            h1_paths.push_back(std::move(q));
        }
    }

    // private paths: balanced orientation of H1's shadow
    PrivatePool pool(host.num_vertices(), mix_seed(seed, 0xB0ULL),
                     params.allow_any_incident_path);
    {
        PathGraph h1(&host, h1_paths);
        OrientedPathGraph oh = orient_paths_balanced(h1);
        for (int p = 0; p < h1.num_paths(); ++p) {
            Path q = h1.path(p);
            if (!oh.forward[p]) q = q.reversed();
            pool.add(std::move(q));
        }
    }
    std::vector<Path> returned;  // concatenations put back, not re-consumed

    MergeForest f;
    f.init(t, t.root, host.num_vertices());

    // Reserve one pool path per tree path by bipartite matching before any
    // reduction: conflicts are static, so this removes ordering starvation.
    std::vector<int> reserved_for_tree(f.tpaths.size(), -1);
    {
        std::vector<int> xj_of(f.tpaths.size(), -1);
        for (int id = 0; id < static_cast<int>(f.nodes.size()); ++id) {
            const MergeNode& nd = f.nodes[id];
            if (!nd.alive || nd.parent < 0) continue;
            xj_of[nd.parent_path] = f.end_in(nd.parent_path, nd.parent);
        }
        std::vector<std::vector<int>> tcands(f.tpaths.size());
        for (size_t p = 0; p < f.tpaths.size(); ++p) {
            if (xj_of[p] < 0) continue;
            int xj = xj_of[p];
            auto add_cands = [&](const std::vector<int>& lst) {
                for (int q : lst)
                    if (!conflicting(pool.paths[q], f.tpaths[p], xj)) tcands[p].push_back(q);
            };
            add_cands(pool.by_start[xj]);
            if (params.allow_any_incident_path) add_cands(pool.by_end[xj]);
        }
        std::vector<int> owner(pool.paths.size(), -1);
        std::vector<int> mark(pool.paths.size(), -1);
        std::function<bool(int, int)> kuhn = [&](int p, int stamp) {
            for (int q : tcands[p]) {
                if (mark[q] == stamp) continue;
                mark[q] = stamp;
                if (owner[q] < 0 || kuhn(owner[q], stamp)) {
                    owner[q] = p;
                    reserved_for_tree[p] = q;
                    return true;
                }
            }
            return false;
        };
        for (size_t p = 0; p < f.tpaths.size(); ++p) {
            if (xj_of[p] < 0) continue;
            if (!kuhn(static_cast<int>(p), static_cast<int>(p)))
                throw BudgetError("cover_llp1: private-path exhaustion at vertex " +
                                  std::to_string(host.label(xj_of[p])));
        }
    }
    std::vector<uint8_t> pool_reserved(pool.paths.size(), 0);
    for (int q : reserved_for_tree)
        if (q >= 0) pool_reserved[q] = 1;

    while (f.alive_count > 1) {
        int c = f.pick_deepest_leaf();
        check_internal(c >= 0, "cover_llp1: no leaf to absorb");
        int j = f.nodes[c].parent;
        int pidx = f.nodes[c].parent_path;
        const Path& p1 = f.tpaths[pidx];
        int xj = f.end_in(pidx, j);
        int x1 = f.end_in(pidx, c);

        int pr = reserved_for_tree[pidx];
        if (pr >= 0 && !pool.used[pr]) {
            pool.used[pr] = 1;
            if (pool.paths[pr].front() != xj) pool.paths[pr] = pool.paths[pr].reversed();
        } else {
            // prefer landing outside the child so the double-consumption
            // return move stays rare; reservations of other tree paths are
            // off limits
            pr = pool.acquire(
                xj, {&p1},
                [&](int far) { return f.node_of[far] >= 0 && f.node_of[far] != c; },
                &pool_reserved);
            if (pr < 0)
                pr = pool.acquire(xj, {&p1}, [&](int far) { return f.node_of[far] >= 0; },
                                  &pool_reserved);
            if (pr < 0) {
                // child-side fallback: a path at x1 that lands back inside c
                // joins j and c through x1 in one piece
                int pr_b = pool.acquire(x1, {&p1}, [&](int far) { return f.node_of[far] == c; },
                                        &pool_reserved);
                if (pr_b >= 0) {
                    Path joined = concat(path_from(p1, xj), pool.paths[pr_b]);
                    f.absorb(c, j, joined);
                    ++stats.tree_absorptions;
                    log_step(trace, "cover-childside | " + std::to_string(c) + " into " +
                                        std::to_string(j));
                    continue;
                }
            }
            if (pr < 0)
                throw BudgetError("cover_llp1: private-path exhaustion at vertex " +
                                  std::to_string(host.label(xj)));
        }
        const Path& priv = pool.paths[pr];
        int y = priv.back();
        int tnode = f.node_of[y];
        if (tnode != c) {
            Path joined = concat(path_from(p1, x1), priv);
            f.absorb(c, tnode, joined);
            ++stats.tree_absorptions;
            log_step(trace, "cover-absorb | " + std::to_string(c) + " into " +
                                std::to_string(tnode));
        } else {
            // the private path already reaches the child: join with it alone,
            // then return the tree path concatenated with a second private
            Path join = priv;
            int pr2 = pool.acquire(xj, {&p1}, [&](int) { return true; }, &pool_reserved);
            if (pr2 < 0)
                throw BudgetError("cover_llp1: private-path exhaustion at vertex " +
                                  std::to_string(host.label(xj)));
            Path back = concat(path_from(p1, x1), pool.paths[pr2]);
            returned.push_back(std::move(back));
            ++stats.returned_paths;
            f.absorb(c, j, join);
            ++stats.tree_absorptions;
            log_step(trace, "cover-return | " + std::to_string(c) + " into " + std::to_string(j));
        }
    }

    // assemble H = T' plus unused H1 paths plus returned paths plus H2
    int last = f.the_single_node();
    std::vector<Path> all = std::move(f.nodes[last].out_paths);
    for (size_t p = 0; p < pool.paths.size(); ++p)
        if (!pool.used[p]) all.push_back(pool.paths[p]);
    for (Path& p : returned) all.push_back(std::move(p));
    for (Path& p : h2_paths) all.push_back(std::move(p));

    CoverResult out;
    out.h = PathGraph(&host, std::move(all));
    out.stats = stats;

    // exact coverage of g1 union g2
    EdgeSet want = g1;
    want |= g2;
    EdgeSet got = out.h.underlying_edges();
    check_internal(got.size() == want.size(), "cover_llp1: coverage size mismatch");
    for (int e : want.to_vector())
        check_internal(got.contains(e), "cover_llp1: edge lost");
    for (const Path& p : out.h.paths())
        check_internal(p.length() >= ell && p.length() <= ell + 3,
                       "cover_llp1: path length outside [ell, ell+3]");
    check_internal(out.h.shadow_connected(), "cover_llp1: result not connected");

    ConflictStats conf = conflict_ratio(out.h);
    out.stats.max_conf = conf.max_conf;
    out.stats.conf_bound = 1.0 / (2.0 * (ell + 10));
    out.stats.conf_ok = conf.max_conf < out.stats.conf_bound;
    if (params.strict_conf && !out.stats.conf_ok)
        throw BudgetError("cover_llp1: conf " + std::to_string(conf.max_conf) +
                          " not below 1/(2(ell+10))");
    return out;
}

}  // namespace

CoverResult cover_llp1(const MultiGraph& host, const EdgeSet& g1, const EdgeSet& g2, int ell,
                       const CoverParams& params, uint64_t seed, StepTrace trace) {
    require(ell >= 2, "cover_llp1: ell >= 2");
    for (int e = 0; e < host.num_edges(); ++e)
        require(!(g1.contains(e) && g2.contains(e)), "cover_llp1: g1 and g2 must be edge-disjoint");
    std::string last = "none";
    for (int attempt = 0; attempt < params.attempts; ++attempt) {
        try {
            return cover_attempt(host, g1, g2, ell, params, mix_seed(seed, attempt, 0xC7ULL),
                                 trace);
        } catch (const BudgetError& e) {
            last = e.what();
        }
    }
    throw BudgetError("cover_llp1: all attempts failed; last: " + last);
}

// ------------------------------------------------------------------
// parity-fixing subtree
// ------------------------------------------------------------------

std::vector<int> parity_subtree(const PathTree& tree, const std::vector<int>& x) {
    require(x.size() % 2 == 0, "parity_subtree: |X| must be even");
    const PathGraph& h = tree.graph;
    int n = h.host().num_vertices();
    std::vector<uint8_t> in_x(n, 0);
    for (int v : x) {
        require(v >= 0 && v < n && h.shadow_degree(v) > 0, "parity_subtree: X not in support");
        in_x[v] = 1;
    }
    if (h.num_paths() == 0) return {};

    // orient the shadow tree away from the root, then select the edge above v
    // iff v's subtree holds an odd number of X vertices
    std::vector<int> parent_path(n, -1), order;
    std::vector<uint8_t> vis(n, 0);
    std::vector<int> q{tree.root};
    vis[tree.root] = 1;
    for (size_t i = 0; i < q.size(); ++i) {
        int v = q[i];
        order.push_back(v);
        for (int p : h.incident_paths(v)) {
            int w = h.path(p).other_end(v);
            if (vis[w]) continue;
            vis[w] = 1;
            parent_path[w] = p;
            q.push_back(w);
        }
    }
    std::vector<int> cnt(n, 0);
    std::vector<int> selected;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        cnt[v] += in_x[v] ? 1 : 0;
        if (parent_path[v] >= 0) {
            if (cnt[v] % 2) selected.push_back(parent_path[v]);
            int u = h.path(parent_path[v]).other_end(v);
            cnt[u] += cnt[v];
        }
    }
    check_internal(cnt[tree.root] % 2 == 0, "parity_subtree: X count parity broken");

    // exactness: the selected paths' shadow degrees are odd exactly on X
    std::vector<int> deg(n, 0);
    for (int p : selected) {
        deg[h.path(p).front()]++;
        deg[h.path(p).back()]++;
    }
    for (int v = 0; v < n; ++v)
        check_internal((deg[v] % 2 == 1) == (in_x[v] == 1), "parity_subtree: parity mismatch");
    std::sort(selected.begin(), selected.end());
    return selected;
}

}  // namespace pathcut
