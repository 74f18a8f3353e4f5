#include "pathcut/pathgraph.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "pathcut/errors.hpp"
#include "pathcut/euler.hpp"
#include "pathcut/orientation.hpp"

namespace pathcut {

bool Path::contains_vertex(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool Path::valid(const MultiGraph& g) const {
    if (edges.empty() || verts.size() != edges.size() + 1) return false;
    for (size_t i = 0; i < edges.size(); ++i) {
        int e = edges[i];
        if (e < 0 || e >= g.num_edges()) return false;
        auto [a, b] = g.ends(e);
        if (!((verts[i] == a && verts[i + 1] == b) || (verts[i] == b && verts[i + 1] == a)))
            return false;
    }
    std::unordered_set<int> seen(verts.begin(), verts.end());
    return seen.size() == verts.size();
}

Path Path::reversed() const {
    Path p;
    p.verts.assign(verts.rbegin(), verts.rend());
    p.edges.assign(edges.rbegin(), edges.rend());
    return p;
}

PathGraph::PathGraph(const MultiGraph* host, std::vector<Path> paths)
    : host_(host), paths_(std::move(paths)) {
    int n = host_->num_vertices();
    inc_.assign(n, {});
    underlying_deg_.assign(n, 0);
    std::vector<uint8_t> used(host_->num_edges(), 0);
    for (int p = 0; p < num_paths(); ++p) {
        const Path& q = paths_[p];
        check_internal(q.valid(*host_), "PathGraph: invalid member path");
        for (int e : q.edges) {
            check_internal(!used[e], "PathGraph: paths are not edge-disjoint");
            used[e] = 1;
        }
        for (size_t i = 0; i < q.edges.size(); ++i) {
            underlying_deg_[q.verts[i]]++;
            underlying_deg_[q.verts[i + 1]]++;
        }
        inc_[q.front()].push_back(p);
        inc_[q.back()].push_back(p);
    }
}

EdgeSet PathGraph::underlying_edges() const {
    EdgeSet s(host_->num_edges());
    for (const Path& q : paths_)
        for (int e : q.edges) s.insert(e);
    return s;
}

bool PathGraph::shadow_even() const {
    for (int v = 0; v < host_->num_vertices(); ++v)
        if (shadow_degree(v) % 2) return false;
    return true;
}

bool PathGraph::shadow_connected() const {
    int n = host_->num_vertices();
    int start = -1;
    for (int v = 0; v < n && start < 0; ++v)
        if (shadow_degree(v) > 0) start = v;
    if (start < 0) return true;
    std::vector<uint8_t> vis_v(n, 0), vis_p(num_paths(), 0);
    std::vector<int> stack{start};
    vis_v[start] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int p : inc_[v]) {
            if (vis_p[p]) continue;
            vis_p[p] = 1;
            int w = paths_[p].other_end(v);
            if (!vis_v[w]) {
                vis_v[w] = 1;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (shadow_degree(v) > 0 && !vis_v[v]) return false;
    return true;
}

int OrientedPathGraph::out_degree(int v) const {
    int d = 0;
    for (int p : graph.incident_paths(v))
        if (start_of(p) == v) ++d;
    return d;
}

std::vector<int> OrientedPathGraph::private_paths(int v) const {
    std::vector<int> out;
    for (int p : graph.incident_paths(v))
        if (start_of(p) == v) out.push_back(p);
    return out;
}

int OrientedPathGraph::balance_defect() const {
    int worst = 0;
    for (int v = 0; v < graph.host().num_vertices(); ++v) {
        int out = out_degree(v);
        int in = graph.shadow_degree(v) - out;
        worst = std::max(worst, std::abs(out - in));
    }
    return worst;
}

bool conflicting(const Path& p, const Path& q, int v) {
    require(p.has_end(v) && q.has_end(v), "conflicting: v must end both paths");
    for (int w : p.verts) {
        if (w == v) continue;
        if (q.contains_vertex(w)) return true;
    }
    return false;
}

ConflictStats conflict_ratio(const PathGraph& h) {
    int n = h.host().num_vertices();
    ConflictStats st;
    st.conf.assign(n, 0.0);
    std::unordered_map<int, int> count;
    for (int v = 0; v < n; ++v) {
        int d = h.shadow_degree(v);
        if (d == 0) continue;  // conf of an isolated vertex is 0 by convention
        count.clear();
        int worst = 0;
        for (int p : h.incident_paths(v))
            for (int w : h.path(p).verts) {
                if (w == v) continue;
                worst = std::max(worst, ++count[w]);
            }
        st.conf[v] = static_cast<double>(worst) / d;
        st.max_conf = std::max(st.max_conf, st.conf[v]);
    }
    return st;
}

int TransitionSystem::find_pos(int v, int path) const {
    const auto& ord = order_[v];
    for (size_t i = 0; i < ord.size(); ++i)
        if (ord[i] == path) return static_cast<int>(i);
    return -1;
}

TransitionSystem TransitionSystem::conflict_induced(const PathGraph& h) {
    int n = h.host().num_vertices();
    TransitionSystem s;
    s.order_.resize(n);
    s.mat_.resize(n);
    for (int v = 0; v < n; ++v) {
        s.order_[v] = h.incident_paths(v);
        int d = static_cast<int>(s.order_[v].size());
        s.mat_[v].assign(static_cast<size_t>(d) * d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = i + 1; j < d; ++j) {
                if (conflicting(h.path(s.order_[v][i]), h.path(s.order_[v][j]), v)) {
                    s.mat_[v][i * d + j] = 1;
                    s.mat_[v][j * d + i] = 1;
                }
            }
    }
    return s;
}

bool TransitionSystem::forbidden(int v, int path_a, int path_b) const {
    int i = find_pos(v, path_a), j = find_pos(v, path_b);
    if (i < 0 || j < 0) return false;
    int d = static_cast<int>(order_[v].size());
    return mat_[v][i * d + j] != 0;
}

int TransitionSystem::size_at(int v, int path) const {
    int i = find_pos(v, path);
    if (i < 0) return 0;
    int d = static_cast<int>(order_[v].size());
    int c = 0;
    for (int j = 0; j < d; ++j) c += mat_[v][i * d + j];
    return c;
}

bool TransitionSystem::symmetric() const {
    for (size_t v = 0; v < order_.size(); ++v) {
        int d = static_cast<int>(order_[v].size());
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (mat_[v][i * d + j] != mat_[v][j * d + i]) return false;
    }
    return true;
}

OrientedPathGraph orient_paths_balanced(const PathGraph& h) {
    // Build the shadow multigraph explicitly and reuse the host orientation
    // machinery: shadow edge id == path id.
    MultiGraph shadow(h.host().num_vertices());
    for (int p = 0; p < h.num_paths(); ++p) shadow.add_edge(h.path(p).front(), h.path(p).back());
    Orientation d = balanced_orientation(shadow);
    OrientedPathGraph out;
    out.graph = h;
    out.forward.resize(h.num_paths());
    for (int p = 0; p < h.num_paths(); ++p)
        out.forward[p] = d.head_of(p) == h.path(p).back() ? 1 : 0;
    return out;
}

bool jackson_condition(const PathGraph& h, const TransitionSystem& s) {
    for (int v = 0; v < h.host().num_vertices(); ++v) {
        int d = h.shadow_degree(v);
        for (int p : h.incident_paths(v))
            if (s.size_at(v, p) > d / 2.0 - 2.0) return false;
    }
    return true;
}

}  // namespace pathcut
