#pragma once

#include <cstdint>
#include <vector>

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Simple path in a host graph: k+1 vertices joined by k edges, k >= 1.
struct Path {
    std::vector<int> verts;
    std::vector<int> edges;

    int length() const { return static_cast<int>(edges.size()); }
    int front() const { return verts.front(); }
    int back() const { return verts.back(); }
    int other_end(int v) const { return v == verts.front() ? verts.back() : verts.front(); }
    bool has_end(int v) const { return verts.front() == v || verts.back() == v; }
    bool contains_vertex(int v) const;
    bool valid(const MultiGraph& g) const;  // consecutive incidence + simplicity
    Path reversed() const;
};

// Set of pairwise edge-disjoint paths over a host graph. The shadow
// multigraph (one edge per path, joining its ends) is implicit: shadow edge
// id == path id. Edge-disjointness is revalidated on construction.
class PathGraph {
  public:
    PathGraph() = default;
    PathGraph(const MultiGraph* host, std::vector<Path> paths);

    const MultiGraph& host() const { return *host_; }
    int num_paths() const { return static_cast<int>(paths_.size()); }
    const Path& path(int p) const { return paths_[p]; }
    const std::vector<Path>& paths() const { return paths_; }

    // shadow incidence: ids of paths with an end at v
    const std::vector<int>& incident_paths(int v) const { return inc_[v]; }
    int shadow_degree(int v) const { return static_cast<int>(inc_[v].size()); }

    // degree of v counting underlying path edges
    int underlying_degree(int v) const { return underlying_deg_[v]; }
    EdgeSet underlying_edges() const;

    bool shadow_even() const;
    bool shadow_connected() const;  // over vertices touched by paths

  private:
    const MultiGraph* host_ = nullptr;
    std::vector<Path> paths_;
    std::vector<std::vector<int>> inc_;
    std::vector<int> underlying_deg_;
};

// Path graph plus a traversal direction per path; the outgoing paths of a
// vertex are its private paths.
struct OrientedPathGraph {
    PathGraph graph;
    std::vector<uint8_t> forward;  // per path: true = stored vertex order

    int start_of(int p) const {
        const Path& q = graph.path(p);
        return forward[p] ? q.front() : q.back();
    }
    int end_of(int p) const {
        const Path& q = graph.path(p);
        return forward[p] ? q.back() : q.front();
    }
    int out_degree(int v) const;
    std::vector<int> private_paths(int v) const;  // outgoing path ids
    int balance_defect() const;
};

// Two edge-disjoint paths sharing the end v conflict when they also meet at
// some vertex other than v.
bool conflicting(const Path& p, const Path& q, int v);

struct ConflictStats {
    std::vector<double> conf;  // per vertex, 0 when no incident path
    double max_conf = 0.0;
};

// conf(v) = max over w != v of (# paths at v through w) / d_H(v)
ConflictStats conflict_ratio(const PathGraph& h);

// Per-vertex symmetric forbidden-pair relation over the shadow edges at v.
class TransitionSystem {
  public:
    static TransitionSystem conflict_induced(const PathGraph& h);

    bool forbidden(int v, int path_a, int path_b) const;
    int size_at(int v, int path) const;  // |S_v(e)|
    bool symmetric() const;

  private:
    std::vector<std::vector<int>> order_;    // incident path ids at v
    std::vector<std::vector<uint8_t>> mat_;  // d x d flags, aligned with order_
    int find_pos(int v, int path) const;
};

// Balanced orientation of the shadow multigraph, private paths populated.
OrientedPathGraph orient_paths_balanced(const PathGraph& h);

// Jackson's degree condition |S_v(e)| <= d(v)/2 - 2 at every vertex and edge.
bool jackson_condition(const PathGraph& h, const TransitionSystem& s);

}  // namespace pathcut
