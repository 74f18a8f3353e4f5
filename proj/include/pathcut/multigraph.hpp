#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pathcut {

// Undirected multigraph with stable edge ids. Parallel edges allowed, loops
// rejected. Immutable in pipeline use once built.
class MultiGraph {
  public:
    MultiGraph() = default;
    explicit MultiGraph(int n) : inc_(n), labels_(n) {
        for (int v = 0; v < n; ++v) labels_[v] = v;
    }

    int add_vertex();
    int add_edge(int u, int v);  // returns edge id

    int num_vertices() const { return static_cast<int>(inc_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    std::pair<int, int> ends(int e) const { return edges_[e]; }
    int other_end(int e, int v) const {
        auto [a, b] = edges_[e];
        return v == a ? b : a;
    }
    bool is_end(int e, int v) const { return edges_[e].first == v || edges_[e].second == v; }

    const std::vector<int>& incident(int v) const { return inc_[v]; }
    int degree(int v) const { return static_cast<int>(inc_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    long long label(int v) const { return labels_[v]; }
    void set_label(int v, long long lab) { labels_[v] = lab; }

    // Sum of degrees == 2m; cheap structural self-check used by tests.
    bool consistent() const;

  private:
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> inc_;
    std::vector<long long> labels_;
};

// Subset of edge ids of a host graph, set semantics.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : in_(universe, 0) {}
    static EdgeSet all(int universe) {
        EdgeSet s(universe);
        for (int e = 0; e < universe; ++e) s.insert(e);
        return s;
    }

    int universe() const { return static_cast<int>(in_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int e) const { return in_[e] != 0; }
    void insert(int e) {
        if (!in_[e]) {
            in_[e] = 1;
            ++count_;
        }
    }
    void erase(int e) {
        if (in_[e]) {
            in_[e] = 0;
            --count_;
        }
    }
    std::vector<int> to_vector() const;

    EdgeSet& operator|=(const EdgeSet& o);
    EdgeSet& operator-=(const EdgeSet& o);
    EdgeSet complement() const;

  private:
    std::vector<uint8_t> in_;
    int count_ = 0;
};

// Bipartition of the vertices plus the crossing edges.
struct Cut {
    std::vector<uint8_t> side;    // 0 = V1, 1 = V2
    std::vector<int> cross;       // edge ids with one end on each side
    int cross_connectivity = -1;  // edge connectivity of (V, cross), filled by locally_max_cut
};

// Direction choice per edge: head[e] is one of the edge's endpoints.
struct Orientation {
    std::vector<int> head;

    int tail_of(const MultiGraph& g, int e) const { return g.other_end(e, head[e]); }
    int head_of(int e) const { return head[e]; }
    int out_degree(const MultiGraph& g, int v) const;
    int in_degree(const MultiGraph& g, int v) const;
};

// Edge-list text round trip. Format: "n m" then m lines "u v"; '#' comments.
MultiGraph load_graph(const std::string& text);
std::string save_graph(const MultiGraph& g);

// Subgraph on the same vertex set keeping `keep` edges. origin (optional)
// receives, per subgraph edge id, the host edge id.
MultiGraph subgraph(const MultiGraph& g, const EdgeSet& keep, std::vector<int>* origin = nullptr);

// Per-vertex degrees inside an edge subset.
std::vector<int> subset_degrees(const MultiGraph& g, const EdgeSet& edges);

}  // namespace pathcut
