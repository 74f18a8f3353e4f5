#pragma once

#include <vector>

#include "pathcut/multigraph.hpp"

namespace pathcut {

// Unit-capacity digraph max-flow (BFS augmentation). Arcs can be disabled,
// which pack_arborescences and the orientation certifier use heavily.
class UnitFlow {
  public:
    explicit UnitFlow(int n) : n_(n), adj_(n) {}

    int num_nodes() const { return n_; }
    int num_arcs() const { return static_cast<int>(tail_.size()); }
    int add_arc(int u, int v);
    int tail(int a) const { return tail_[a]; }
    int head(int a) const { return head_[a]; }
    void set_enabled(int a, bool on) { enabled_[a] = on ? 1 : 0; }
    bool enabled(int a) const { return enabled_[a] != 0; }

    // Max flow value from s to t, capped at `limit` (limit < 0: uncapped).
    // Flow assignment readable through flow_on() until the next run.
    int max_flow(int s, int t, int limit = -1);
    bool flow_on(int a) const { return flow_[a] != 0; }

    // After a run that did NOT reach `limit`, the s-side of a min cut.
    std::vector<int> cut_source_side(int s) const;

  private:
    bool augment(int s, int t);

    int n_;
    std::vector<int> tail_, head_;
    std::vector<uint8_t> enabled_, flow_;
    std::vector<std::vector<int>> adj_;  // arc ids out of each node (forward arcs only)
    std::vector<std::vector<int>> radj_; // arc ids into each node
    std::vector<int> seen_, parent_arc_, parent_dir_;
    int stamp_ = 0;
};

// Digraph view of an orientation: arc e goes tail->head[e].
UnitFlow make_flow_digraph(const MultiGraph& g, const Orientation& d);
// Undirected view: each edge contributes antiparallel unit arcs.
UnitFlow make_flow_undirected(const MultiGraph& g);

// Global minimum edge cut value; 0 if disconnected; n<=1 -> error.
int edge_connectivity(const MultiGraph& g);

// Exhaustive over all bipartitions; test oracle, guarded to small n.
int edge_connectivity_brute(const MultiGraph& g);

bool is_connected(const MultiGraph& g);
bool is_connected_subset(const MultiGraph& g, const EdgeSet& edges);

// Bridges of g (edge ids). Used for 2-edge-connectivity checks.
std::vector<int> bridges(const MultiGraph& g);
bool is_two_edge_connected(const MultiGraph& g);

}  // namespace pathcut
