#pragma once

#include <vector>

namespace pathcut {

// Hierholzer on an explicit adjacency structure. Items are (neighbor, tag)
// pairs where tag identifies the undirected edge; every tag appears exactly
// twice (once per endpoint) unless it is a half edge. Returns the circuit as
// a list of (vertex_from, tag) steps; the circuit ends back at start.
// Degrees must all be even and the support connected from start.
struct EulerAdj {
    struct Half {
        int to;
        int tag;
    };
    std::vector<std::vector<Half>> adj;

    explicit EulerAdj(int n) : adj(n) {}
    void add(int u, int v, int tag) {
        adj[u].push_back({v, tag});
        adj[v].push_back({u, tag});
    }
};

struct EulerStep {
    int from;
    int tag;
};

// Consumes the adjacency copy internally; adjacency order determines the
// traversal, so shuffle it beforehand for seeded variety.
std::vector<EulerStep> euler_circuit(const EulerAdj& g, int start);

}  // namespace pathcut
