#include "pathcut/euler.hpp"

#include "pathcut/errors.hpp"

namespace pathcut {

std::vector<EulerStep> euler_circuit(const EulerAdj& g, int start) {
    int n = static_cast<int>(g.adj.size());
    int tags = 0;
    for (const auto& l : g.adj) tags += static_cast<int>(l.size());
    check_internal(tags % 2 == 0, "euler_circuit: odd half-edge count");
    int m = tags / 2;

    std::vector<size_t> next(n, 0);
    std::vector<uint8_t> used;
    // tag ids can be sparse; size by max tag
    int max_tag = -1;
    for (const auto& l : g.adj)
        for (auto h : l) max_tag = std::max(max_tag, h.tag);
    used.assign(max_tag + 1, 0);

    std::vector<EulerStep> circuit;
    circuit.reserve(m);
    std::vector<int> stack_v{start};
    std::vector<int> stack_tag{-1};
    while (!stack_v.empty()) {
        int v = stack_v.back();
        bool advanced = false;
        while (next[v] < g.adj[v].size()) {
            const auto& h = g.adj[v][next[v]++];
            if (used[h.tag]) continue;
            used[h.tag] = 1;
            stack_v.push_back(h.to);
            stack_tag.push_back(h.tag);
            advanced = true;
            break;
        }
        if (!advanced) {
            stack_v.pop_back();
            int tag = stack_tag.back();
            stack_tag.pop_back();
            if (tag >= 0) circuit.push_back({stack_v.back(), tag});
        }
    }
    check_internal(static_cast<int>(circuit.size()) == m,
                   "euler_circuit: support not connected or degrees odd");
    // The pop order yields the circuit reversed; flip for forward order.
    std::vector<EulerStep> fwd(circuit.rbegin(), circuit.rend());
    return fwd;
}

}  // namespace pathcut
