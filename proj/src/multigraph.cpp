#include "pathcut/multigraph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "pathcut/errors.hpp"

namespace pathcut {

int MultiGraph::add_vertex() {
    inc_.emplace_back();
    labels_.push_back(static_cast<long long>(labels_.size()));
    return num_vertices() - 1;
}

int MultiGraph::add_edge(int u, int v) {
    require(u >= 0 && u < num_vertices() && v >= 0 && v < num_vertices(),
            "add_edge: vertex out of range");
    require(u != v, "add_edge: loop rejected");
    int e = num_edges();
    edges_.emplace_back(u, v);
    inc_[u].push_back(e);
    inc_[v].push_back(e);
    return e;
}

int MultiGraph::min_degree() const {
    int d = num_vertices() == 0 ? 0 : degree(0);
    for (int v = 1; v < num_vertices(); ++v) d = std::min(d, degree(v));
    return d;
}

int MultiGraph::max_degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

bool MultiGraph::consistent() const {
    long long total = 0;
    std::vector<int> seen(num_edges(), 0);
    for (int v = 0; v < num_vertices(); ++v) {
        total += degree(v);
        for (int e : inc_[v]) {
            if (!is_end(e, v)) return false;
            seen[e]++;
        }
    }
    for (int e = 0; e < num_edges(); ++e)
        if (seen[e] != 2) return false;
    return total == 2LL * num_edges();
}

std::vector<int> EdgeSet::to_vector() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int e = 0; e < universe(); ++e)
        if (in_[e]) out.push_back(e);
    return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    for (int e = 0; e < universe(); ++e)
        if (o.in_[e]) insert(e);
    return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& o) {
    for (int e = 0; e < universe(); ++e)
        if (o.in_[e]) erase(e);
    return *this;
}

EdgeSet EdgeSet::complement() const {
    EdgeSet out(universe());
    for (int e = 0; e < universe(); ++e)
        if (!in_[e]) out.insert(e);
    return out;
}

int Orientation::out_degree(const MultiGraph& g, int v) const {
    int d = 0;
    for (int e : g.incident(v))
        if (head[e] != v) ++d;
    return d;
}

int Orientation::in_degree(const MultiGraph& g, int v) const {
    int d = 0;
    for (int e : g.incident(v))
        if (head[e] == v) ++d;
    return d;
}

MultiGraph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<long long, long long>> raw;
    std::vector<int> raw_line;
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find('#');
        if (pos != std::string::npos) line = line.substr(0, pos);
        std::istringstream ls(line);
        long long a, b;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b))
            throw PreconditionError("parse error at line " + std::to_string(lineno) +
                                    ": expected two integers");
        if (n < 0) {
            n = a;
            m = b;
            if (n < 0 || m < 0)
                throw PreconditionError("parse error at line " + std::to_string(lineno) +
                                        ": negative n or m");
        } else {
            if (a < 0 || b < 0)
                throw PreconditionError("parse error at line " + std::to_string(lineno) +
                                        ": negative vertex label");
            if (a == b)
                throw PreconditionError("loop edge rejected at line " + std::to_string(lineno));
            raw.emplace_back(a, b);
            raw_line.push_back(lineno);
        }
    }
    if (n < 0) throw PreconditionError("parse error: empty document");
    if (static_cast<long long>(raw.size()) != m)
        throw PreconditionError("parse error: declared " + std::to_string(m) + " edges, found " +
                                std::to_string(raw.size()));

    // Dense renumbering by first appearance; original labels retained.
    std::unordered_map<long long, int> id;
    id.reserve(raw.size() * 2);
    MultiGraph g(static_cast<int>(n));
    auto intern = [&](long long lab, int lineno_) {
        auto it = id.find(lab);
        if (it != id.end()) return it->second;
        int v = static_cast<int>(id.size());
        if (v >= n)
            throw PreconditionError("parse error at line " + std::to_string(lineno_) +
                                    ": more vertex labels than declared n");
        id.emplace(lab, v);
        g.set_label(v, lab);
        return v;
    };
    for (size_t i = 0; i < raw.size(); ++i) {
        int u = intern(raw[i].first, raw_line[i]);
        int v = intern(raw[i].second, raw_line[i]);
        g.add_edge(u, v);
    }
    // Unreferenced vertices keep synthetic labels not colliding with used ones.
    long long next = 0;
    for (int v = static_cast<int>(id.size()); v < n; ++v) {
        while (id.count(next)) ++next;
        g.set_label(v, next);
        id.emplace(next, v);
    }
    return g;
}

std::string save_graph(const MultiGraph& g) {
    std::ostringstream out;
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends(e);
        out << g.label(u) << ' ' << g.label(v) << '\n';
    }
    return out.str();
}

MultiGraph subgraph(const MultiGraph& g, const EdgeSet& keep, std::vector<int>* origin) {
    MultiGraph out(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) out.set_label(v, g.label(v));
    if (origin) origin->clear();
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!keep.contains(e)) continue;
        auto [u, v] = g.ends(e);
        out.add_edge(u, v);
        if (origin) origin->push_back(e);
    }
    return out;
}

std::vector<int> subset_degrees(const MultiGraph& g, const EdgeSet& edges) {
    std::vector<int> deg(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!edges.contains(e)) continue;
        auto [u, v] = g.ends(e);
        deg[u]++;
        deg[v]++;
    }
    return deg;
}

}  // namespace pathcut
