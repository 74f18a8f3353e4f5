#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "pathcut/connectivity.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/generators.hpp"
#include "pathcut/pathtrees.hpp"
#include "testutil.hpp"

using namespace pathcut;

namespace {

void check_subcubic_invariants(const MultiGraph& g, const PathTree& t) {
    CHECK(t.shadow_is_tree());
    CHECK(t.max_shadow_degree() <= 3);
    for (const Path& p : t.graph.paths()) CHECK((p.length() == 1 || p.length() == 2));
    CHECK((int)t.support().size() == g.num_vertices());
    // host edges used at most once is enforced by the PathGraph constructor
}

}  // namespace

TEST_CASE("subcubic tree: triangle, parallel pair, theta graph") {
    MultiGraph tri = gen_circulant(3, {1});
    check_subcubic_invariants(tri, subcubic_12_path_tree(tri));

    MultiGraph pp = load_graph("2 2\n0 1\n0 1\n");
    PathTree t = subcubic_12_path_tree(pp);
    CHECK(t.graph.num_paths() == 1);
    CHECK(t.graph.path(0).length() == 1);

    // theta: two vertices joined by three internally disjoint 2-paths
    MultiGraph theta(2);
    for (int r = 0; r < 3; ++r) {
        int mid = theta.add_vertex();
        theta.add_edge(0, mid);
        theta.add_edge(mid, 1);
    }
    check_subcubic_invariants(theta, subcubic_12_path_tree(theta));
}

TEST_CASE("subcubic tree: bridge detected") {
    MultiGraph p = load_graph("3 2\n0 1\n1 2\n");
    CHECK_THROWS_AS(subcubic_12_path_tree(p), PreconditionError);
}

TEST_CASE("subcubic tree: 200 seeded bridgeless graphs") {
    for (uint64_t seed = 1; seed <= 200; ++seed) {
        MultiGraph g = testutil::random_bridgeless(4 + (int)(seed % 57), seed);
        REQUIRE(is_two_edge_connected(g));
        PathTree t = subcubic_12_path_tree(g);
        check_subcubic_invariants(g, t);
    }
}

TEST_CASE("subcubic tree: step trace is emitted") {
    std::vector<std::string> trace;
    MultiGraph g = testutil::random_bridgeless(12, 5);
    subcubic_12_path_tree(g, &trace);
    CHECK(!trace.empty());
}

TEST_CASE("extend_path_tree: single 1-path tree is unchanged") {
    MultiGraph g(4);
    int e = g.add_edge(0, 1);
    g.add_edge(2, 3);  // the additional graph
    PathTree t;
    t.graph = PathGraph(&g, {Path{{0, 1}, {e}}});
    t.root = 0;
    EdgeSet h(g.num_edges());
    h.insert(1);
    ExtendResult r = extend_path_tree(g, t, 2, h, 3);
    CHECK(r.tree.graph.num_paths() == 1);
    CHECK(r.tree.graph.path(0).length() == 1);
    CHECK(r.used_h.empty());
}

TEST_CASE("extend_path_tree: star of 2-paths gains private edges") {
    // (1,2)-tree: hub 0 with three 2-paths to leaves; rich additional graph
    MultiGraph g(1);
    std::vector<Path> ps;
    std::vector<int> far;
    for (int r = 0; r < 3; ++r) {
        int mid = g.add_vertex(), leaf = g.add_vertex();
        ps.push_back(Path{{0, mid, leaf}, {g.add_edge(0, mid), g.add_edge(mid, leaf)}});
        far.push_back(leaf);
    }
    EdgeSet h(0);
    {
        // connect everything to everything with fresh h edges
        std::vector<int> hs;
        for (int u = 0; u < g.num_vertices(); ++u)
            for (int v = u + 1; v < g.num_vertices(); ++v) hs.push_back(g.add_edge(u, v));
        h = EdgeSet(g.num_edges());
        for (int e : hs) h.insert(e);
    }
    PathTree t;
    t.graph = PathGraph(&g, ps);
    t.root = 0;
    ExtendResult r = extend_path_tree(g, t, 2, h, 7);
    for (const Path& p : r.tree.graph.paths()) CHECK((p.length() == 1 || p.length() == 3));
    CHECK(r.tree.shadow_is_tree());
    // the merge structure spans the shadow support (hub + leaves)
    CHECK((int)r.tree.support().size() == 4);
}

TEST_CASE("extend_path_tree: exhaustion reported") {
    MultiGraph g(1);
    std::vector<Path> ps;
    for (int r = 0; r < 2; ++r) {
        int mid = g.add_vertex(), leaf = g.add_vertex();
        ps.push_back(Path{{0, mid, leaf}, {g.add_edge(0, mid), g.add_edge(mid, leaf)}});
    }
    PathTree t;
    t.graph = PathGraph(&g, ps);
    t.root = 0;
    EdgeSet h(g.num_edges());  // empty additional graph
    CHECK_THROWS_AS(extend_path_tree(g, t, 2, h, 1), BudgetError);
}

TEST_CASE("grow_1_ellplus1 on a circulant") {
    // g: hamiltonian cycle (2-edge-connected), h: the rest of C_40(1..5)
    MultiGraph g = gen_circulant(40, {1, 2, 3, 4, 5});
    EdgeSet cyc(g.num_edges()), rest(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) (e < 40 ? cyc : rest).insert(e);
    GrowParams gp;
    GrowResult r = grow_1_ellplus1(g, cyc, rest, 3, gp, 11);
    CHECK(r.tree.shadow_is_tree());
    CHECK((int)r.tree.support().size() == 40);
    for (const Path& p : r.tree.graph.paths()) CHECK((p.length() == 1 || p.length() == 4));
    // ledger: tree edges + leftover = cyc + rest
    EdgeSet all = cyc;
    all |= rest;
    EdgeSet seen = r.tree.graph.underlying_edges();
    for (int e : r.leftover.to_vector()) {
        CHECK(!seen.contains(e));
        seen.insert(e);
    }
    CHECK(seen.size() == all.size());
}

TEST_CASE("grow_1_ellplus1: ell=1 returns the subcubic tree") {
    MultiGraph g = gen_circulant(12, {1, 2});
    EdgeSet cyc(g.num_edges()), rest(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) (e < 12 ? cyc : rest).insert(e);
    GrowResult r = grow_1_ellplus1(g, cyc, rest, 1, GrowParams{}, 3);
    for (const Path& p : r.tree.graph.paths()) CHECK((p.length() == 1 || p.length() == 2));
}

TEST_CASE("bipartite_l2l_tree spans the A side with {ell,2ell}-paths") {
    // bipartite host: even cycle C_48 as the 2EC graph; h = random bipartite
    // regular-ish graph on the same sides
    int n = 48;
    MultiGraph g(n);
    std::vector<uint8_t> side(n);
    for (int v = 0; v < n; ++v) side[v] = v % 2;
    EdgeSet cyc(0), extra(0);
    {
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        // h: odd offsets of a circulant stay bipartite under the parity sides
        for (int s : {3, 5, 7, 9, 11, 13})
            for (int i = 0; i < n; ++i) g.add_edge(i, (i + s) % n);
        cyc = EdgeSet(g.num_edges());
        extra = EdgeSet(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) (e < n ? cyc : extra).insert(e);
    }
    L2LParams lp;
    lp.dense.ell = 3;  // overwritten to ell-1 internally
    L2LResult r = bipartite_l2l_tree(g, cyc, extra, side, 4, lp, 31);
    CHECK(r.tree.shadow_is_tree());
    for (const Path& p : r.tree.graph.paths()) CHECK((p.length() == 4 || p.length() == 8));
    // spans A = even vertices
    for (int v = 0; v < n; v += 2) CHECK(r.tree.graph.shadow_degree(v) > 0);
    // even paths join A to A
    for (const Path& p : r.tree.graph.paths()) {
        CHECK(side[p.front()] == 0);
        CHECK(side[p.back()] == 0);
    }
}

TEST_CASE("bipartite_l2l_tree rejects odd ell and non-bipartite input") {
    MultiGraph g = gen_circulant(12, {1});
    std::vector<uint8_t> side(12);
    for (int v = 0; v < 12; ++v) side[v] = v % 2;
    EdgeSet all = EdgeSet::all(g.num_edges());
    CHECK_THROWS_AS(bipartite_l2l_tree(g, all, EdgeSet(g.num_edges()), side, 3, L2LParams{}, 1),
                    PreconditionError);
    MultiGraph odd = gen_circulant(12, {1, 2});  // offset 2 breaks bipartiteness
    CHECK_THROWS_AS(bipartite_l2l_tree(odd, EdgeSet::all(odd.num_edges()),
                                       EdgeSet(odd.num_edges()), side, 4, L2LParams{}, 1),
                    PreconditionError);
}

TEST_CASE("cover_llp1 covers circulant splits exactly") {
    for (int ell : {3, 4}) {
        MultiGraph g = gen_circulant(60, {1, 2, 3, 4, 5, 6, 7, 8});
        // g1: hamiltonian cycle, g2: everything else
        EdgeSet g1(g.num_edges()), g2(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e) (e < 60 ? g1 : g2).insert(e);
        CoverParams cp;
        cp.ll1.dense.ell = ell;
        CoverResult r = cover_llp1(g, g1, g2, ell, cp, 41 + ell);
        CHECK(r.h.underlying_edges().size() == g.num_edges());
        for (const Path& p : r.h.paths()) {
            CHECK(p.length() >= ell);
            CHECK(p.length() <= ell + 3);
        }
        CHECK(r.h.shadow_connected());
        CHECK(!r.stats.split_used);
    }
}

TEST_CASE("parity_subtree: shadow path and star cases") {
    // shadow path a-b-c via two 2-paths
    MultiGraph g(3);
    std::vector<Path> ps;
    {
        int m1 = g.add_vertex(), m2 = g.add_vertex();
        ps.push_back(Path{{0, m1, 1}, {g.add_edge(0, m1), g.add_edge(m1, 1)}});
        ps.push_back(Path{{1, m2, 2}, {g.add_edge(1, m2), g.add_edge(m2, 2)}});
    }
    PathTree t;
    t.graph = PathGraph(&g, ps);
    t.root = 0;
    auto f = parity_subtree(t, {0, 2});
    CHECK(f.size() == 2);  // both paths
    CHECK(parity_subtree(t, {}).empty());
    CHECK_THROWS_AS(parity_subtree(t, {0}), PreconditionError);

    // star with three leaves: X = two of them selects exactly those paths
    MultiGraph s(4);
    std::vector<Path> sp;
    for (int leaf = 1; leaf <= 3; ++leaf)
        sp.push_back(Path{{0, leaf}, {s.add_edge(0, leaf)}});
    PathTree st;
    st.graph = PathGraph(&s, sp);
    st.root = 0;
    auto fs = parity_subtree(st, {1, 2});
    CHECK(fs == std::vector<int>({0, 1}));
}

TEST_CASE("parity_subtree: random trees, random even X, exact odd set") {
    Rng rng(99);
    for (uint64_t seed = 1; seed <= 60; ++seed) {
        // random tree over k hubs realized by 2-paths
        int k = 4 + (int)(seed % 12);
        MultiGraph g(k);
        std::vector<Path> ps;
        for (int v = 1; v < k; ++v) {
            int u = rng.index(v);
            int mid = g.add_vertex();
            ps.push_back(Path{{u, mid, v}, {g.add_edge(u, mid), g.add_edge(mid, v)}});
        }
        PathTree t;
        t.graph = PathGraph(&g, ps);
        t.root = 0;
        std::vector<int> x;
        for (int v = 0; v < k; ++v)
            if (rng.coin()) x.push_back(v);
        if (x.size() % 2) x.pop_back();
        auto f = parity_subtree(t, x);
        std::vector<int> deg(g.num_vertices(), 0);
        for (int p : f) {
            deg[t.graph.path(p).front()]++;
            deg[t.graph.path(p).back()]++;
        }
        std::set<int> odd;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (deg[v] % 2) odd.insert(v);
        CHECK(odd == std::set<int>(x.begin(), x.end()));
    }
}
