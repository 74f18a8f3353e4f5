#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <numeric>
#include <set>

#include "doctest.h"
#include "pathcut/cones.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/generators.hpp"
#include "testutil.hpp"

using namespace pathcut;

namespace {

// disjoint union of k ell-paths, each colored 1..ell along the path and
// oriented along it: the cone matching is forced, every walk is a path
struct PreColored {
    MultiGraph g;
    EdgeColoring col;
    Orientation ori;
};

PreColored precolored_paths(int k, int ell) {
    PreColored pc;
    pc.g = MultiGraph(0);
    pc.col.k = ell;
    for (int r = 0; r < k; ++r) {
        int prev = pc.g.add_vertex();
        for (int i = 1; i <= ell; ++i) {
            int v = pc.g.add_vertex();
            pc.g.add_edge(prev, v);
            pc.col.color.push_back(i);
            pc.ori.head.push_back(v);
            prev = v;
        }
    }
    pc.col.tally.assign(pc.g.num_vertices(), std::vector<int>(ell, 0));
    for (int e = 0; e < pc.g.num_edges(); ++e) {
        auto [u, v] = pc.g.ends(e);
        pc.col.tally[u][pc.col.color[e] - 1]++;
        pc.col.tally[v][pc.col.color[e] - 1]++;
    }
    return pc;
}

}  // namespace

TEST_CASE("half-cone partition arithmetic from the construction") {
    // 7 in-items at one vertex, c=4: one half of size 4 and one of size 3
    MultiGraph g(2);
    EdgeColoring col;
    col.k = 2;
    Orientation ori;
    for (int i = 0; i < 7; ++i) {
        g.add_edge(0, 1);
        col.color.push_back(1);
        ori.head.push_back(1);  // seven color-1 arcs into vertex 1
    }
    for (int i = 0; i < 7; ++i) {
        g.add_edge(1, 0);
        col.color.push_back(2);
        ori.head.push_back(0);  // seven color-2 arcs out of vertex 1
    }
    col.tally.assign(2, std::vector<int>(2, 0));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends(e);
        col.tally[u][col.color[e] - 1]++;
        col.tally[v][col.color[e] - 1]++;
    }
    ConeSystem cs = build_cone_system(g, col, ori, 2, 4, 9);
    CHECK(cs.strict_sizes_ok);
    std::multiset<int> sizes;
    for (const auto& h : cs.halves)
        if (h.vertex == 1 && h.color == 1 && h.incoming) sizes.insert((int)h.items.size());
    CHECK(sizes == std::multiset<int>{3, 4});
}

TEST_CASE("half-cone partition: 6 items with c=4 gives two of size 3") {
    bool ok = true;
    MultiGraph g(2);
    EdgeColoring col;
    col.k = 2;
    Orientation ori;
    for (int i = 0; i < 6; ++i) {
        g.add_edge(0, 1);
        col.color.push_back(1);
        ori.head.push_back(1);
    }
    for (int i = 0; i < 6; ++i) {
        g.add_edge(1, 0);
        col.color.push_back(2);
        ori.head.push_back(0);
    }
    col.tally.assign(2, std::vector<int>(2, 0));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends(e);
        col.tally[u][col.color[e] - 1]++;
        col.tally[v][col.color[e] - 1]++;
    }
    ConeSystem cs = build_cone_system(g, col, ori, 2, 4, 9);
    std::multiset<int> sizes;
    for (const auto& h : cs.halves)
        if (h.vertex == 1 && h.color == 1 && h.incoming) sizes.insert((int)h.items.size());
    CHECK(sizes == std::multiset<int>{3, 3});
    CHECK(ok);
}

TEST_CASE("dummy edges equalize in/out mismatches") {
    // |E_1^-(v)| = 5, |E_2^+(v)| = 3 at v=1: expect 2 dummies v -> v0 color 2
    MultiGraph g(2);
    EdgeColoring col;
    col.k = 2;
    Orientation ori;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(0, 1);
        col.color.push_back(1);
        ori.head.push_back(1);
    }
    for (int i = 0; i < 3; ++i) {
        g.add_edge(1, 0);
        col.color.push_back(2);
        ori.head.push_back(0);
    }
    col.tally.assign(2, std::vector<int>(2, 0));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.ends(e);
        col.tally[u][col.color[e] - 1]++;
        col.tally[v][col.color[e] - 1]++;
    }
    ConeSystem cs = build_cone_system(g, col, ori, 2, 3, 9);
    int out_dummies = 0;
    for (const auto& d : cs.dummies)
        if (d.vertex == 1 && d.color == 2 && !d.from_dummy) out_dummies++;
    CHECK(out_dummies == 2);
    // after the fix the paired sets match
    for (const auto& co : cs.cones) {
        if (co.minus < 0 || co.plus < 0) continue;
        CHECK(cs.halves[co.minus].items.size() == cs.halves[co.plus].items.size());
    }
}

TEST_CASE("forced matching on pre-colored disjoint paths: every walk a path") {
    for (int ell : {2, 3, 5}) {
        PreColored pc = precolored_paths(6, ell);
        ConeSystem cs = build_cone_system(pc.g, pc.col, pc.ori, ell, 3, 4);
        WalkDecomposition wd = sample_and_classify(cs, 11);
        CHECK(wd.bad_count == 0);
        CHECK(wd.short_count == 0);
        for (const auto& w : wd.walks) CHECK(w.kind == WalkDecomposition::Kind::path);
        // edge partition: every non-dummy edge on exactly one walk
        std::vector<int> cover(pc.g.num_edges(), 0);
        for (const auto& w : wd.walks)
            for (int it : w.items)
                if (!cs.is_dummy(it)) cover[it]++;
        CHECK(std::count(cover.begin(), cover.end(), 1) == pc.g.num_edges());
    }
}

TEST_CASE("edge partition property on a circulant") {
    MultiGraph g = gen_circulant(40, {1, 2, 3, 4, 5, 6});
    ConeSystem cs = build_cone_system(g, 3, 3, 21);
    WalkDecomposition wd = sample_and_classify(cs, 5);
    std::vector<int> cover(g.num_edges(), 0);
    for (const auto& w : wd.walks)
        for (int it : w.items)
            if (!cs.is_dummy(it)) cover[it]++;
    CHECK(std::count(cover.begin(), cover.end(), 1) == g.num_edges());
    // walks through the dummy vertex are short and not extended past it
    for (const auto& w : wd.walks) {
        bool dummy = false;
        for (int it : w.items) dummy = dummy || cs.is_dummy(it);
        CHECK((dummy == (w.kind == WalkDecomposition::Kind::shortw)));
        if (dummy) CHECK((int)w.items.size() <= cs.ell);
    }
}

TEST_CASE("resample clears instantly on the forced instance") {
    PreColored pc = precolored_paths(5, 3);
    ConeSystem cs = build_cone_system(pc.g, pc.col, pc.ori, 3, 3, 4);
    ResampleResult rr = resample_until_clear(cs, 3, 16, 7);
    CHECK(rr.cleared);
    CHECK(rr.rounds == 1);
    CHECK(rr.remainder.empty());
    CHECK(rr.h.num_paths() == 5);
}

TEST_CASE("resample budget exhaustion on an adversarial multigraph") {
    // two vertices, 30 parallel edges, ell=2: every dummy-free walk revisits
    // its start, so bad walks saturate every cone and no pairing clears
    MultiGraph g(2);
    for (int i = 0; i < 30; ++i) g.add_edge(0, 1);
    ConeSystem cs = build_cone_system(g, 2, 4, 3);
    ResampleResult rr = resample_until_clear(cs, 1, 12, 3);
    CHECK(!rr.cleared);
    CHECK(rr.rounds == 12);
    DenseParams dp;
    dp.ell = 2;
    dp.c = 4;
    dp.b = 1;
    dp.resample_budget = 12;
    dp.l_desk = 9;
    CHECK_THROWS_AS(dense_path_graph(g, dp, 3), BudgetError);
}

TEST_CASE("dense_path_graph on a 12-regular circulant") {
    MultiGraph g = gen_circulant(60, {1, 2, 3, 4, 5, 6});
    DenseParams dp;
    dp.ell = 3;
    DenseResult dr = dense_path_graph(g, dp, 17);
    const PathGraph& h = dr.h.graph;
    for (const Path& p : h.paths()) CHECK(p.length() == 3);
    // partition of E(G) between H and R
    EdgeSet covered = h.underlying_edges();
    for (int e : dr.remainder.to_vector()) {
        CHECK(!covered.contains(e));
        covered.insert(e);
    }
    CHECK(covered.size() == g.num_edges());
    CHECK(dr.stats.min_ratio > 0);
    // determinism
    DenseResult dr2 = dense_path_graph(g, dp, 17);
    CHECK(dr2.h.graph.num_paths() == h.num_paths());
    CHECK(dr2.remainder.size() == dr.remainder.size());
    for (int p = 0; p < h.num_paths(); ++p) CHECK(dr2.h.graph.path(p).edges == h.path(p).edges);
}

TEST_CASE("dense_path_graph enforces the degree gate") {
    MultiGraph g = gen_circulant(12, {1});
    DenseParams dp;
    dp.ell = 3;
    dp.l_desk = 9;
    CHECK_THROWS_AS(dense_path_graph(g, dp, 1), PreconditionError);
}

TEST_CASE("ll1_decomposition covers a 16-regular circulant with {3,4}-paths") {
    MultiGraph g = gen_circulant(60, {1, 2, 3, 4, 5, 6, 7, 8});
    Ll1Params lp;
    lp.dense.ell = 3;
    Ll1Result r = ll1_decomposition(g, lp, 23);
    CHECK(r.h.graph.underlying_edges().size() == g.num_edges());
    int n3 = 0, n4 = 0;
    for (const Path& p : r.h.graph.paths()) {
        if (p.length() == 3) n3++;
        else if (p.length() == 4) n4++;
    }
    CHECK(n3 + n4 == r.h.graph.num_paths());
    CHECK(n4 == r.stats.extended_paths);
    CHECK(!r.stats.split_used);  // desk degrees skip the 1/(9 ell) split
}

TEST_CASE("ll1_decomposition uses the paper split on dense hosts") {
    // strict split on a host dense enough for both blocks
    MultiGraph g = gen_circulant(120, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12,
                                       13, 14, 15, 16, 17, 18, 19, 20});
    Ll1Params lp;
    lp.dense.ell = 2;
    lp.strict_split = true;
    lp.split_min_degree = 1;
    Ll1Result r = ll1_decomposition(g, lp, 5);
    CHECK(r.stats.split_used);
    CHECK(r.h.graph.underlying_edges().size() == g.num_edges());
    for (const Path& p : r.h.graph.paths()) CHECK((p.length() == 2 || p.length() == 3));
}
