#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "pathcut/arborescence.hpp"
#include "pathcut/coloring.hpp"
#include "pathcut/connectivity.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/fraction.hpp"
#include "pathcut/generators.hpp"
#include "pathcut/orientation.hpp"
#include "testutil.hpp"

using namespace pathcut;

TEST_CASE("nearly_equitable_coloring: C6 with k=2 is perfectly split") {
    MultiGraph c6 = gen_circulant(6, {1});
    EdgeColoring col = nearly_equitable_coloring(c6, 2);
    CHECK(col.consistent(c6));
    CHECK(col.max_spread(c6) <= 2);
    // even cycle admits the exact alternating split; sweeps should find it
    for (int v = 0; v < 6; ++v) CHECK(std::abs(col.d(v, 1) - col.d(v, 2)) <= 2);
}

TEST_CASE("nearly_equitable_coloring: k=1 vacuous") {
    MultiGraph g = testutil::random_multigraph(10, 25, 7);
    EdgeColoring col = nearly_equitable_coloring(g, 1);
    for (int e = 0; e < g.num_edges(); ++e) CHECK(col.color[e] == 1);
}

TEST_CASE("nearly_equitable_coloring: random multigraphs, exhaustive bound check") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        MultiGraph g = testutil::random_multigraph(20, 100, seed);
        for (int k : {2, 3, 5}) {
            EdgeColoring col = nearly_equitable_coloring(g, k);
            CHECK(col.consistent(g));
            CHECK(col.max_spread(g) <= 2);
        }
    }
}

TEST_CASE("color classes partition the edge set") {
    MultiGraph g = testutil::random_multigraph(15, 60, 42);
    EdgeColoring col = nearly_equitable_coloring(g, 4);
    std::vector<int> count(5, 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        REQUIRE(col.color[e] >= 1);
        REQUIRE(col.color[e] <= 4);
        count[col.color[e]]++;
    }
    CHECK(count[1] + count[2] + count[3] + count[4] == g.num_edges());
}

TEST_CASE("k_fraction: identity at k=1, bound 2 in general") {
    MultiGraph g = testutil::random_multigraph(18, 80, 5);
    Fraction f1 = k_fraction(g, 1);
    CHECK(f1.edges.size() == g.num_edges());
    CHECK(f1.achieved_slack == 0);

    for (int k : {2, 3, 5}) {
        Fraction f = k_fraction(g, k);
        auto deg = subset_degrees(g, f.edges);
        for (int v = 0; v < g.num_vertices(); ++v)
            CHECK(std::abs(deg[v] - static_cast<double>(g.degree(v)) / k) <= 2.0 + 1e-9);
    }
}

TEST_CASE("k_fraction: star K_{1,8} at k=2") {
    MultiGraph star = [] {
        MultiGraph g(9);
        for (int i = 1; i <= 8; ++i) g.add_edge(0, i);
        return g;
    }();
    Fraction f = k_fraction(star, 2);
    auto deg = subset_degrees(star, f.edges);
    CHECK(deg[0] >= 2);
    CHECK(deg[0] <= 6);
    for (int v = 1; v <= 8; ++v) CHECK(deg[v] <= 1);
}

TEST_CASE("k_fraction and complement simultaneously within slack 2") {
    MultiGraph g = testutil::random_multigraph(16, 90, 11);
    Fraction f = k_fraction(g, 3);
    auto deg = subset_degrees(g, f.edges);
    auto cdeg = subset_degrees(g, f.edges.complement());
    for (int v = 0; v < g.num_vertices(); ++v) {
        double d = g.degree(v);
        CHECK(std::abs(deg[v] - d / 3) <= 2.0 + 1e-9);
        CHECK(std::abs(cdeg[v] - 2 * d / 3) <= 2.0 + 1e-9);
    }
}

TEST_CASE("alpha_fraction: 1/2 single stage, 1/27 composition, alpha=1 degenerate") {
    MultiGraph g = testutil::random_multigraph(20, 120, 13);
    Fraction half = alpha_fraction(g, 1, 2, 2);
    auto deg = subset_degrees(g, half.edges);
    for (int v = 0; v < g.num_vertices(); ++v)
        CHECK(std::abs(deg[v] - g.degree(v) / 2.0) <= 2.0 + 1e-9);

    Fraction f27 = alpha_fraction(g, 1, 27, 6);
    auto deg27 = subset_degrees(g, f27.edges);
    for (int v = 0; v < g.num_vertices(); ++v)
        CHECK(std::abs(deg27[v] - g.degree(v) / 27.0) <= 6.0 + 1e-9);

    Fraction all = alpha_fraction(g, 1, 1, 0);
    CHECK(all.edges.size() == g.num_edges());
}

TEST_CASE("balanced_orientation: C4 exact, P3 ends off by one") {
    MultiGraph c4 = gen_circulant(4, {1});
    Orientation d = balanced_orientation(c4);
    for (int v = 0; v < 4; ++v) {
        CHECK(d.out_degree(c4, v) == 1);
        CHECK(d.in_degree(c4, v) == 1);
    }
    MultiGraph p3 = load_graph("3 2\n0 1\n1 2\n");
    Orientation dp = balanced_orientation(p3);
    CHECK(balance_defect(p3, dp) == 1);
    CHECK(d.out_degree(p3, 1) >= 0);  // middle vertex balanced
    CHECK(std::abs(dp.out_degree(p3, 1) - dp.in_degree(p3, 1)) == 0);
}

TEST_CASE("balanced_orientation: even-regular circulant is exactly balanced") {
    MultiGraph g = gen_circulant(9, {1, 2});
    Orientation d = balanced_orientation(g);
    for (int v = 0; v < 9; ++v) {
        CHECK(d.out_degree(g, v) == 2);
        CHECK(d.in_degree(g, v) == 2);
    }
}

TEST_CASE("balanced_orientation: random graphs stay within defect 1") {
    for (uint64_t seed = 0; seed < 15; ++seed) {
        MultiGraph g = testutil::random_multigraph(12 + seed % 9, 20 + 3 * seed, seed);
        CHECK(balance_defect(g, balanced_orientation(g)) <= 1);
        CHECK(balance_defect(g, balanced_orientation_seeded(g, seed)) <= 1);
    }
}

TEST_CASE("balanced_arc_strong: two parallel edges, k=1") {
    MultiGraph g = load_graph("2 2\n0 1\n0 1\n");
    auto res = balanced_arc_strong(g, 1, 50, 1);
    CHECK(res.certified);
    CHECK(res.orientation.head[0] != res.orientation.head[1]);
}

TEST_CASE("balanced_arc_strong: circulant C12(1..4) gives certified 4-arc-strong") {
    MultiGraph g = gen_circulant(12, {1, 2, 3, 4});
    auto res = balanced_arc_strong(g, 4, 100, 3);
    CHECK(res.certified);
    CHECK(balance_defect(g, res.orientation) <= 1);
    CHECK(!arc_strong_deficiency(g, res.orientation, 4).has_value());
}

TEST_CASE("balanced_arc_strong: precondition violation reported") {
    MultiGraph c4 = gen_circulant(4, {1});
    CHECK_THROWS_AS(balanced_arc_strong(c4, 2, 50, 1), PreconditionError);
}

TEST_CASE("balanced_arc_strong: odd-degree host still certifies") {
    // 6-edge-connected-ish random regular with odd degree 7
    MultiGraph g = gen_random_regular(16, 7, 9);
    if (edge_connectivity(g) >= 6) {
        auto res = balanced_arc_strong(g, 3, 400, 2);
        CHECK(res.certified);
        CHECK(balance_defect(g, res.orientation) <= 1);
    }
}

TEST_CASE("arc-strong spot check: removing k-1 arcs keeps strong connectivity") {
    MultiGraph g = gen_circulant(10, {1, 2});
    auto res = balanced_arc_strong(g, 2, 100, 5);
    UnitFlow f = make_flow_digraph(g, res.orientation);
    Rng rng(77);
    for (int trial = 0; trial < 25; ++trial) {
        int dead = rng.index(g.num_edges());
        f.set_enabled(dead, false);
        for (int v = 1; v < g.num_vertices(); ++v) {
            CHECK(f.max_flow(0, v, 1) == 1);
            CHECK(f.max_flow(v, 0, 1) == 1);
        }
        f.set_enabled(dead, true);
    }
}

TEST_CASE("pack_arborescences: directed cycle, k=1 and k=2") {
    MultiGraph c5 = gen_circulant(5, {1});
    Orientation d;
    d.head.resize(5);
    for (int e = 0; e < 5; ++e) d.head[e] = (e + 1) % 5;  // e joins e -> e+1
    auto trees = pack_arborescences(c5, d, 0, 1);
    REQUIRE(trees.size() == 1);
    CHECK(trees[0].valid(c5, d));
    CHECK_THROWS_AS(pack_arborescences(c5, d, 0, 2), PreconditionError);
}

TEST_CASE("pack_arborescences: bidirected C5 gives two arc-disjoint trees") {
    MultiGraph g(5);
    std::vector<int> heads;
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        heads.push_back((i + 1) % 5);
        g.add_edge(i, (i + 1) % 5);
        heads.push_back(i);
    }
    Orientation d{heads};
    auto trees = pack_arborescences(g, d, 0, 2);
    REQUIRE(trees.size() == 2);
    for (auto& t : trees) CHECK(t.valid(g, d));
    std::set<int> used;
    for (auto& t : trees)
        for (int v = 0; v < 5; ++v)
            if (v != t.root) CHECK(used.insert(t.enter_edge[v]).second);
}

TEST_CASE("pack_arborescences: seeded digraphs, exact verification") {
    int packed = 0;
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        MultiGraph g = testutil::random_multigraph(8 + seed % 8, 30 + (int)(seed % 20), seed);
        Orientation d = balanced_orientation_seeded(g, seed);
        UnitFlow f = make_flow_digraph(g, d);
        int k = g.num_edges();
        for (int v = 1; v < g.num_vertices(); ++v) k = std::min(k, f.max_flow(0, v, -1));
        if (k < 1) continue;
        auto trees = pack_arborescences(g, d, 0, k);
        ++packed;
        REQUIRE(static_cast<int>(trees.size()) == k);
        std::set<int> used;
        for (auto& t : trees) {
            CHECK(t.valid(g, d));
            for (int v = 0; v < g.num_vertices(); ++v)
                if (v != t.root) CHECK(used.insert(t.enter_edge[v]).second);
        }
    }
    CHECK(packed >= 10);  // the corpus must actually exercise the packer
}
