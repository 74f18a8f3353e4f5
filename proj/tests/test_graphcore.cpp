#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "pathcut/connectivity.hpp"
#include "pathcut/errors.hpp"
#include "pathcut/generators.hpp"
#include "pathcut/maxcut.hpp"
#include "pathcut/multigraph.hpp"
#include "testutil.hpp"

using namespace pathcut;

TEST_CASE("load_graph: triangle") {
    MultiGraph g = load_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    for (int v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
    CHECK(g.consistent());
}

TEST_CASE("load_graph: parallel edges") {
    MultiGraph g = load_graph("2 2\n0 1\n0 1\n");
    CHECK(g.num_edges() == 2);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("load_graph: loop rejected with line number") {
    CHECK_THROWS_WITH_AS(load_graph("2 1\n0 0\n"), doctest::Contains("line 2"), PreconditionError);
}

TEST_CASE("load_graph: comments, sparse labels, round trip") {
    MultiGraph g = load_graph("# header\n3 2\n10 20\n20 30 # trailing\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.label(0) == 10);
    CHECK(g.label(1) == 20);
    CHECK(g.label(2) == 30);
    MultiGraph h = load_graph(save_graph(g));
    CHECK(h.num_edges() == 2);
    CHECK(h.label(2) == 30);
}

TEST_CASE("load_graph: malformed inputs") {
    CHECK_THROWS_AS(load_graph(""), PreconditionError);
    CHECK_THROWS_AS(load_graph("2 2\n0 1\n"), PreconditionError);      // missing edge
    CHECK_THROWS_AS(load_graph("2 1\n0 1\n0 1\n"), PreconditionError); // extra edge
    CHECK_THROWS_AS(load_graph("1 1\n0 1\n"), PreconditionError);      // too many labels
}

TEST_CASE("edge_connectivity: cycle, path, circulant") {
    MultiGraph c5 = gen_circulant(5, {1});
    CHECK(edge_connectivity(c5) == 2);

    MultiGraph p3 = load_graph("3 2\n0 1\n1 2\n");
    CHECK(edge_connectivity(p3) == 1);

    // vertex-transitive: edge connectivity equals degree
    MultiGraph c20 = gen_circulant(20, {1, 2, 3, 4});
    CHECK(edge_connectivity(c20) == 8);
}

TEST_CASE("edge_connectivity agrees with all-cuts enumeration on small graphs") {
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        MultiGraph g = testutil::random_multigraph(3 + seed % 8, 4 + seed % 12, seed);
        if (g.num_vertices() > 10) continue;
        CHECK(edge_connectivity(g) == edge_connectivity_brute(g));
    }
}

TEST_CASE("edge_connectivity: disconnected graph is 0") {
    MultiGraph g = load_graph("4 2\n0 1\n2 3\n");
    CHECK(edge_connectivity(g) == 0);
}

TEST_CASE("locally_max_cut: K4 gives |F| = 4 and half-degree everywhere") {
    MultiGraph k4 = load_graph("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    Cut cut = locally_max_cut(k4, 7);
    CHECK(cut.cross.size() == 4);
    auto deg = subset_degrees(k4, [&] {
        EdgeSet s(k4.num_edges());
        for (int e : cut.cross) s.insert(e);
        return s;
    }());
    for (int v = 0; v < 4; ++v) CHECK(deg[v] >= 2);
}

TEST_CASE("locally_max_cut: C6 every cross-degree >= 1") {
    MultiGraph c6 = gen_circulant(6, {1});
    Cut cut = locally_max_cut(c6, 3);
    EdgeSet f(c6.num_edges());
    for (int e : cut.cross) f.insert(e);
    auto deg = subset_degrees(c6, f);
    for (int v = 0; v < 6; ++v) CHECK(deg[v] >= 1);
}

TEST_CASE("locally_max_cut: C30(1..12), cross-degree >= ceil(d/2) for 10 seeds") {
    std::vector<int> offs;
    for (int s = 1; s <= 12; ++s) offs.push_back(s);
    MultiGraph g = gen_circulant(30, offs);
    for (uint64_t seed = 1; seed <= 10; ++seed) {
        Cut cut = locally_max_cut(g, seed);
        EdgeSet f(g.num_edges());
        for (int e : cut.cross) f.insert(e);
        auto deg = subset_degrees(g, f);
        for (int v = 0; v < g.num_vertices(); ++v) {
            CHECK(deg[v] >= (g.degree(v) + 1) / 2);
        }
    }
}

TEST_CASE("induced_cross_graph: bipartite by construction, degenerate cut empty") {
    MultiGraph g = testutil::random_multigraph(12, 30, 99);
    Cut cut = locally_max_cut(g, 5);
    MultiGraph gf = induced_cross_graph(g, cut);
    for (int e = 0; e < gf.num_edges(); ++e) {
        auto [u, v] = gf.ends(e);
        CHECK(cut.side[u] != cut.side[v]);
    }
    Cut degenerate;
    degenerate.side.assign(g.num_vertices(), 0);
    MultiGraph empty = induced_cross_graph(g, degenerate);
    CHECK(empty.num_edges() == 0);
}

TEST_CASE("C6 alternating split keeps all of C6") {
    MultiGraph c6 = gen_circulant(6, {1});
    Cut cut;
    cut.side = {0, 1, 0, 1, 0, 1};
    for (int e = 0; e < 6; ++e) cut.cross.push_back(e);
    MultiGraph gf = induced_cross_graph(c6, cut);
    CHECK(gf.num_edges() == 6);
}

TEST_CASE("degree sum identity on random multigraphs") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        MultiGraph g = testutil::random_multigraph(5 + seed % 20, 3 + 2 * seed, 1000 + seed);
        CHECK(g.consistent());
        long long total = 0;
        for (int v = 0; v < g.num_vertices(); ++v) total += g.degree(v);
        CHECK(total == 2LL * g.num_edges());
    }
}

TEST_CASE("bridges: path has them, cycles do not") {
    MultiGraph p = load_graph("4 3\n0 1\n1 2\n2 3\n");
    CHECK(bridges(p).size() == 3);
    CHECK(!is_two_edge_connected(p));
    MultiGraph c = gen_circulant(7, {1});
    CHECK(bridges(c).empty());
    CHECK(is_two_edge_connected(c));
    // parallel pair is not a bridge
    MultiGraph pp = load_graph("2 2\n0 1\n0 1\n");
    CHECK(bridges(pp).empty());
}
