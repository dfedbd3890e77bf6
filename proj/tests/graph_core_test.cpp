#include <sstream>

#include "clawchrome/coloring.hpp"
#include "clawchrome/cliques.hpp"
#include "clawchrome/generators.hpp"
#include "clawchrome/io.hpp"
#include "clawchrome/matching.hpp"
#include "clawchrome/params.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace clawchrome;

TEST_CASE("complement basics") {
    CHECK(complete_graph(5).complement().edge_count() == 0);
    Graph p = petersen();
    CHECK(p.complement().complement() == p);
    CHECK(testutil::isomorphic(cycle_graph(5).complement(), cycle_graph(5)));
}

TEST_CASE("codegree") {
    Graph k4 = complete_graph(4);
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) CHECK(codegree(k4, u, v) == 2);
    Graph c5 = cycle_graph(5);
    CHECK(codegree(c5, 0, 2) == 1);
    CHECK_THROWS_AS(codegree(c5, 1, 1), std::invalid_argument);

    Graph lp = line_graph(Multigraph::from_graph(petersen())).graph;
    int maxc = 0;
    for (int u = 0; u < lp.n(); ++u)
        for (int v = u + 1; v < lp.n(); ++v) maxc = std::max(maxc, codegree(lp, u, v));
    CHECK(maxc == 1);  // the Petersen line graph has maximum codegree 1
}

TEST_CASE("delta2 and delta_e") {
    Graph lp = line_graph(Multigraph::from_graph(petersen())).graph;
    CHECK(delta2(lp) == 1);
    CHECK(delta_e(lp) == 1);
    CHECK(delta2(petersen()) == 1);
    CHECK(delta2(complete_graph(7)) == 5);
    CHECK(delta_e(icosahedron()) == 2);
    CHECK(delta_e(petersen()) == 0);
    CHECK(delta_e(path_graph(6)) == 0);
    CHECK(delta_e(Graph(3)) == 0);
    CHECK_THROWS_AS(delta2(Graph(1)), std::invalid_argument);
}

TEST_CASE("anticodegree") {
    Graph k44 = complete_bipartite(4, 4);
    CHECK(anticodegree(k44, 0, 1) == 2);   // same side
    CHECK(anticodegree(k44, 0, 4) == 0);   // opposite sides
    CHECK(max_anticodegree(k44) == 2);     // tight for the matching-cover bound
    Graph kn = complete_graph(6);
    CHECK(anticodegree(kn, 2, 3) == 0);
    CHECK(max_anticodegree(kn) == 0);
    Graph c7 = cycle_graph(7);
    CHECK(anticodegree(c7, 0, 3) == 1);  // distance-3 pair
    CHECK(max_anticodegree(c7) == 3);    // adjacent pairs leave three untouched
    CHECK_THROWS_AS(anticodegree(c7, 2, 2), std::invalid_argument);
}

TEST_CASE("anticodegree equals codegree in the complement") {
    testutil::for_each_labeled_graph(5, [](const Graph& g) {
        Graph comp = g.complement();
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v)
                REQUIRE(anticodegree(g, u, v) == codegree(comp, u, v));
    });
    Rng rng(11);
    for (int t = 0; t < 40; ++t) {
        Graph g = random_graph(rng.uniform(2, 30), rng.unit(), rng.next());
        Graph comp = g.complement();
        for (int u = 0; u < g.n(); ++u)
            for (int v = u + 1; v < g.n(); ++v)
                REQUIRE(anticodegree(g, u, v) == codegree(comp, u, v));
        REQUIRE(max_anticodegree(g) == delta2(comp));
    }
}

TEST_CASE("clique number and independence number") {
    CHECK(clique_number(complete_graph(5)) == 5);
    CHECK(clique_number(cycle_graph(5)) == 2);
    Graph lp = line_graph(Multigraph::from_graph(petersen())).graph;
    CHECK(clique_number(lp) == 3);  // triangles come from the degree-3 stars
    CHECK(independence_number(cycle_graph(5)) == 2);
    CHECK(independence_number(petersen()) == 4);
    CHECK(independence_number(complete_graph(9)) == 1);

    testutil::for_each_labeled_graph(5, [](const Graph& g) {
        REQUIRE(clique_number(g) == testutil::brute_clique_number(g));
    });
    Rng rng(12);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph(rng.uniform(1, 14), rng.unit(), rng.next());
        REQUIRE(clique_number(g) == testutil::brute_clique_number(g));
    }
}

TEST_CASE("maximum matching") {
    CHECK(maximum_matching(cycle_graph(5)).size() == 2);
    Matching pm = maximum_matching(petersen());
    CHECK(pm.size() == 5);  // perfect
    CHECK(pm.validates_on(petersen()));
    CHECK(maximum_matching(Graph(4)).size() == 0);

    testutil::for_each_labeled_graph(5, [](const Graph& g) {
        Matching m = maximum_matching(g);
        REQUIRE(m.validates_on(g));
        REQUIRE(m.size() == testutil::brute_matching_number(g));
    });
    Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        Graph g = random_graph(rng.uniform(1, 12), rng.unit(), rng.next());
        Matching m = maximum_matching(g);
        REQUIRE(m.validates_on(g));
        REQUIRE(m.size() == testutil::brute_matching_number(g));
    }
    // odd structures that need blossom contraction
    for (int t = 0; t < 60; ++t) {
        Graph g = random_graph(rng.uniform(13, 24), 0.12 + 0.2 * rng.unit(), rng.next());
        Matching m = maximum_matching(g);
        REQUIRE(m.validates_on(g));
        REQUIRE(m.size() == testutil::brute_matching_number(g));
    }
}

TEST_CASE("is_proper") {
    Graph ico = icosahedron();
    CHECK(is_proper(ico, icosahedron_four_coloring()).proper);
    Graph k2 = complete_graph(2);
    Coloring bad(2);
    bad.color = {0, 0};
    auto check = is_proper(k2, bad);
    CHECK_FALSE(check.proper);
    CHECK(((check.u == 0 && check.v == 1) || (check.u == 1 && check.v == 0)));
    Graph e(4);
    Coloring mono(4);
    mono.color = {0, 0, 0, 0};
    CHECK(is_proper(e, mono).proper);
    Coloring partial(2);
    partial.color = {0, -1};
    CHECK_THROWS_AS(is_proper(k2, partial), std::invalid_argument);
}

TEST_CASE("cover_to_coloring") {
    // one clique of the complement covers everything: g is edgeless
    Graph g(4);
    CliqueCover one;
    one.parts = {{0, 1, 2, 3}};
    Coloring c = cover_to_coloring(g, one);
    CHECK(c.count_colors() == 1);

    // matching cover of C5 colors the complement of C5 (also a 5-cycle)
    Graph c5 = cycle_graph(5);
    CliqueCover mc;
    mc.parts = {{0, 1}, {2, 3}, {4}};
    Coloring cc = cover_to_coloring(c5.complement(), mc);
    CHECK(cc.count_colors() == 3);
    CHECK(is_proper(c5.complement(), cc).proper);

    CliqueCover singletons;
    for (int v = 0; v < 5; ++v) singletons.parts.push_back({v});
    CHECK(cover_to_coloring(c5, singletons).count_colors() == 5);

    CliqueCover invalid;
    invalid.parts = {{0, 1}, {1, 2}, {3}, {4}};
    CHECK_THROWS_AS(cover_to_coloring(c5, invalid), std::invalid_argument);

    // any validating cover of the complement converts to a proper coloring
    Rng rng(15);
    for (int t = 0; t < 50; ++t) {
        Graph comp = random_triangle_free(rng.uniform(2, 20), rng.unit(), rng.next());
        Graph g = comp.complement();
        Matching m = maximum_matching(comp);
        CliqueCover cover;
        std::vector<bool> used(comp.n(), false);
        for (auto [u, v] : m.edges) {
            cover.parts.push_back({u, v});
            used[u] = used[v] = true;
        }
        for (int v = 0; v < comp.n(); ++v)
            if (!used[v]) cover.parts.push_back({v});
        REQUIRE(cover.validates_on(comp));
        Coloring col = cover_to_coloring(g, cover);
        REQUIRE(is_proper(g, col).proper);
        REQUIRE(col.count_colors() == cover.part_count());
    }
}

TEST_CASE("parameter inequalities, exhaustive small plus random") {
    auto check_one = [](const Graph& g) {
        if (g.n() < 2) return;
        int d2 = delta2(g), de = delta_e(g), w = clique_number(g);
        REQUIRE(de <= d2);
        REQUIRE(w - 2 <= d2);
        if (w >= 2) REQUIRE(w - 2 <= de);
    };
    for (int n = 2; n <= 7; ++n) testutil::for_each_labeled_graph(n, check_one);
    Rng rng(14);
    for (int t = 0; t < 500; ++t) check_one(random_graph(rng.uniform(2, 40), rng.unit(), rng.next()));
    for (int t = 0; t < 200000; ++t) check_one(random_graph(8, rng.unit(), rng.next()));
}

TEST_CASE("edge list and dimacs io") {
    Graph p = petersen();
    std::stringstream ss;
    write_edge_list(ss, p);
    Graph back = read_edge_list(ss);
    CHECK(back == p);

    std::stringstream dim;
    dim << "c a comment\np edge 5 5\n";
    for (int i = 0; i < 5; ++i) dim << "e " << i + 1 << ' ' << (i + 1) % 5 + 1 << '\n';
    Graph c5 = read_dimacs(dim);
    CHECK(c5 == cycle_graph(5));

    std::stringstream multi;
    multi << "3 4\n0 1\n0 1\n2 2\n1 2\n";
    Multigraph h = read_multigraph(multi);
    CHECK(h.edges.size() == 4);
    CHECK(h.underlying_simple().edge_count() == 2);
}
