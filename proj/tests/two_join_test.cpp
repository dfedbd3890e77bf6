#include <algorithm>

#include "clawchrome/colorers.hpp"
#include "clawchrome/errors.hpp"
#include "clawchrome/generators.hpp"
#include "clawchrome/oracle.hpp"
#include "clawchrome/params.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace clawchrome;

namespace {

void check_extension(const ComposedInstance& inst, const Coloring& full) {
    REQUIRE(is_proper(inst.graph, full).proper);
    int palette = delta2(inst.graph) + 3;
    for (int v = 0; v < inst.graph.n(); ++v) {
        REQUIRE(full.color[v] >= 0);
        REQUIRE(full.color[v] < palette);  // no colors beyond the G1 palette
    }
    // V1 keeps its original colors
    for (int v : inst.cert.v1) REQUIRE(full.color[v] == inst.g1_coloring.color[v]);
}

}  // namespace

TEST_CASE("canonical interval 2-join extension") {
    // minimal strip: singleton ends and one middle vertex
    Graph g1 = complete_graph(3);
    Graph strip = path_graph(3);
    auto comp = compose_2join(g1, {0}, {1}, strip, {0}, {2});
    comp.cert.kind = StripKind::canonical_interval;
    comp.cert.order = {3, 4, 5};
    Coloring c1(comp.graph.n());
    c1.color = {0, 1, 2, -1, -1, -1};
    auto full = extend_canonical_interval_2join(comp.graph, comp.cert, c1);
    CHECK(is_proper(comp.graph, full).proper);
    int palette = delta2(comp.graph) + 3;
    for (int v = 0; v < comp.graph.n(); ++v) CHECK(full.color[v] < palette);

    Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        auto inst = random_composed_two_join(StripKind::canonical_interval, rng.next());
        auto ext = extend_canonical_interval_2join(inst.graph, inst.cert, inst.g1_coloring);
        check_extension(inst, ext);
    }
}

TEST_CASE("antihat 2-join extension") {
    // k=3, X empty, G1 a clique joined at X1, Y1
    Graph g1 = complete_graph(4);
    auto ribbon = antihat_ribbon(3);
    auto comp = compose_2join(g1, {0, 1}, {2, 3}, ribbon.graph, ribbon.a_alive, ribbon.b_alive);
    comp.cert.kind = StripKind::antihat;
    auto shift = [&](std::vector<int> roles) {
        for (int& v : roles)
            if (v >= 0) v += g1.n();
        return roles;
    };
    comp.cert.a = shift(ribbon.a);
    comp.cert.b = shift(ribbon.b);
    comp.cert.c = shift(ribbon.c);
    Coloring c1(comp.graph.n());
    c1.color.assign(comp.graph.n(), -1);
    for (int v = 0; v < 4; ++v) c1.color[v] = v;
    auto full = extend_antihat_2join(comp.graph, comp.cert, c1);
    CHECK(is_proper(comp.graph, full).proper);
    // the anchor pair a_i, c_i shares a color
    bool anchored = false;
    for (int i = 0; i < 3; ++i)
        if (comp.cert.a[i] >= 0 && comp.cert.c[i] >= 0)
            anchored |= full.color[comp.cert.a[i]] == full.color[comp.cert.c[i]];
    CHECK(anchored);

    // k=4 with one c removed still extends
    auto r4 = antihat_ribbon(4, {"c2"});
    auto comp4 = compose_2join(g1, {0, 1}, {2, 3}, r4.graph, r4.a_alive, r4.b_alive);
    comp4.cert.kind = StripKind::antihat;
    comp4.cert.a = shift(r4.a);
    comp4.cert.b = shift(r4.b);
    comp4.cert.c = shift(r4.c);
    Coloring c14(comp4.graph.n());
    for (int v = 0; v < 4; ++v) c14.color[v] = v;
    auto full4 = extend_antihat_2join(comp4.graph, comp4.cert, c14);
    CHECK(is_proper(comp4.graph, full4).proper);

    Rng rng(72);
    for (int t = 0; t < 30; ++t) {
        auto inst = random_composed_two_join(StripKind::antihat, rng.next());
        auto ext = extend_antihat_2join(inst.graph, inst.cert, inst.g1_coloring);
        check_extension(inst, ext);
    }
}

TEST_CASE("strange 2-join extension") {
    // minimal host: two cliques X1, Y1 only
    Graph g1(3);
    g1.add_edge(0, 1);
    auto ribbon = strange_ribbon();
    auto comp = compose_2join(g1, {0, 1}, {2}, ribbon.graph, ribbon.a_clique, ribbon.b_clique);
    comp.cert.kind = StripKind::strange;
    for (auto& [nm, v] : ribbon.roles) comp.cert.roles[nm] = v + 3;
    Coloring c1(comp.graph.n());
    c1.color = {0, 1, 0, -1, -1, -1, -1, -1, -1, -1};
    auto full = extend_strange_2join(comp.graph, comp.cert, c1);
    CHECK(is_proper(comp.graph, full).proper);
    // c1's four neighbors leave it a color inside the palette
    int c1v = comp.cert.roles.at("c1");
    CHECK(comp.graph.degree(c1v) == 4);
    CHECK(full.color[c1v] < delta2(comp.graph) + 3);

    Rng rng(73);
    for (int t = 0; t < 30; ++t) {
        auto inst = random_composed_two_join(StripKind::strange, rng.next());
        auto ext = extend_strange_2join(inst.graph, inst.cert, inst.g1_coloring);
        check_extension(inst, ext);
    }
}

TEST_CASE("gear 2-join extension") {
    Rng rng(74);
    bool saw_full_core = false, saw_v9v10 = false;
    for (int t = 0; t < 40; ++t) {
        auto inst = random_composed_two_join(StripKind::gear, rng.next());
        auto ext = extend_gear_2join(inst.graph, inst.cert, inst.g1_coloring);
        check_extension(inst, ext);

        auto role = [&](int i) {
            auto it = inst.cert.roles.find("v" + std::to_string(i));
            return it == inst.cert.roles.end() ? -1 : it->second;
        };
        // the copy pattern of the proof
        CHECK(ext.color[role(3)] == ext.color[role(5)]);
        CHECK(ext.color[role(6)] == ext.color[role(2)]);
        CHECK(ext.color[role(7)] == ext.color[role(4)]);
        CHECK(ext.color[role(8)] == ext.color[role(1)]);
        // v1, v2, v4, v5 pairwise distinct
        std::vector<int> four = {ext.color[role(1)], ext.color[role(2)], ext.color[role(4)],
                                 ext.color[role(5)]};
        std::sort(four.begin(), four.end());
        CHECK(std::unique(four.begin(), four.end()) == four.end());

        if (role(9) < 0 && role(10) < 0) saw_full_core = true;
        if (role(9) >= 0 && role(10) >= 0) saw_v9v10 = true;
    }
    CHECK(saw_full_core);
    CHECK(saw_v9v10);
}

TEST_CASE("extender error paths") {
    Rng rng(75);
    auto inst = random_composed_two_join(StripKind::strange, rng.next());

    // wrong kind
    CHECK_THROWS_AS(extend_gear_2join(inst.graph, inst.cert, inst.g1_coloring),
                    invalid_certificate);

    // improper coloring1
    Coloring bad = inst.g1_coloring;
    bool broke = false;
    for (auto [u, v] : inst.graph.edges())
        if (bad.color[u] >= 0 && bad.color[v] >= 0) {
            bad.color[u] = bad.color[v];
            broke = true;
            break;
        }
    REQUIRE(broke);
    CHECK_THROWS_WITH_AS(extend_strange_2join(inst.graph, inst.cert, bad),
                         doctest::Contains("improper"), std::invalid_argument);

    // palette overflow
    Coloring high = inst.g1_coloring;
    for (int& c : high.color)
        if (c >= 0) c += delta2(inst.graph) + 3;
    CHECK_THROWS_WITH_AS(extend_strange_2join(inst.graph, inst.cert, high),
                         doctest::Contains("insufficient palette"), std::invalid_argument);

    // tampered ribbon adjacency
    auto broken = inst;
    broken.graph.remove_edge(broken.cert.roles.at("c1"), broken.cert.roles.at("c2"));
    CHECK_THROWS_AS(extend_strange_2join(broken.graph, broken.cert, broken.g1_coloring),
                    invalid_certificate);
}

TEST_CASE("tampered certificates are refused, never best-effort colored") {
    Rng rng(77);
    int refusals = 0;
    for (int t = 0; t < 60; ++t) {
        auto kind = std::array{StripKind::canonical_interval, StripKind::antihat,
                               StripKind::strange, StripKind::gear}[t % 4];
        auto inst = random_composed_two_join(kind, rng.next());
        Graph g = inst.graph;
        TwoJoinCert cert = inst.cert;
        // random structural mutation
        int mode = rng.uniform(0, 3);
        if (mode == 0) {
            // toggle a random edge inside G2
            int a = cert.v2[rng.uniform(0, (int)cert.v2.size() - 1)];
            int b = cert.v2[rng.uniform(0, (int)cert.v2.size() - 1)];
            if (a == b) continue;
            if (g.has_edge(a, b))
                g.remove_edge(a, b);
            else
                g.add_edge(a, b);
        } else if (mode == 1) {
            // stray edge across the sides
            int a = cert.v1[rng.uniform(0, (int)cert.v1.size() - 1)];
            int b = cert.v2[rng.uniform(0, (int)cert.v2.size() - 1)];
            if (g.has_edge(a, b)) continue;
            g.add_edge(a, b);
        } else if (mode == 2) {
            // move a vertex across the partition
            if (cert.v1.size() < 2) continue;
            cert.v2.push_back(cert.v1.back());
            cert.v1.pop_back();
        } else {
            // shrink x2 so it no longer matches the roles
            if (cert.x2.size() < 2) continue;
            cert.x2.pop_back();
        }
        Coloring c1(g.n());
        for (int v : cert.v1) c1.color[v] = inst.g1_coloring.color[v];
        try {
            extend_two_join(g, cert, c1);
        } catch (const std::invalid_argument&) {  // includes invalid_certificate
            ++refusals;
            continue;
        }
        // a mutation that happens to produce another valid instance is fine,
        // but silent acceptance of a broken one is not
        REQUIRE_NOTHROW(cert.validate(g));
    }
    CHECK(refusals > 40);
}

TEST_CASE("oracle agrees composed graphs stay within delta2+3") {
    Rng rng(76);
    for (auto kind : {StripKind::canonical_interval, StripKind::antihat, StripKind::strange,
                      StripKind::gear})
        for (int t = 0; t < 6; ++t) {
            auto inst = random_composed_two_join(kind, rng.next());
            if (inst.graph.n() > 20) continue;
            auto chi = chromatic_number(inst.graph);
            REQUIRE(chi.known);
            REQUIRE(chi.chi <= delta2(inst.graph) + 3);
        }
}
