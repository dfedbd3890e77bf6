#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawchrome/certificates.hpp"
#include "clawchrome/coloring.hpp"
#include "clawchrome/graph.hpp"
#include "clawchrome/multigraph.hpp"

namespace clawchrome {

// Deterministic RNG with our own integer draws; std::mt19937_64 output is
// standardized, so seeded runs are bit-reproducible across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) { next(); }
    uint64_t next();
    int uniform(int lo, int hi);  // inclusive range
    double unit();
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = (int)v.size() - 1; i > 0; --i) std::swap(v[i], v[uniform(0, i)]);
    }

private:
    uint64_t state_;
};

// structured builders
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0

// fixtures with frozen canonical labelings
Graph petersen();
Graph icosahedron();
Coloring icosahedron_four_coloring();  // proper on icosahedron(), 4 colors
Graph w5();                            // cycle 0..4 plus center 5

// L(h): vertex i of the result is edge i of h
struct LineGraphResult {
    Graph graph;
    std::vector<std::pair<int, int>> edge_of_vertex;
};
LineGraphResult line_graph(const Multigraph& h);

// Thickening recipe: blow each base vertex into a clique, complete joins
// along base edges, then delete a nonempty proper subset of the cross edges
// along each matched edge.
struct ThickeningSpec {
    Graph base;
    Matching m;
    std::vector<int> sizes;  // |I(v)| per base vertex, all >= 1
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>>
        removals;  // matched base edge (u<v) -> local (i,j) pairs of I(u) x I(v)
};

struct ThickenResult {
    Graph graph;
    std::vector<std::vector<int>> blob;  // I(v) per base vertex
};
ThickenResult thicken(const ThickeningSpec& spec);

// uniform draw among nonempty proper subsets of I(u) x I(v); needs a*b >= 2
std::vector<std::pair<int, int>> random_removal_subset(Rng& rng, int a, int b);

// Disjoint union of g1 and strip plus complete joins X1 x X2 and Y1 x Y2.
// Strip vertex ids are offset by g1.n() in the result and certificate.
struct ComposeResult {
    Graph graph;
    TwoJoinCert cert;
};
ComposeResult compose_2join(const Graph& g1, const std::vector<int>& x1,
                            const std::vector<int>& y1, const Graph& strip,
                            const std::vector<int>& x2, const std::vector<int>& y2);

// ribbons; role arrays use -1 for removed members
struct AntihatRibbon {
    Graph graph;
    std::vector<int> a, b, c;          // role -> vertex id or -1
    std::vector<int> a_alive, b_alive; // the strip's end cliques
};
// x: role labels to delete, e.g. {"a1","c3"}; throws when the result
// violates the ribbon constraints (fewer than two C survivors, no W5)
AntihatRibbon antihat_ribbon(int k, const std::vector<std::string>& x = {});

struct StrangeRibbon {
    Graph graph;
    std::map<std::string, int> roles;  // a1,a2,b1,b2,b3,c1,c2
    std::vector<int> a_clique, b_clique;
};
StrangeRibbon strange_ribbon();

struct GearRibbon {
    Graph graph;
    std::map<std::string, int> roles;  // v1..v10 (missing = removed)
    std::vector<int> x2, y2;           // {v1,v2}, {v4,v5}
};
GearRibbon gear_ribbon(bool drop_v9 = false, bool drop_v10 = false);

// random families
struct RandomRep {
    Graph graph;
    CircularIntervalRep rep;
};
RandomRep random_circular_interval(int n, int arc_count, int max_arc_len, uint64_t seed);

Graph random_triangle_free(int n, double p, uint64_t seed);
Graph random_graph(int n, double p, uint64_t seed);

enum class ClawFreeFamily { line_of_random, circular_interval, thickened_ribbon,
                            complement_trianglefree };
std::string family_name(ClawFreeFamily f);
std::optional<ClawFreeFamily> family_from_name(const std::string& name);

struct ClawFreeInstance {
    Graph graph;
    ClawFreeFamily family;
    // provenance for the applicable colorer
    std::optional<Multigraph> root;                // line_of_random
    std::optional<CircularIntervalRep> rep;        // circular_interval
    std::optional<ThreeCliquedCert> three_cliqued; // thickened_ribbon
};
// Validated claw-free before emission; throws internal_error on a generator bug.
ClawFreeInstance random_claw_free(int n, ClawFreeFamily family, uint64_t seed);

// Random linear interval host graph for 2-join composition: x1 is a clique
// prefix, y1 a clique suffix, plus a greedy left-to-right coloring that uses
// at most omega colors.
struct LinearHost {
    Graph graph;
    std::vector<int> x1, y1;
    Coloring coloring;
};
LinearHost random_linear_host(int n, int x_size, int y_size, uint64_t seed);

// random composed 2-join instance of the given kind, ready for the extenders
struct ComposedInstance {
    Graph graph;
    TwoJoinCert cert;
    Coloring g1_coloring;  // proper on G1, colors within the Δ2(G)+3 palette
};
ComposedInstance random_composed_two_join(StripKind kind, uint64_t seed);

}  // namespace clawchrome
