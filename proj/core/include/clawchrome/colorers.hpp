#pragma once

#include <utility>
#include <vector>

#include "clawchrome/certificates.hpp"
#include "clawchrome/coloring.hpp"
#include "clawchrome/graph.hpp"
#include "clawchrome/multigraph.hpp"
#include "clawchrome/vizing.hpp"

namespace clawchrome {

// One constructive colorer per lemma. Each validates its certificate, colors
// greedily in the order the proof prescribes, and checks its own output for
// properness before returning.

// Line graph of a multigraph: Vizing's fan algorithm on the underlying
// simple part, then loop/parallel vertices appended greedily (never
// recolored). Uses at most delta_e(L(h))+3 <= delta2(L(h))+3 colors.
struct LineGraphColoring {
    Graph line;
    std::vector<std::pair<int, int>> edge_of_vertex;
    Coloring coloring;
};
LineGraphColoring color_line_graph(const Multigraph& h);

// Circular interval list coloring: start at the rightmost vertex of a
// longest arc, sweep rightwards, smallest listed color each time. Needs
// every list of size >= delta2(g)+3.
Coloring color_circular_interval(const Graph& g, const CircularIntervalRep& rep,
                                 const ListAssignment& lists);

// Tighter sweep with lists of size >= delta2(g)+2: anchor the order at a
// rightmost-of-longest vertex whose left neighbor is not one, repair the
// single possible stuck vertex by swapping it with its left neighbor. When
// every vertex is rightmost of a longest arc the graph is a cycle power or a
// clique and a Brooks-style list coloring takes over. The delta_e+2
// comparison is reported, not asserted: odd holes beat it.
struct TightIntervalResult {
    Coloring coloring;
    int colors_used = 0;
    int delta_e_plus_two = 0;
    bool exceeds_delta_e_bound = false;
    bool swap_repaired = false;  // the one stuck vertex traded places with its left neighbor
    bool used_fallback = false;  // every vertex was rightmost of a longest arc
};
TightIntervalResult color_circular_interval_tight(const Graph& g, const CircularIntervalRep& rep,
                                                  const ListAssignment& lists);

// Triangle-free clique cover: maximum matching edges as 2-cliques plus
// unmatched singletons; exactly |V(h)| - m(h) parts.
CliqueCover cover_triangle_free(const Graph& h);

// alpha(g) <= 2: cover the triangle-free complement by a maximum matching;
// at most delta2(g)+2 colors.
Coloring color_alpha2(const Graph& g);

// Prismatic clique cover: peel vertex-disjoint triangles until triangle-free,
// one part per peeled triangle; at most max_anticodegree(h)+2 parts.
CliqueCover cover_prismatic(const Graph& h);

// Antiprismatic coloring through the prismatic complement; <= delta2(g)+2.
Coloring color_antiprismatic(const Graph& g);

// Three-cliqued claw-free coloring: peel the lexicographically least triad,
// recurse, give the triad one fresh color; the tight 6-vertex configuration
// gets the explicit 3-coloring; base case is color_alpha2. At most
// (max codegree within a part)+3 colors.
Coloring color_three_cliqued(const Graph& g, const ThreeCliquedCert& cert);

// Induced subgraph of the icosahedron, given by the embedding map (vertex i
// of g sits on icosahedron vertex embedding[i]). Restricts the stored
// 4-coloring; triangle-free subgraphs get a greedy 3-coloring.
Coloring color_icosahedral(const Graph& g, const std::vector<int>& embedding);

// 2-join extenders: coloring1 is proper on G[v1], total there, with colors
// inside the palette {0..delta2(g)+2}. The extension colors V2 in the
// proof's order and introduces no color outside that palette.
Coloring extend_canonical_interval_2join(const Graph& g, const TwoJoinCert& cert,
                                         const Coloring& coloring1);
Coloring extend_antihat_2join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1);
Coloring extend_strange_2join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1);
Coloring extend_gear_2join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1);
// dispatch on cert.kind
Coloring extend_two_join(const Graph& g, const TwoJoinCert& cert, const Coloring& coloring1);

// Clique-cutset lift: permute piece colors to agree on the cutset; pieces
// follow g.components() order after deleting the cutset, piece i colored on
// component_i ∪ cutset. Uses max_i(piece color count) colors.
Coloring lift_clique_cutset(const Graph& g, const std::vector<int>& cutset,
                            const std::vector<Coloring>& piece_colorings);

// Dominated-vertex extension: y takes the least color absent from N(y);
// stays within any palette of size >= delta2(g)+2.
Coloring extend_dominated(const Graph& g, int x, int y, const Coloring& coloring_minus_y);

}  // namespace clawchrome
