#pragma once

#include <utility>
#include <vector>

#include "clawchrome/graph.hpp"

namespace clawchrome {

struct EdgeColoring {
    std::vector<std::pair<int, int>> edges;  // host edge list, (u,v) with u < v
    std::vector<int> color;                  // per edge, 0-based

    int colors_used() const;
    bool proper_on(const Graph& g) const;  // incident edges get distinct colors
};

// Constructive Vizing: Misra–Gries fan rotation with cd-path inversion.
// Proper edge coloring of a simple graph with at most Δ(h)+1 colors.
EdgeColoring vizing_edge_color(const Graph& h);

}  // namespace clawchrome
