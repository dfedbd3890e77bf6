#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "clawchrome/graph.hpp"

namespace clawchrome {

// Vertex coloring, possibly partial during extension. -1 means uncolored.
// Color indices are 0-based; "smallest available color" is minimum index.
struct Coloring {
    std::vector<int> color;

    Coloring() = default;
    explicit Coloring(int n) : color(n, -1) {}

    int n() const { return (int)color.size(); }
    bool total() const;
    int count_colors() const;  // distinct colors among colored vertices
    int max_color() const;     // -1 if nothing colored
};

struct ProperCheck {
    bool proper = true;
    int u = -1, v = -1;  // a monochromatic edge when !proper
};

// throws std::invalid_argument when c is not total on g
ProperCheck is_proper(const Graph& g, const Coloring& c);

// Partition of V into cliques. Part index doubles as a color in the
// complement view.
struct CliqueCover {
    std::vector<std::vector<int>> parts;

    int part_count() const { return (int)parts.size(); }
    // pairwise disjoint, union V(g), each part a clique of g
    bool validates_on(const Graph& g) const;
};

// cover must be a clique cover of complement(g); each part becomes one color
// class of g. Throws std::invalid_argument on an invalid cover.
Coloring cover_to_coloring(const Graph& g, const CliqueCover& cover_of_complement);

// Pairwise disjoint edges of the host graph.
struct Matching {
    std::vector<std::pair<int, int>> edges;

    int size() const { return (int)edges.size(); }
    bool validates_on(const Graph& g) const;
};

// Per-vertex color lists for the list-coloring routines.
struct ListAssignment {
    std::vector<std::vector<int>> lists;

    int n() const { return (int)lists.size(); }
    int min_list_size() const;
    static ListAssignment uniform(int n, int k);  // every list {0..k-1}
};

}  // namespace clawchrome
