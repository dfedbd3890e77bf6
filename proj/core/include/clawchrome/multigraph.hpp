#pragma once

#include <utility>
#include <vector>

#include "clawchrome/graph.hpp"

namespace clawchrome {

// Undirected multigraph: an edge multiset over vertex ids, loops allowed.
// Edge order is the identity used by the line-graph vertex mapping.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // stored with u <= v

    Multigraph() = default;
    explicit Multigraph(int n_) : n(n_) {}

    void add_edge(int u, int v);
    int max_degree() const;  // loops count twice, the usual multigraph convention

    // simple graph on the same vertices: loops dropped, parallels collapsed
    Graph underlying_simple() const;
    static Multigraph from_graph(const Graph& g);
};

}  // namespace clawchrome
