#include "clawchrome/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace clawchrome {

void Multigraph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("multigraph: edge endpoint out of range");
    if (u > v) std::swap(u, v);
    edges.emplace_back(u, v);
}

int Multigraph::max_degree() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        deg[u]++;
        deg[v]++;
    }
    int d = 0;
    for (int x : deg) d = std::max(d, x);
    return d;
}

Graph Multigraph::underlying_simple() const {
    Graph g(n);
    for (auto [u, v] : edges)
        if (u != v) g.add_edge(u, v);
    return g;
}

Multigraph Multigraph::from_graph(const Graph& g) {
    Multigraph h(g.n());
    for (auto [u, v] : g.edges()) h.add_edge(u, v);
    return h;
}

}  // namespace clawchrome
