#pragma once

#include <utility>
#include <vector>

#include "clawchrome/bits.hpp"

namespace clawchrome {

// Simple undirected graph on dense vertex ids 0..n-1. Adjacency is kept as
// one bitset row per vertex; rows stay symmetric and irreflexive. Values are
// treated as immutable once built, so they are safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const { return m_; }

    void add_edge(int u, int v);     // throws on loops / out-of-range ids
    void remove_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj_[u].test(v); }

    const Bits& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return adj_[u].count(); }
    int max_degree() const;

    // edges as (u,v) with u < v, lexicographic
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;

    // subgraph induced by verts; vertex i of the result is verts[i]
    Graph induced(const std::vector<int>& verts) const;

    bool is_connected() const;
    // vertex sets of connected components of the subgraph induced by `alive`,
    // each sorted; components ordered by smallest member
    std::vector<std::vector<int>> components(const Bits& alive) const;
    std::vector<std::vector<int>> components() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    void check_vertex(int v) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<Bits> adj_;
};

Bits full_set(int n);
bool is_clique(const Graph& g, const std::vector<int>& verts);
bool is_independent_set(const Graph& g, const std::vector<int>& verts);

}  // namespace clawchrome
