#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "clawchrome/graph.hpp"

namespace clawchrome {

// A found configuration, re-checkable against the host graph.
struct ClassWitness {
    std::string kind;           // claw | triad | triangle | clique-cutset |
                                // dominated-pair | mixed-vertex
    std::vector<int> vertices;  // instantiation in the host graph
};

// Claw = induced K_{1,3}. Witness vertices: {center, leaf, leaf, leaf}.
// Returns nothing iff g is claw-free.
std::optional<ClassWitness> find_claw(const Graph& g);

// Triad = independent set of size 3. Nothing iff alpha(g) <= 2.
std::optional<ClassWitness> find_triad(const Graph& g);

bool is_triangle_free(const Graph& g);
std::optional<ClassWitness> find_triangle(const Graph& g);

struct QuasiLineCheck {
    bool quasi_line = true;
    int vertex = -1;             // vertex whose neighborhood fails
    std::vector<int> odd_cycle;  // odd cycle in the complement of its neighborhood
};

// Quasi-line: every neighborhood splits into two cliques, i.e. for every v
// the complement of G[N(v)] is bipartite.
QuasiLineCheck is_quasi_line(const Graph& g);

struct PrismaticCheck {
    bool prismatic = true;
    std::array<int, 3> triangle{-1, -1, -1};
    int vertex = -1;
    int adjacency_count = -1;  // how many triangle vertices `vertex` sees
};

// Prismatic: every vertex outside a triangle has exactly one neighbor in it.
PrismaticCheck is_prismatic(const Graph& g);

// Antiprismatic: {K_{1,3}, 2K_1 + K_2, 4K_1}-free; equals
// is_prismatic(complement(g)).
bool is_antiprismatic(const Graph& g);

struct CliqueCutsetResult {
    enum class Status { found, none, not_attempted };
    Status status = Status::none;
    std::vector<int> cutset;
};

// Minimal-separator search (Berry–Bordat–Cogis expansion) testing each for
// cliqueness. Capped at n <= 64; beyond that reports not_attempted.
// Requires a connected input.
CliqueCutsetResult find_clique_cutset(const Graph& g);

// (x, y) with N(y) ⊆ N[x], x != y. With require_adjacent only adjacent
// pairs qualify (the edge-codegree variant).
std::optional<std::pair<int, int>> find_dominated_pair(const Graph& g, bool require_adjacent);

// W5 (a 5-wheel) as a subgraph: some vertex with a 5-cycle through its
// neighborhood. Used by the antihat ribbon gate.
bool contains_w5_subgraph(const Graph& g);

// re-check a witness against the host graph
bool witness_validates(const Graph& g, const ClassWitness& w);

}  // namespace clawchrome
