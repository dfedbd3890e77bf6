#pragma once

#include <map>
#include <string>
#include <vector>

#include "clawchrome/coloring.hpp"
#include "clawchrome/graph.hpp"

namespace clawchrome {

// Circular interval representation: a cyclic vertex order plus arcs given as
// [lo, hi] position ranges (hi may wrap past position n-1). Two vertices are
// adjacent iff some arc contains both. The arc family is treated as closed
// under sub-arcs and as containing every singleton, so neither needs to be
// stored explicitly.
struct CircularIntervalRep {
    std::vector<int> order;                    // position -> vertex id
    std::vector<std::pair<int, int>> arcs;     // inclusive position ranges

    int n() const { return (int)order.size(); }
    int arc_length(size_t i) const;            // in [1, n]
    Graph build_graph() const;
    bool matches(const Graph& g) const;
    // positions covered by some arc of exactly this length ending there
    std::vector<bool> rightmost_of_length(int len) const;
    int longest_arc() const;
};

enum class StripKind { canonical_interval, antihat, strange, gear };

std::string strip_kind_name(StripKind k);
StripKind strip_kind_from_name(const std::string& name);

// Generalized 2-join certificate: (V1, V2) partition V(G); X1,Y1 ⊆ V1 and
// X2,Y2 ⊆ V2 are cliques; X1∪X2 and Y1∪Y2 are cliques and carry all edges
// between the sides. strip_data pins the ribbon labeling of G[V2]:
//   canonical-interval: data.order = V2 left-to-right (X2 prefix, Y2 suffix)
//   antihat:            data.a/b/c = role arrays, -1 for removed members
//   strange:            data.roles = {a1,a2,b1,b2,b3,c1,c2}
//   gear:               data.roles = {v1..v10}, v9/v10 may be -1
struct TwoJoinCert {
    std::vector<int> v1, v2;
    std::vector<int> x1, y1, x2, y2;
    StripKind kind = StripKind::canonical_interval;

    std::vector<int> order;                 // canonical-interval
    std::vector<int> a, b, c;               // antihat
    std::map<std::string, int> roles;       // strange / gear

    // partition / clique / no-stray-edge checks only
    void validate_structure(const Graph& g) const;
    // throws invalid_certificate with a reason when the labeling does not
    // instantiate the ribbon adjacency in g
    void validate(const Graph& g) const;
};

// Partition of V(G) into three cliques (parts may be empty).
struct ThreeCliquedCert {
    std::vector<int> k1, k2, k3;

    void validate(const Graph& g) const;  // throws invalid_certificate
};

// JSON codecs for the external certificate schemas.
CircularIntervalRep rep_from_json(const std::string& text);
std::string rep_to_json(const CircularIntervalRep& rep);
TwoJoinCert two_join_from_json(const std::string& text);
std::string two_join_to_json(const TwoJoinCert& cert);
ThreeCliquedCert three_cliqued_from_json(const std::string& text);
std::string three_cliqued_to_json(const ThreeCliquedCert& cert);

Coloring coloring_from_json(const std::string& text, int n);
std::string coloring_to_json(const Coloring& c);

ListAssignment lists_from_json(const std::string& text, int n);
std::string lists_to_json(const ListAssignment& lists);

}  // namespace clawchrome
