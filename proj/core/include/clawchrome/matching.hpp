#pragma once

#include "clawchrome/coloring.hpp"
#include "clawchrome/graph.hpp"

namespace clawchrome {

// Exact maximum-cardinality matching in a general graph: augmenting paths
// with blossom contraction. Deterministic; the certificate is the edge set.
Matching maximum_matching(const Graph& g);

}  // namespace clawchrome
