#pragma once

#include "clawchrome/graph.hpp"

namespace clawchrome {

// |N(u) ∩ N(v)| for distinct u, v
int codegree(const Graph& g, int u, int v);

// max codegree over all unordered pairs; requires n >= 2
int delta2(const Graph& g);

// max codegree over adjacent pairs, i.e. the largest number of triangles
// through a common edge; 0 when there are no edges
int delta_e(const Graph& g);

// vertices adjacent to neither u nor v (excluding u, v themselves);
// equals codegree(complement(g), u, v)
int anticodegree(const Graph& g, int u, int v);

// max anticodegree over all pairs = delta2(complement(g)); requires n >= 2
int max_anticodegree(const Graph& g);

}  // namespace clawchrome
