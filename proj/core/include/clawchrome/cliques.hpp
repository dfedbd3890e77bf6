#pragma once

#include <functional>
#include <vector>

#include "clawchrome/graph.hpp"

namespace clawchrome {

// Progress hook for long searches: called with nodes explored so far.
using ProgressFn = std::function<void(uint64_t nodes)>;

// Exact clique number by branch and bound with a greedy-coloring bound.
// Intended for desk scale (n up to ~60); emits progress beyond that.
int clique_number(const Graph& g, const ProgressFn& progress = nullptr);

// omega(complement(g))
int independence_number(const Graph& g, const ProgressFn& progress = nullptr);

// a concrete maximum clique, vertices sorted
std::vector<int> maximum_clique(const Graph& g, const ProgressFn& progress = nullptr);

}  // namespace clawchrome
