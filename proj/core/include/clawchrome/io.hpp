#pragma once

#include <iosfwd>
#include <string>

#include "clawchrome/graph.hpp"
#include "clawchrome/multigraph.hpp"

namespace clawchrome {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// DIMACS .col: "p edge n m", edges "e u v" 1-based, "c" comments.
Graph read_dimacs(std::istream& in);

// Same as edge-list but repeated and self lines are kept.
Multigraph read_multigraph(std::istream& in);
void write_multigraph(std::ostream& out, const Multigraph& h);

// Dispatch by content: DIMACS when the first meaningful line starts with
// 'p' or 'c', edge-list otherwise.
Graph read_graph_auto(std::istream& in);
Graph read_graph_file(const std::string& path);
Multigraph read_multigraph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace clawchrome
