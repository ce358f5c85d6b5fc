#pragma once

#include <string>
#include <string_view>

#include "arrowlab/arrowing.hpp"
#include "arrowlab/gadget.hpp"
#include "arrowlab/graph.hpp"

namespace arrowlab {

// Graph text format:
//   # optional comment lines
//   p graph <n> <m>
//   e <u> <v>            (exactly m lines, 0-based, u != v, no duplicates)
// Marked graphs add `me <label> <a> <b>` and `mv <label> <v>` lines after the
// header. parse_graph accepts a marked graph and drops its marks. Input whose
// first non-blank character is '{' is read as JSON: {"n": 3, "edges": [[0,1]]}.
Graph parse_graph(std::string_view text);
MarkedGraph parse_marked_graph(std::string_view text);

std::string write_graph(const Graph& g);
std::string write_marked_graph(const MarkedGraph& m);
std::string write_graph_json(const Graph& g);

// Colouring format: one `c <edge-index> <0|1>` line per edge, 0 = red.
// parse_partial_coloring allows a subset of the edges.
EdgeColoring parse_coloring(std::string_view text, std::size_t edge_count);
PartialColoring parse_partial_coloring(std::string_view text, std::size_t edge_count);
std::string write_coloring(const EdgeColoring& c);

// Compact "RBRB" rendering used in reports.
std::string coloring_string(const EdgeColoring& c);

}  // namespace arrowlab
