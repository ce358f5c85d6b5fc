#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "arrowlab/graph.hpp"

namespace arrowlab {

// Ordered pair (first, second) naming an existing edge. Orientation decides
// which endpoints are glued together by edge_join and self_identify.
struct MarkedEdge {
  Vertex first = 0;
  Vertex second = 0;

  auto operator<=>(const MarkedEdge&) const = default;
};

// A graph with named distinguished edges and vertices: signal edges of
// senders and determiners, the endpoints used by the chain construction and
// the far-apart pair (u, v).
class MarkedGraph {
 public:
  MarkedGraph() = default;
  explicit MarkedGraph(Graph graph) : graph_(std::move(graph)) {}

  const Graph& graph() const { return graph_; }
  const std::map<std::string, MarkedEdge, std::less<>>& marked_edges() const { return edges_; }
  const std::map<std::string, Vertex, std::less<>>& marked_vertices() const { return vertices_; }

  // Throws InvalidArgument if (a, b) is not an edge.
  MarkedGraph& mark_edge(std::string label, Vertex a, Vertex b);
  // Throws OutOfRange if v is not a vertex.
  MarkedGraph& mark_vertex(std::string label, Vertex v);

  bool has_edge_mark(std::string_view label) const { return edges_.contains(label); }
  bool has_vertex_mark(std::string_view label) const { return vertices_.contains(label); }
  // Throw InvalidArgument for unknown labels.
  MarkedEdge edge_mark(std::string_view label) const;
  Vertex vertex_mark(std::string_view label) const;
  std::size_t edge_mark_index(std::string_view label) const;

  bool operator==(const MarkedGraph&) const = default;

 private:
  Graph graph_;
  std::map<std::string, MarkedEdge, std::less<>> edges_;
  std::map<std::string, Vertex, std::less<>> vertices_;
};

// Result of a gluing operation. `collapsed_edges` counts edges that became
// parallel to an existing edge and were merged.
struct GluedGraph {
  MarkedGraph graph;
  VertexMap left;   // left operand (or the only operand) -> result
  VertexMap right;  // right operand -> result; empty for self_identify
  std::size_t collapsed_edges = 0;
};

// G(a,b) (+) (c,d)H: a is glued onto c and b onto d. Surviving vertices of G
// come first (in order), then H's vertices. Marks of G are carried as
// "l.<label>", marks of H as "r.<label>".
GluedGraph edge_join(const MarkedGraph& left, std::string_view left_edge,
                     const MarkedGraph& right, std::string_view right_edge);

// G[(a,b) ~ (a',b')]: merges a' into a and b' into b. The two edges must be
// distinct and vertex-disjoint. Each block is represented by its smaller
// vertex, then vertices are renumbered to an initial segment. Marks keep their
// labels.
GluedGraph self_identify(const MarkedGraph& g, std::string_view first_edge,
                         std::string_view second_edge);

// Chain of `copies` (odd) copies of a sender marked e = (a, u), f = (b, v):
// f of copy i is glued onto e of copy i+1 (b_i -> a_{i+1}, v_i -> u_{i+1}).
// The result is marked e (= e_1), f (= f_copies) and vertices a<i>, b<i>,
// u<i>, v<i> for i = 1..copies.
MarkedGraph chain_senders(const MarkedGraph& sender, std::size_t copies);

// Which copy's a-vertex becomes v when closing a chain of 2n+1 links.
enum class FarVertexChoice {
  kMiddleCopy,  // a_{n+1}
  kCopyN,       // a_n
};

// Closes a chain of 2n+1 links by identifying e_1 with f_{2n+1}
// (a_1 -> b_{2n+1}, u_1 -> v_{2n+1}) and marks u = [a_1], v = [a_{n+1}] (or
// [a_n]). Chain marks carried through.
MarkedGraph close_chain(const MarkedGraph& chain, std::size_t n,
                        FarVertexChoice choice = FarVertexChoice::kMiddleCopy);

}  // namespace arrowlab
