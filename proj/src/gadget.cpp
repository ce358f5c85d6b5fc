#include "arrowlab/gadget.hpp"

#include <algorithm>
#include <set>

#include "arrowlab/errors.hpp"

namespace arrowlab {

MarkedGraph& MarkedGraph::mark_edge(std::string label, Vertex a, Vertex b) {
  if (!graph_.adjacent(a, b)) {
    throw InvalidArgument("marked edge '" + label + "' (" + std::to_string(a) + "," +
                          std::to_string(b) + ") is not an edge");
  }
  edges_[std::move(label)] = MarkedEdge{a, b};
  return *this;
}

MarkedGraph& MarkedGraph::mark_vertex(std::string label, Vertex v) {
  if (v >= graph_.vertex_count()) {
    throw OutOfRange("marked vertex '" + label + "' = " + std::to_string(v) + " out of range");
  }
  vertices_[std::move(label)] = v;
  return *this;
}

MarkedEdge MarkedGraph::edge_mark(std::string_view label) const {
  auto it = edges_.find(label);
  if (it == edges_.end()) throw InvalidArgument("no marked edge '" + std::string(label) + "'");
  return it->second;
}

Vertex MarkedGraph::vertex_mark(std::string_view label) const {
  auto it = vertices_.find(label);
  if (it == vertices_.end()) throw InvalidArgument("no marked vertex '" + std::string(label) + "'");
  return it->second;
}

std::size_t MarkedGraph::edge_mark_index(std::string_view label) const {
  MarkedEdge e = edge_mark(label);
  return *graph_.edge_index(e.first, e.second);
}

namespace {

// Builds the quotient of `edges` under `map`, deduplicating parallel edges.
// `expected_merges` are merges that the gluing itself intends (the glued
// edge pair) and are not reported as collapses.
Graph image_graph(std::size_t n, const std::vector<Edge>& edges, std::size_t expected_merges,
                  std::size_t& collapsed) {
  std::set<Edge> unique;
  for (const Edge& e : edges) {
    if (e.u == e.v) throw PreconditionViolated("identification would create a self-loop");
    unique.insert(e);
  }
  collapsed = edges.size() - unique.size() - expected_merges;
  std::vector<Edge> list(unique.begin(), unique.end());
  return Graph(n, list);
}

void carry_marks(const MarkedGraph& from, const VertexMap& map, const std::string& prefix,
                 MarkedGraph& to) {
  for (const auto& [label, e] : from.marked_edges()) {
    to.mark_edge(prefix + label, map[e.first], map[e.second]);
  }
  for (const auto& [label, v] : from.marked_vertices()) {
    to.mark_vertex(prefix + label, map[v]);
  }
}

}  // namespace

GluedGraph edge_join(const MarkedGraph& left, std::string_view left_edge,
                     const MarkedGraph& right, std::string_view right_edge) {
  const MarkedEdge ab = left.edge_mark(left_edge);
  const MarkedEdge cd = right.edge_mark(right_edge);
  const Graph& g = left.graph();
  const Graph& h = right.graph();

  const auto survivors = static_cast<Vertex>(g.vertex_count() - 2);
  GluedGraph out;
  out.right.image.resize(h.vertex_count());
  for (Vertex v = 0; v < h.vertex_count(); ++v) out.right.image[v] = survivors + v;
  out.left.image.assign(g.vertex_count(), kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == ab.first) {
      out.left.image[v] = out.right[cd.first];
    } else if (v == ab.second) {
      out.left.image[v] = out.right[cd.second];
    } else {
      out.left.image[v] = next++;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(g.edge_count() + h.edge_count());
  for (const Edge& e : h.edges()) edges.emplace_back(out.right[e.u], out.right[e.v]);
  for (const Edge& e : g.edges()) edges.emplace_back(out.left[e.u], out.left[e.v]);

  Graph joined = image_graph(g.vertex_count() + h.vertex_count() - 2, edges, 1, out.collapsed_edges);
  out.graph = MarkedGraph(std::move(joined));
  carry_marks(left, out.left, "l.", out.graph);
  carry_marks(right, out.right, "r.", out.graph);
  return out;
}

GluedGraph self_identify(const MarkedGraph& g, std::string_view first_edge,
                         std::string_view second_edge) {
  if (first_edge == second_edge) throw InvalidArgument("cannot identify an edge with itself");
  const MarkedEdge ab = g.edge_mark(first_edge);
  const MarkedEdge ab2 = g.edge_mark(second_edge);
  const std::set<Vertex> first{ab.first, ab.second};
  if (first.contains(ab2.first) || first.contains(ab2.second)) {
    throw PreconditionViolated("identified edges '" + std::string(first_edge) + "' and '" +
                               std::string(second_edge) + "' share a vertex");
  }
  const Graph& graph = g.graph();
  std::vector<Vertex> block(graph.vertex_count());
  for (Vertex v = 0; v < graph.vertex_count(); ++v) block[v] = v;
  block[ab.first] = block[ab2.first] = std::min(ab.first, ab2.first);
  block[ab.second] = block[ab2.second] = std::min(ab.second, ab2.second);

  GluedGraph out;
  out.left.image.assign(graph.vertex_count(), kNoVertex);
  std::vector<Vertex> renumber(graph.vertex_count(), kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    if (block[v] == v) renumber[v] = next++;
  }
  for (Vertex v = 0; v < graph.vertex_count(); ++v) out.left.image[v] = renumber[block[v]];

  std::vector<Edge> edges;
  edges.reserve(graph.edge_count());
  for (const Edge& e : graph.edges()) edges.emplace_back(out.left[e.u], out.left[e.v]);
  Graph merged = image_graph(next, edges, 1, out.collapsed_edges);
  out.graph = MarkedGraph(std::move(merged));
  carry_marks(g, out.left, "", out.graph);
  return out;
}

MarkedGraph chain_senders(const MarkedGraph& sender, std::size_t copies) {
  if (copies == 0 || copies % 2 == 0) {
    throw InvalidArgument("chain needs an odd number of copies, got " + std::to_string(copies));
  }
  const MarkedEdge e = sender.edge_mark("e");
  const MarkedEdge f = sender.edge_mark("f");
  if (e == f || MarkedEdge{e.second, e.first} == f) {
    throw InvalidArgument("signal edges e and f must be distinct");
  }

  // Bare copy of the sender carrying only what the chain needs.
  auto link = [&](std::size_t i) {
    MarkedGraph m(sender.graph());
    const std::string k = std::to_string(i);
    m.mark_edge("e", e.first, e.second).mark_edge("f", f.first, f.second);
    m.mark_vertex("a" + k, e.first).mark_vertex("u" + k, e.second);
    m.mark_vertex("b" + k, f.first).mark_vertex("v" + k, f.second);
    return m;
  };

  MarkedGraph chain = link(1);
  for (std::size_t i = 2; i <= copies; ++i) {
    GluedGraph glued = edge_join(chain, "f", link(i), "e");
    MarkedGraph next(glued.graph.graph());
    const MarkedEdge first = chain.edge_mark("e");
    next.mark_edge("e", glued.left[first.first], glued.left[first.second]);
    next.mark_edge("f", glued.right[f.first], glued.right[f.second]);
    for (const auto& [label, v] : glued.graph.marked_vertices()) {
      next.mark_vertex(label.substr(2), v);
    }
    chain = std::move(next);
  }
  return chain;
}

MarkedGraph close_chain(const MarkedGraph& chain, std::size_t n, FarVertexChoice choice) {
  const std::size_t copies = 2 * n + 1;
  if (!chain.has_vertex_mark("a" + std::to_string(copies)) ||
      chain.has_vertex_mark("a" + std::to_string(copies + 1))) {
    throw InvalidArgument("chain does not consist of " + std::to_string(copies) + " links");
  }
  if (choice == FarVertexChoice::kCopyN && n == 0) {
    throw InvalidArgument("copy index n is undefined for n = 0");
  }
  GluedGraph closed = self_identify(chain, "e", "f");
  MarkedGraph out = closed.graph;
  const std::size_t far = choice == FarVertexChoice::kMiddleCopy ? n + 1 : n;
  out.mark_vertex("u", closed.left[chain.vertex_mark("a1")]);
  out.mark_vertex("v", closed.left[chain.vertex_mark("a" + std::to_string(far))]);
  return out;
}

}  // namespace arrowlab
