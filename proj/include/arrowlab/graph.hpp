#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace arrowlab {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

// Finite simple undirected graph on the vertex set {0, ..., n-1}.
//
// Edges are kept sorted lexicographically by (u, v); the position of an edge in
// edges() is its edge index, which colorings and copy masks refer to.
// Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);
  // Throws InvalidArgument on self-loops, duplicate edges or endpoints >= n.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  bool adjacent(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  // Sorted ascending.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool operator==(const Graph& other) const { return n_ == other.n_ && edges_ == other.edges_; }

 private:
  void build();

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  // Dense n*n table: edge index or -1.
  std::vector<std::int32_t> index_;
};

// Map from source vertex ids to target vertex ids; kNoVertex marks vertices
// without an image (deleted or not in the domain).
struct VertexMap {
  std::vector<Vertex> image;

  Vertex operator[](Vertex v) const { return image[v]; }
  std::size_t size() const { return image.size(); }
  bool is_injective() const;
};

VertexMap identity_map(std::size_t n);

// Common small graphs.
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Path on n vertices (n - 1 edges).
Graph path_graph(std::size_t n);
Graph empty_graph(std::size_t n);

// Shortest-path length; nullopt means the vertices lie in different components.
using Distance = std::optional<std::size_t>;

Distance distance(const Graph& g, Vertex from, Vertex to);
// BFS distances from a source; entries for unreachable vertices are nullopt.
std::vector<Distance> distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);
std::size_t component_count(const Graph& g);

// Vertex connectivity kappa(G): least number of vertices whose removal leaves a
// disconnected or single-vertex graph. kappa(K_n) = n - 1, kappa of a
// disconnected graph is 0. Exhaustive over vertex subsets.
std::size_t vertex_connectivity(const Graph& g);
// Exact reading: kappa(G) == k.
bool is_k_connected(const Graph& g, std::size_t k);
// Lower-bound reading: kappa(G) >= k.
bool min_connectivity_at_least(const Graph& g, std::size_t k);

struct Subgraph {
  Graph graph;
  VertexMap map;  // old id -> new id, kNoVertex for deleted vertices
};

// Induced subgraph on V \ removed, renumbered to an initial segment keeping
// the relative order of survivors.
Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed);
Graph delete_edge(const Graph& g, std::size_t edge_index);

struct Union {
  Graph graph;
  VertexMap left;
  VertexMap right;
};

// Left vertices keep their ids, right vertices are shifted by |left|.
Union disjoint_union(const Graph& left, const Graph& right);

// Returns a witness map g -> h when the graphs are isomorphic.
std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h);
bool are_isomorphic(const Graph& g, const Graph& h);

// Edge-index sets of F that form a (not necessarily induced) copy of pattern.
// Deduplicated by edge set; each entry sorted ascending; entries in
// lexicographic order.
std::vector<std::vector<std::size_t>> subgraph_copies(const Graph& host, const Graph& pattern);

// Relabel vertices: vertex v of g becomes perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

std::vector<std::size_t> degree_sequence(const Graph& g);

}  // namespace arrowlab
