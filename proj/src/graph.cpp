#include "arrowlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "arrowlab/errors.hpp"

namespace arrowlab {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.vertex_count()) {
    throw OutOfRange("vertex " + std::to_string(v) + " out of range for graph on " +
                     std::to_string(g.vertex_count()) + " vertices");
  }
}

}  // namespace

Graph::Graph(std::size_t vertex_count) : n_(vertex_count) { build(); }

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : n_(vertex_count), edges_(edges.begin(), edges.end()) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (e.v >= n_) {
      throw InvalidArgument("edge endpoint " + std::to_string(e.v) + " out of range for " +
                            std::to_string(n_) + " vertices");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InvalidArgument("duplicate edge " + std::to_string(dup->u) + "-" +
                          std::to_string(dup->v));
  }
  build();
}

Graph::Graph(std::size_t vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : n_(vertex_count) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw InvalidArgument("self-loop at vertex " + std::to_string(a));
    list.emplace_back(a, b);
  }
  *this = Graph(vertex_count, list);
}

void Graph::build() {
  adjacency_.assign(n_, {});
  index_.assign(n_ * n_, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
    index_[e.u * n_ + e.v] = static_cast<std::int32_t>(i);
    index_[e.v * n_ + e.u] = static_cast<std::int32_t>(i);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return false;
  return index_[a * n_ + b] >= 0;
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return std::nullopt;
  std::int32_t i = index_[a * n_ + b];
  if (i < 0) return std::nullopt;
  return static_cast<std::size_t>(i);
}

bool VertexMap::is_injective() const {
  std::vector<Vertex> seen;
  for (Vertex v : image) {
    if (v != kNoVertex) seen.push_back(v);
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

VertexMap identity_map(std::size_t n) {
  VertexMap m;
  m.image.resize(n);
  for (std::size_t i = 0; i < n; ++i) m.image[i] = static_cast<Vertex>(i);
  return m;
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) edges.emplace_back(a, static_cast<Vertex>((a + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a + 1 < n; ++a) edges.emplace_back(a, a + 1);
  return Graph(n, edges);
}

Graph empty_graph(std::size_t n) { return Graph(n); }

std::vector<Distance> distances_from(const Graph& g, Vertex source) {
  check_vertex(g, source);
  std::vector<Distance> dist(g.vertex_count());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (!dist[y]) {
        dist[y] = *dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

Distance distance(const Graph& g, Vertex from, Vertex to) {
  check_vertex(g, to);
  return distances_from(g, from)[to];
}

namespace {

// Components of g with the vertices flagged in `removed` deleted.
std::size_t components_without(const Graph& g, const std::vector<char>& removed) {
  std::vector<char> seen(g.vertex_count(), 0);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (removed[s] || seen[s]) continue;
    ++count;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x)) {
        if (!removed[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
  }
  return count;
}

}  // namespace

std::size_t component_count(const Graph& g) {
  return components_without(g, std::vector<char>(g.vertex_count(), 0));
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

std::size_t vertex_connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  // Smallest s such that some s-subset separates the rest. Removing the
  // neighbours of a minimum-degree vertex isolates it, so kappa <= delta.
  std::size_t delta = n;
  for (Vertex v = 0; v < n; ++v) delta = std::min(delta, g.degree(v));
  for (std::size_t s = 0; s < delta; ++s) {
    std::vector<char> removed(n, 0);
    std::fill(removed.end() - static_cast<std::ptrdiff_t>(s), removed.end(), 1);
    do {
      if (components_without(g, removed) > 1) return s;
    } while (std::next_permutation(removed.begin(), removed.end()));
  }
  return delta;
}

bool is_k_connected(const Graph& g, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be positive");
  return vertex_connectivity(g) == k;
}

bool min_connectivity_at_least(const Graph& g, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be positive");
  return vertex_connectivity(g) >= k;
}

Subgraph delete_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(g.vertex_count(), 0);
  for (Vertex v : removed) {
    check_vertex(g, v);
    gone[v] = 1;
  }
  Subgraph out;
  out.map.image.assign(g.vertex_count(), kNoVertex);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!gone[v]) out.map.image[v] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (!gone[e.u] && !gone[e.v]) edges.emplace_back(out.map[e.u], out.map[e.v]);
  }
  out.graph = Graph(next, edges);
  return out;
}

Graph delete_edge(const Graph& g, std::size_t edge_index) {
  if (edge_index >= g.edge_count()) throw OutOfRange("edge index out of range");
  std::vector<Edge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return Graph(g.vertex_count(), edges);
}

Union disjoint_union(const Graph& left, const Graph& right) {
  const auto shift = static_cast<Vertex>(left.vertex_count());
  std::vector<Edge> edges = left.edges();
  for (const Edge& e : right.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  Union out;
  out.graph = Graph(left.vertex_count() + right.vertex_count(), edges);
  out.left = identity_map(left.vertex_count());
  out.right.image.resize(right.vertex_count());
  for (Vertex v = 0; v < right.vertex_count(); ++v) out.right.image[v] = v + shift;
  return out;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq;
  seq.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) seq.push_back(g.degree(v));
  std::sort(seq.rbegin(), seq.rend());
  return seq;
}

std::optional<VertexMap> find_isomorphism(const Graph& g, const Graph& h) {
  const std::size_t n = g.vertex_count();
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
  if (degree_sequence(g) != degree_sequence(h)) return std::nullopt;

  // Map g's vertices in order of decreasing degree, ties by id; candidates in
  // h must match degree and all adjacencies to already-mapped vertices.
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<Vertex> image(n, kNoVertex);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    Vertex x = order[depth];
    for (Vertex y = 0; y < n; ++y) {
      if (used[y] || h.degree(y) != g.degree(x)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex px = order[i];
        ok = g.adjacent(x, px) == h.adjacent(y, image[px]);
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      if (extend(depth + 1)) return true;
      used[y] = 0;
      image[x] = kNoVertex;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return VertexMap{image};
}

bool are_isomorphic(const Graph& g, const Graph& h) { return find_isomorphism(g, h).has_value(); }

std::vector<std::vector<std::size_t>> subgraph_copies(const Graph& host, const Graph& pattern) {
  const std::size_t pn = pattern.vertex_count();
  if (pn > host.vertex_count()) return {};

  // Pattern vertices ordered so each (after the first of its component) has an
  // already-placed neighbour, which keeps candidate lists short.
  std::vector<Vertex> order;
  {
    std::vector<char> placed(pn, 0);
    std::vector<Vertex> by_degree(pn);
    for (Vertex v = 0; v < pn; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
    for (Vertex start : by_degree) {
      if (placed[start]) continue;
      std::deque<Vertex> queue{start};
      placed[start] = 1;
      while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        order.push_back(x);
        for (Vertex y : pattern.neighbors(x)) {
          if (!placed[y]) {
            placed[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
  }

  std::set<std::vector<std::size_t>> found;
  std::vector<Vertex> image(pn, kNoVertex);
  std::vector<char> used(host.vertex_count(), 0);

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == pn) {
      std::vector<std::size_t> copy;
      copy.reserve(pattern.edge_count());
      for (const Edge& e : pattern.edges()) copy.push_back(*host.edge_index(image[e.u], image[e.v]));
      std::sort(copy.begin(), copy.end());
      found.insert(std::move(copy));
      return;
    }
    Vertex x = order[depth];
    for (Vertex y = 0; y < host.vertex_count(); ++y) {
      if (used[y] || host.degree(y) < pattern.degree(x)) continue;
      bool ok = true;
      for (Vertex px : pattern.neighbors(x)) {
        if (image[px] != kNoVertex && !host.adjacent(y, image[px])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[x] = y;
      used[y] = 1;
      extend(depth + 1);
      used[y] = 0;
      image[x] = kNoVertex;
    }
  };
  extend(0);
  return {found.begin(), found.end()};
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw InvalidArgument("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(g.vertex_count(), edges);
}

}  // namespace arrowlab
