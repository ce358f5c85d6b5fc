#pragma once

// Brute-force reference implementations. Deliberately naive: they share no
// code with the library beyond the Graph container itself.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "arrowlab/canonical.hpp"
#include "arrowlab/fo.hpp"
#include "arrowlab/graph.hpp"

namespace oracle {

using arrowlab::Edge;
using arrowlab::Graph;
using arrowlab::Vertex;

inline std::vector<std::vector<int>> index_matrix(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, -1));
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    m[e.u][e.v] = m[e.v][e.u] = static_cast<int>(i);
  }
  return m;
}

// Edge sets of all copies of `pattern`, by trying every injective vertex map.
inline std::set<std::vector<std::size_t>> copies(const Graph& host, const Graph& pattern) {
  std::set<std::vector<std::size_t>> out;
  const std::size_t n = host.vertex_count();
  const std::size_t k = pattern.vertex_count();
  if (k > n) return out;
  const auto index = index_matrix(host);
  std::vector<Vertex> image(k);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == k) {
      std::vector<std::size_t> edges;
      for (const Edge& e : pattern.edges()) {
        const int x = index[image[e.u]][image[e.v]];
        if (x < 0) return;
        edges.push_back(static_cast<std::size_t>(x));
      }
      std::sort(edges.begin(), edges.end());
      out.insert(edges);
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      image[i] = v;
      assign(i + 1);
      used[v] = 0;
    }
  };
  assign(0);
  return out;
}

inline std::vector<std::uint64_t> copy_masks(const Graph& host, const Graph& pattern) {
  std::vector<std::uint64_t> out;
  const std::size_t m = host.edge_count();
  for (const auto& c : copies(host, pattern)) {
    std::uint64_t mask = 0;
    // Edge 0 is the most significant bit so that counting up is lexicographic.
    for (std::size_t e : c) mask |= std::uint64_t{1} << (m - 1 - e);
    out.push_back(mask);
  }
  return out;
}

// Colourings as bit strings: bit for edge i set = blue. Visits all 2^m in
// lexicographic order (red < blue, edge 0 first) and reports the good ones.
inline void for_each_good(const Graph& f, const Graph& g, const Graph& h,
                          const std::function<bool(std::uint64_t)>& visit) {
  const std::size_t m = f.edge_count();
  if (m > 40) throw std::invalid_argument("oracle limited to 40 edges");
  const auto red = copy_masks(f, g);
  const auto blue = copy_masks(f, h);
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
    bool good = true;
    for (std::uint64_t c : red) {
      if ((x & c) == 0) {
        good = false;
        break;
      }
    }
    if (!good) continue;
    for (std::uint64_t c : blue) {
      if ((x & c) == c) {
        good = false;
        break;
      }
    }
    if (good && !visit(x)) return;
  }
}

inline bool arrows(const Graph& f, const Graph& g, const Graph& h) {
  bool found = false;
  for_each_good(f, g, h, [&](std::uint64_t) {
    found = true;
    return false;
  });
  return !found;
}

inline std::vector<std::string> good_colorings(const Graph& f, const Graph& g, const Graph& h) {
  std::vector<std::string> out;
  const std::size_t m = f.edge_count();
  for_each_good(f, g, h, [&](std::uint64_t x) {
    std::string s(m, 'R');
    for (std::size_t i = 0; i < m; ++i) {
      if ((x >> (m - 1 - i)) & 1) s[i] = 'B';
    }
    out.push_back(s);
    return true;
  });
  return out;
}

inline bool maps_edges(const Graph& a, const Graph& b, const std::vector<Vertex>& perm) {
  const auto index = index_matrix(b);
  for (const Edge& e : a.edges()) {
    if (index[perm[e.u]][perm[e.v]] < 0) return false;
  }
  return true;
}

// Every bijection; optionally pinning root_a to root_b.
inline bool isomorphic(const Graph& a, const Graph& b, int root_a = -1, int root_b = -1) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (root_a >= 0 && perm[root_a] != static_cast<Vertex>(root_b)) continue;
    if (maps_edges(a, b, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::size_t components_without(const Graph& g, std::uint32_t removed) {
  const std::size_t n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::size_t count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (((removed >> s) & 1) || seen[s]) continue;
    ++count;
    std::deque<Vertex> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (const Edge& e : g.edges()) {
        Vertex y = e.u == x ? e.v : e.v == x ? e.u : x;
        if (y == x || ((removed >> y) & 1) || seen[y]) continue;
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return count;
}

inline std::size_t connectivity(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 0;
  for (std::size_t s = 0; s + 2 <= n; ++s) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != s) continue;
      if (components_without(g, mask) > 1) return s;
    }
  }
  return n - 1;
}

// Floyd-Warshall; -1 = unreachable.
inline std::vector<std::vector<long>> all_distances(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const long inf = 1 << 20;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : g.edges()) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (long& x : row)
      if (x >= inf) x = -1;
  return d;
}

// Quantifier rank by an explicit stack walk.
inline std::size_t quantifier_rank(const arrowlab::Formula& f) {
  std::size_t best = 0;
  std::vector<std::pair<const arrowlab::Formula*, std::size_t>> stack{{&f, 0}};
  while (!stack.empty()) {
    auto [node, depth] = stack.back();
    stack.pop_back();
    const bool quantifier = node->kind == arrowlab::FormulaKind::kForall ||
                            node->kind == arrowlab::FormulaKind::kExists;
    const std::size_t below = depth + (quantifier ? 1 : 0);
    best = std::max(best, below);
    for (const auto& c : node->children) stack.emplace_back(&c, below);
  }
  return best;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline arrowlab::Formula random_formula(std::mt19937& rng, std::size_t depth) {
  using arrowlab::Formula;
  static const char* vars[] = {"x", "y", "z", "w"};
  auto var = [&] { return std::string(vars[rng() % 4]); };
  const unsigned pick = depth == 0 ? rng() % 2 : rng() % 7;
  switch (pick) {
    case 0: return Formula::edge(var(), var());
    case 1: return Formula::equal(var(), var());
    case 2: return Formula::negation(random_formula(rng, depth - 1));
    case 3: return Formula::conjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4: return Formula::disjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return Formula::forall(var(), random_formula(rng, depth - 1));
    default: return Formula::exists(var(), random_formula(rng, depth - 1));
  }
}

// All graphs on n vertices up to isomorphism: extend each (n-1)-vertex
// representative by a new vertex with every neighbour set, keep one graph
// per canonical code.
inline std::vector<std::vector<Graph>> all_graphs_up_to(std::size_t max_n) {
  std::vector<std::vector<Graph>> out(max_n + 1);
  out[0].push_back(Graph(0));
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::set<std::string> seen;
    for (const Graph& base : out[n - 1]) {
      for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
        std::vector<Edge> edges = base.edges();
        for (Vertex v = 0; v + 1 < n; ++v)
          if ((nb >> v) & 1) edges.emplace_back(v, static_cast<Vertex>(n - 1));
        Graph g(n, edges);
        if (seen.insert(arrowlab::canonical_code(g)).second) out[n].push_back(std::move(g));
      }
    }
  }
  return out;
}

}  // namespace oracle
