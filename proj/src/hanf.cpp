#include "arrowlab/hanf.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "arrowlab/canonical.hpp"
#include "arrowlab/errors.hpp"

namespace arrowlab {

std::string NeighborhoodType::hex() const { return to_hex(bytes_); }

std::vector<Vertex> ball(const Graph& g, Vertex center, std::size_t radius) {
  std::vector<Distance> dist = distances_from(g, center);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] && *dist[v] <= radius) out.push_back(v);
  }
  return out;
}

RootedGraph neighborhood(const Graph& g, Vertex center, std::size_t radius) {
  std::vector<Vertex> inside = ball(g, center, radius);
  std::vector<Vertex> outside;
  std::size_t j = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (j < inside.size() && inside[j] == v) {
      ++j;
    } else {
      outside.push_back(v);
    }
  }
  Subgraph sub = delete_vertices(g, outside);
  return RootedGraph{std::move(sub.graph), sub.map[center]};
}

NeighborhoodType canonical_type(const RootedGraph& rooted) {
  return NeighborhoodType(canonical_code(rooted.graph, rooted.root));
}

namespace {

std::string cache_key(const RootedGraph& rooted) {
  std::string key;
  auto put = [&](std::uint32_t x) {
    for (int s = 24; s >= 0; s -= 8) key.push_back(static_cast<char>((x >> s) & 0xff));
  };
  put(static_cast<std::uint32_t>(rooted.graph.vertex_count()));
  put(rooted.root);
  for (const Edge& e : rooted.graph.edges()) {
    put(e.u);
    put(e.v);
  }
  return key;
}

}  // namespace

NeighborhoodType TypeCache::type_of(const RootedGraph& rooted) {
  std::string key = cache_key(rooted);
  {
    std::lock_guard lock(mutex_);
    auto it = types_.find(key);
    if (it != types_.end()) return it->second;
  }
  NeighborhoodType type = canonical_type(rooted);
  std::lock_guard lock(mutex_);
  return types_.emplace(std::move(key), std::move(type)).first->second;
}

std::size_t TypeCache::size() const {
  std::lock_guard lock(mutex_);
  return types_.size();
}

NeighborhoodType r_type(const Graph& g, Vertex center, std::size_t radius, TypeCache* cache) {
  RootedGraph rooted = neighborhood(g, center, radius);
  return cache ? cache->type_of(rooted) : canonical_type(rooted);
}

std::vector<NeighborhoodType> r_types(const Graph& g, std::size_t radius, unsigned workers,
                                      TypeCache* cache) {
  TypeCache local;
  TypeCache& types = cache ? *cache : local;
  std::vector<NeighborhoodType> out(g.vertex_count());
  std::atomic<Vertex> next{0};
  auto work = [&] {
    while (true) {
      const Vertex v = next.fetch_add(1);
      if (v >= g.vertex_count()) return;
      out[v] = r_type(g, v, radius, &types);
    }
  };
  const unsigned threads = std::min<std::size_t>(std::max(1u, workers), g.vertex_count());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return out;
}

TypeCensus type_census(const Graph& g, std::size_t radius, unsigned workers, TypeCache* cache) {
  TypeCensus census;
  for (auto& type : r_types(g, radius, workers, cache)) ++census[std::move(type)];
  return census;
}

bool are_r_equivalent(const Graph& a, const Graph& b, std::size_t radius, unsigned workers) {
  if (a.vertex_count() != b.vertex_count()) return false;
  TypeCache cache;
  return type_census(a, radius, workers, &cache) == type_census(b, radius, workers, &cache);
}

std::optional<VertexMap> r_equivalence_bijection(const Graph& a, const Graph& b,
                                                 std::size_t radius, unsigned workers) {
  if (a.vertex_count() != b.vertex_count()) return std::nullopt;
  TypeCache cache;
  std::vector<NeighborhoodType> ta = r_types(a, radius, workers, &cache);
  std::vector<NeighborhoodType> tb = r_types(b, radius, workers, &cache);
  std::map<NeighborhoodType, std::vector<Vertex>> pool;
  for (Vertex v = 0; v < b.vertex_count(); ++v) pool[tb[v]].push_back(v);
  std::map<NeighborhoodType, std::size_t> used;
  VertexMap map;
  map.image.assign(a.vertex_count(), kNoVertex);
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    auto it = pool.find(ta[v]);
    std::size_t& k = used[ta[v]];
    if (it == pool.end() || k >= it->second.size()) return std::nullopt;
    map.image[v] = it->second[k++];
  }
  return map;
}

std::size_t hanf_radius(std::size_t rank) {
  if (rank > 62) throw OutOfRange("rank too large for radius 2^r");
  return std::size_t{1} << rank;
}

HanfCertificate hanf_certificate(const Graph& a, const Graph& b, std::size_t rank,
                                 unsigned workers) {
  if (rank < 1) throw PreconditionViolated("Hanf certificate needs r >= 1");
  HanfCertificate cert;
  cert.rank = rank;
  cert.radius = hanf_radius(rank);
  if (a.vertex_count() < 2 || b.vertex_count() < 2) {
    cert.warnings.push_back("structure with fewer than 2 elements");
  }
  // Balls never grow past the vertex count.
  const std::size_t effective =
      std::min<std::size_t>(cert.radius, std::max(a.vertex_count(), b.vertex_count()));
  TypeCache cache;
  cert.census_a = type_census(a, effective, workers, &cache);
  cert.census_b = type_census(b, effective, workers, &cache);
  cert.equivalent = cert.census_a == cert.census_b;
  cert.conclusion = cert.equivalent ? "FO-" + std::to_string(rank) + "-equivalent" : "inconclusive";
  return cert;
}

}  // namespace arrowlab
