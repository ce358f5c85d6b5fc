#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "arrowlab/graph.hpp"

namespace arrowlab {

struct RootedGraph {
  Graph graph;
  Vertex root = 0;
};

// Canonical form of a rooted graph up to root-preserving isomorphism.
class NeighborhoodType {
 public:
  NeighborhoodType() = default;
  explicit NeighborhoodType(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;

  auto operator<=>(const NeighborhoodType&) const = default;

 private:
  std::string bytes_;
};

// Multiplicity of each r-type; ordered by encoding.
using TypeCensus = std::map<NeighborhoodType, std::size_t>;

// Vertices at distance <= radius from center, ascending.
std::vector<Vertex> ball(const Graph& g, Vertex center, std::size_t radius);

// Induced subgraph on the ball, vertices renumbered in ascending original
// order; root is the image of center.
RootedGraph neighborhood(const Graph& g, Vertex center, std::size_t radius);

NeighborhoodType canonical_type(const RootedGraph& rooted);

// Memoises canonical types by the labelled rooted neighbourhood (vertex
// count, root, edge list). Thread-safe; concurrent inserts of the same key
// store the same value.
class TypeCache {
 public:
  NeighborhoodType type_of(const RootedGraph& rooted);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, NeighborhoodType> types_;
};

NeighborhoodType r_type(const Graph& g, Vertex center, std::size_t radius,
                        TypeCache* cache = nullptr);

// r-type of every vertex, in vertex order.
std::vector<NeighborhoodType> r_types(const Graph& g, std::size_t radius, unsigned workers = 1,
                                      TypeCache* cache = nullptr);

TypeCensus type_census(const Graph& g, std::size_t radius, unsigned workers = 1,
                       TypeCache* cache = nullptr);

// Census equality: a type-preserving bijection exists iff per-type counts agree.
bool are_r_equivalent(const Graph& a, const Graph& b, std::size_t radius, unsigned workers = 1);

// A bijection a -> b pairing vertices of equal r-type (in vertex order within
// each type), or nullopt when the censuses differ.
std::optional<VertexMap> r_equivalence_bijection(const Graph& a, const Graph& b,
                                                 std::size_t radius, unsigned workers = 1);

struct HanfCertificate {
  std::size_t rank = 0;    // r
  std::size_t radius = 0;  // 2^r
  bool equivalent = false;
  // "FO-r-equivalent" when the censuses at radius 2^r agree, else "inconclusive".
  std::string conclusion;
  std::vector<std::string> warnings;
  TypeCensus census_a;
  TypeCensus census_b;
};

// Premise check for Hanf's theorem at radius 2^r. Requires r >= 1.
HanfCertificate hanf_certificate(const Graph& a, const Graph& b, std::size_t rank,
                                 unsigned workers = 1);

// 2^r with r <= 62.
std::size_t hanf_radius(std::size_t rank);

}  // namespace arrowlab
