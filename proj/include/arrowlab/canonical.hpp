#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arrowlab/graph.hpp"

namespace arrowlab {

struct CanonicalLabeling {
  // Byte string: vertex count (4 bytes, big endian), rooted flag, then the
  // strict upper triangle of the adjacency matrix in canonical order, packed
  // MSB first. Equal codes <=> isomorphic (root-preserving when rooted).
  std::string code;
  // order[i] = original vertex placed at canonical position i.
  std::vector<Vertex> order;
};

// Colour refinement seeded with the root in its own cell, then
// individualisation over the first non-singleton cell; the result is the
// lexicographically least adjacency serialisation over all leaves. Twin
// vertices inside a target cell are tried once.
CanonicalLabeling canonical_labeling(const Graph& g, std::optional<Vertex> root = std::nullopt);

inline std::string canonical_code(const Graph& g, std::optional<Vertex> root = std::nullopt) {
  return canonical_labeling(g, root).code;
}

std::string to_hex(const std::string& bytes);

}  // namespace arrowlab
