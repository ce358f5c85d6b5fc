#include "arrowlab/canonical.hpp"

#include <algorithm>
#include <functional>

#include "arrowlab/errors.hpp"

namespace arrowlab {

namespace {

using Colors = std::vector<std::uint32_t>;

std::size_t distinct(const Colors& colors) {
  Colors sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  return static_cast<std::size_t>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

// Equitable refinement. New colour = rank of (old colour, sorted neighbour
// colours); old colour leads the key so cells only split, in place.
void refine(const Graph& g, Colors& colors) {
  const std::size_t n = g.vertex_count();
  std::size_t count = distinct(colors);
  while (true) {
    std::vector<std::pair<std::vector<std::uint32_t>, Vertex>> keyed(n);
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keyed[v].first;
      key.reserve(g.degree(v) + 1);
      for (Vertex w : g.neighbors(v)) key.push_back(colors[w]);
      std::sort(key.begin(), key.end());
      key.insert(key.begin(), colors[v]);
      keyed[v].second = v;
    }
    std::sort(keyed.begin(), keyed.end());
    Colors next(n);
    std::uint32_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++rank;
      next[keyed[i].second] = rank;
    }
    colors = std::move(next);
    std::size_t refined = n == 0 ? 0 : rank + 1;
    if (refined == count) return;
    count = refined;
  }
}

std::string serialize(const Graph& g, const std::vector<Vertex>& order, bool rooted) {
  const std::size_t n = order.size();
  std::string out;
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((n >> shift) & 0xff));
  out.push_back(rooted ? 1 : 0);
  unsigned char byte = 0;
  int bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      byte = static_cast<unsigned char>((byte << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
      if (++bits == 8) {
        out.push_back(static_cast<char>(byte));
        byte = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(byte << (8 - bits)));
  return out;
}

bool are_twins(const Graph& g, Vertex a, Vertex b) {
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (x == a || x == b) continue;
    if (g.adjacent(a, x) != g.adjacent(b, x)) return false;
  }
  return true;
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::optional<Vertex> root) {
  const std::size_t n = g.vertex_count();
  if (root && *root >= n) throw OutOfRange("root out of range");

  Colors colors(n, root ? 1 : 0);
  if (root) colors[*root] = 0;
  refine(g, colors);

  CanonicalLabeling best;
  bool have_best = false;

  std::function<void(const Colors&)> search = [&](const Colors& current) {
    // First non-singleton cell.
    std::vector<std::size_t> cell_size(n, 0);
    for (auto c : current) ++cell_size[c];
    std::uint32_t target = 0;
    bool discrete = true;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        discrete = false;
        break;
      }
    }
    if (discrete) {
      std::vector<Vertex> order(n);
      for (Vertex v = 0; v < n; ++v) order[current[v]] = v;
      std::string code = serialize(g, order, root.has_value());
      if (!have_best || code < best.code) {
        best.code = std::move(code);
        best.order = std::move(order);
        have_best = true;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex w = 0; w < n; ++w) {
      if (current[w] != target) continue;
      bool twin = std::any_of(tried.begin(), tried.end(),
                              [&](Vertex v) { return are_twins(g, v, w); });
      if (twin) continue;
      tried.push_back(w);
      Colors next = current;
      for (Vertex v = 0; v < n; ++v) {
        if (next[v] > target || (next[v] == target && v != w)) ++next[v];
      }
      refine(g, next);
      search(next);
    }
  };
  search(colors);
  if (!have_best) best.code = serialize(g, {}, root.has_value());
  return best;
}

std::string to_hex(const std::string& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xf]);
  }
  return out;
}

}  // namespace arrowlab
