#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrowlab/gadget.hpp"
#include "arrowlab/graph.hpp"

namespace arrowlab {

enum class Color : std::uint8_t { kRed = 0, kBlue = 1 };

inline Color opposite(Color c) { return c == Color::kRed ? Color::kBlue : Color::kRed; }

// Total map edge index -> colour.
using EdgeColoring = std::vector<Color>;
// Entry per edge index; nullopt = free.
using PartialColoring = std::vector<std::optional<Color>>;

PartialColoring no_fixed_edges(const Graph& f);

struct SearchOptions {
  // Maximum number of branching decisions; exceeding it throws BudgetExceeded.
  std::uint64_t budget = 100'000'000;
  // Worker threads. Results never depend on this value.
  unsigned workers = 1;
};

// Fixed-width bit set over edge indices.
class EdgeMask {
 public:
  EdgeMask() = default;
  explicit EdgeMask(std::size_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  // True when every bit of *this is also set in other.
  bool subset_of(const EdgeMask& other) const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
};

// The search form of goodness: every copy of G needs a blue edge, every copy
// of H needs a red edge.
class ClauseSystem {
 public:
  ClauseSystem(const Graph& f, const Graph& g, const Graph& h);

  const Graph& host() const { return host_; }
  std::size_t edge_count() const { return host_.edge_count(); }
  // Edge-index lists from subgraph_copies.
  const std::vector<std::vector<std::size_t>>& g_copies() const { return g_copies_; }
  const std::vector<std::vector<std::size_t>>& h_copies() const { return h_copies_; }
  const std::vector<EdgeMask>& g_masks() const { return g_masks_; }
  const std::vector<EdgeMask>& h_masks() const { return h_masks_; }

  bool is_good(const EdgeColoring& c) const;

 private:
  Graph host_;
  std::vector<std::vector<std::size_t>> g_copies_;
  std::vector<std::vector<std::size_t>> h_copies_;
  std::vector<EdgeMask> g_masks_;
  std::vector<EdgeMask> h_masks_;
};

// No all-red copy of G, no all-blue copy of H. Throws InvalidArgument if the
// colouring does not cover exactly E(F).
bool is_good_coloring(const Graph& f, const Graph& g, const Graph& h, const EdgeColoring& c);

// A good colouring extending `fixed`, or nullopt when none exists.
// Deterministic: DPLL with unit propagation, branching on the edge in the most
// unsatisfied copies (ties: lowest index), red before blue.
std::optional<EdgeColoring> find_good_coloring(const Graph& f, const Graph& g, const Graph& h,
                                               const PartialColoring& fixed,
                                               const SearchOptions& options = {});
std::optional<EdgeColoring> find_good_coloring(const ClauseSystem& system,
                                               const PartialColoring& fixed,
                                               const SearchOptions& options = {});

// F -> (G, H): no good colouring exists.
bool arrows(const Graph& f, const Graph& g, const Graph& h, const SearchOptions& options = {});

struct ColoringEnumeration {
  std::vector<EdgeColoring> colorings;  // lexicographic order, red < blue
  bool truncated = false;               // stopped at the limit
};

// All good colourings in lexicographic order of edge colours (red first),
// stopping after `limit` (0 = unbounded).
ColoringEnumeration enumerate_good_colorings(const Graph& f, const Graph& g, const Graph& h,
                                             std::size_t limit, const SearchOptions& options = {});

// Number of good colourings (free edges counted multiplicatively).
std::uint64_t count_good_colorings(const Graph& f, const Graph& g, const Graph& h,
                                   const SearchOptions& options = {});

// F arrows, has no isolated vertex, and F - x does not arrow for every edge x.
bool is_arrow_minimal(const Graph& f, const Graph& g, const Graph& h,
                      const SearchOptions& options = {});

enum class Polarity { kNegative, kPositive };

struct GadgetVerdict {
  bool ok = false;
  // 1, 2 or 3 when !ok: the first violated condition of the definition.
  std::optional<int> violated_condition;
  // A good colouring demonstrating the violation, when one exists.
  std::optional<EdgeColoring> witness;
};

// Marked edge `signal` (default "f") is red in every good colouring, and one exists.
GadgetVerdict verify_determiner(const MarkedGraph& d, const Graph& g, const Graph& h,
                                const SearchOptions& options = {},
                                std::string_view signal = "f");

// Signals "e" and "f". Conditions: (1) a good colouring exists, (2) e and f
// differ (negative) / agree (positive) in all of them, (3) good colourings
// exist with e red and with e blue.
GadgetVerdict verify_sender(const MarkedGraph& s, Polarity polarity, const Graph& g,
                            const Graph& h, const SearchOptions& options = {});
GadgetVerdict verify_negative_sender(const MarkedGraph& s, const Graph& g, const Graph& h,
                                     const SearchOptions& options = {});
GadgetVerdict verify_positive_sender(const MarkedGraph& s, const Graph& g, const Graph& h,
                                     const SearchOptions& options = {});

bool signals_nonadjacent(const MarkedGraph& s);

// Every S - x (x not a signal) admits a good colouring where e and f break the
// polarity (agree for negative senders, differ for positive ones). Throws
// PreconditionViolated if S is not a sender of that polarity.
bool is_sender_minimal(const MarkedGraph& s, Polarity polarity, const Graph& g, const Graph& h,
                       const SearchOptions& options = {});

struct SenderSearchOptions {
  std::size_t max_vertices = 5;
  bool require_nonadjacent_signals = false;
  // Hard cap on max_vertices to keep the labelled enumeration bounded.
  static constexpr std::size_t kVertexCap = 7;
};

// First sender in the order (vertex count, edge count, lexicographic edge
// list, lexicographic (e, f) index pair) among graphs without isolated
// vertices. Marks e and f are stored with the smaller endpoint first.
std::optional<MarkedGraph> search_sender(const Graph& g, const Graph& h, Polarity polarity,
                                         const SenderSearchOptions& search,
                                         const SearchOptions& options = {});

}  // namespace arrowlab
