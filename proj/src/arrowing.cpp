#include "arrowlab/arrowing.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "arrowlab/errors.hpp"

namespace arrowlab {

PartialColoring no_fixed_edges(const Graph& f) { return PartialColoring(f.edge_count()); }

bool EdgeMask::subset_of(const EdgeMask& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

ClauseSystem::ClauseSystem(const Graph& f, const Graph& g, const Graph& h)
    : host_(f), g_copies_(subgraph_copies(f, g)), h_copies_(subgraph_copies(f, h)) {
  auto to_masks = [&](const std::vector<std::vector<std::size_t>>& copies) {
    std::vector<EdgeMask> masks;
    masks.reserve(copies.size());
    for (const auto& copy : copies) {
      EdgeMask m(f.edge_count());
      for (std::size_t e : copy) m.set(e);
      masks.push_back(std::move(m));
    }
    return masks;
  };
  g_masks_ = to_masks(g_copies_);
  h_masks_ = to_masks(h_copies_);
}

bool ClauseSystem::is_good(const EdgeColoring& c) const {
  if (c.size() != host_.edge_count()) {
    throw InvalidArgument("colouring covers " + std::to_string(c.size()) + " edges, graph has " +
                          std::to_string(host_.edge_count()));
  }
  EdgeMask red(c.size());
  EdgeMask blue(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) (c[i] == Color::kRed ? red : blue).set(i);
  for (const EdgeMask& m : g_masks_) {
    if (m.subset_of(red)) return false;
  }
  for (const EdgeMask& m : h_masks_) {
    if (m.subset_of(blue)) return false;
  }
  return true;
}

bool is_good_coloring(const Graph& f, const Graph& g, const Graph& h, const EdgeColoring& c) {
  return ClauseSystem(f, g, h).is_good(c);
}

namespace {

enum class Mode { kFind, kEnumerate, kCount };

struct Decision {
  std::size_t edge;
  Color color;
};

// Outcome of searching one subtree.
struct SubtreeResult {
  bool exceeded = false;
  bool cancelled = false;
  std::uint64_t nodes = 0;
  std::vector<EdgeColoring> solutions;
  std::vector<std::uint64_t> nodes_at_solution;
  std::uint64_t count = 0;
  bool count_overflow = false;
};

class Solver {
 public:
  explicit Solver(const ClauseSystem& system) {
    const std::size_t m = system.edge_count();
    occurs_.assign(m, {});
    auto add = [&](const std::vector<std::vector<std::size_t>>& copies, Color satisfying) {
      for (const auto& copy : copies) {
        const std::size_t id = clauses_.size();
        clauses_.push_back({copy, satisfying});
        for (std::size_t e : copy) occurs_[e].push_back(id);
      }
    };
    add(system.g_copies(), Color::kBlue);
    add(system.h_copies(), Color::kRed);
    unassigned_.resize(clauses_.size());
    satisfied_.assign(clauses_.size(), 0);
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      unassigned_[i] = clauses_[i].edges.size();
      if (clauses_[i].edges.empty()) conflict_ = true;
    }
    value_.assign(m, kFree);
    // Unit clauses present before any assignment.
    for (std::size_t i = 0; i < clauses_.size() && !conflict_; ++i) {
      if (unassigned_[i] == 1) pending_.push_back(i);
    }
    if (!conflict_) conflict_ = !propagate();
  }

  bool in_conflict() const { return conflict_; }

  // Applies a root-level assignment (no node counted).
  bool fix(std::size_t edge, Color c) {
    if (conflict_) return false;
    if (value_[edge] != kFree) {
      if (value_[edge] != static_cast<std::int8_t>(c)) conflict_ = true;
      return !conflict_;
    }
    assign(edge, c);
    conflict_ = !propagate();
    return !conflict_;
  }

  // Assign + propagate on top of the current trail; returns false on conflict.
  // The trail must be undone by the caller on conflict.
  bool decide(std::size_t edge, Color c) {
    assign(edge, c);
    return propagate();
  }

  std::size_t trail_size() const { return trail_.size(); }

  void undo(std::size_t size) {
    pending_.clear();
    while (trail_.size() > size) {
      const std::size_t e = trail_.back();
      trail_.pop_back();
      const auto c = static_cast<Color>(value_[e]);
      for (std::size_t id : occurs_[e]) {
        ++unassigned_[id];
        if (clauses_[id].satisfying == c) --satisfied_[id];
      }
      value_[e] = kFree;
    }
  }

  // Branching edge or nullopt when all clauses are satisfied / all assigned.
  std::optional<std::size_t> choose(Mode mode) const {
    if (mode == Mode::kFind) {
      std::optional<std::size_t> best;
      std::size_t best_score = 0;
      for (std::size_t e = 0; e < value_.size(); ++e) {
        if (value_[e] != kFree) continue;
        std::size_t score = 0;
        for (std::size_t id : occurs_[e]) score += satisfied_[id] == 0 ? 1 : 0;
        if (score > best_score) {
          best = e;
          best_score = score;
        }
      }
      return best;
    }
    if (mode == Mode::kCount &&
        std::none_of(satisfied_.begin(), satisfied_.end(), [](std::size_t s) { return s == 0; })) {
      return std::nullopt;
    }
    for (std::size_t e = 0; e < value_.size(); ++e) {
      if (value_[e] == kFree) return e;
    }
    return std::nullopt;
  }

  std::size_t free_count() const {
    return static_cast<std::size_t>(std::count(value_.begin(), value_.end(), kFree));
  }

  EdgeColoring coloring_with_free_red() const {
    EdgeColoring c(value_.size());
    for (std::size_t e = 0; e < value_.size(); ++e) {
      c[e] = value_[e] == kFree ? Color::kRed : static_cast<Color>(value_[e]);
    }
    return c;
  }

 private:
  static constexpr std::int8_t kFree = -1;

  struct Clause {
    std::vector<std::size_t> edges;
    Color satisfying;
  };

  void assign(std::size_t edge, Color c) {
    value_[edge] = static_cast<std::int8_t>(c);
    trail_.push_back(edge);
    for (std::size_t id : occurs_[edge]) {
      --unassigned_[id];
      if (clauses_[id].satisfying == c) ++satisfied_[id];
      if (satisfied_[id] == 0 && unassigned_[id] <= 1) pending_.push_back(id);
    }
  }

  bool propagate() {
    while (!pending_.empty()) {
      const std::size_t id = pending_.back();
      pending_.pop_back();
      if (satisfied_[id] > 0) continue;
      if (unassigned_[id] == 0) {
        pending_.clear();
        return false;
      }
      if (unassigned_[id] > 1) continue;
      for (std::size_t e : clauses_[id].edges) {
        if (value_[e] == kFree) {
          assign(e, clauses_[id].satisfying);
          break;
        }
      }
    }
    return true;
  }

  std::vector<Clause> clauses_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<std::size_t> unassigned_;
  std::vector<std::size_t> satisfied_;
  std::vector<std::int8_t> value_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> pending_;
  bool conflict_ = false;
};

constexpr std::uint64_t kNoIndex = std::numeric_limits<std::uint64_t>::max();

struct Task {
  std::vector<Decision> prefix;
  std::uint64_t attributed = 0;  // split decisions counted towards this task
  bool dead = false;             // the prefix already conflicts
};

class SubtreeSearch {
 public:
  SubtreeSearch(Solver& solver, Mode mode, std::uint64_t budget, std::size_t limit,
                const std::atomic<std::uint64_t>* first_found, std::uint64_t task_index)
      : solver_(solver),
        mode_(mode),
        budget_(budget),
        limit_(limit),
        first_found_(first_found),
        task_index_(task_index) {}

  SubtreeResult run() {
    try {
      search();
    } catch (const Stop&) {
    }
    return std::move(result_);
  }

 private:
  struct Stop {};

  bool enough() const {
    return mode_ == Mode::kFind ? !result_.solutions.empty()
                                : (limit_ > 0 && result_.solutions.size() >= limit_);
  }

  void record_solution() {
    if (mode_ == Mode::kCount) {
      const std::size_t free = solver_.free_count();
      if (free >= 64 || result_.count > std::numeric_limits<std::uint64_t>::max() -
                                             (std::uint64_t{1} << free)) {
        result_.count_overflow = true;
        throw Stop{};
      }
      result_.count += std::uint64_t{1} << free;
      return;
    }
    result_.solutions.push_back(solver_.coloring_with_free_red());
    result_.nodes_at_solution.push_back(result_.nodes);
  }

  void search() {
    std::optional<std::size_t> edge = solver_.choose(mode_);
    if (!edge) {
      record_solution();
      return;
    }
    for (Color c : {Color::kRed, Color::kBlue}) {
      if (first_found_ && first_found_->load(std::memory_order_relaxed) < task_index_) {
        result_.cancelled = true;
        throw Stop{};
      }
      if (++result_.nodes > budget_) {
        result_.exceeded = true;
        throw Stop{};
      }
      const std::size_t mark = solver_.trail_size();
      if (solver_.decide(*edge, c)) {
        search();
        if (enough()) throw Stop{};
      }
      solver_.undo(mark);
    }
  }

  Solver& solver_;
  Mode mode_;
  std::uint64_t budget_;
  std::size_t limit_;
  const std::atomic<std::uint64_t>* first_found_;
  std::uint64_t task_index_;
  SubtreeResult result_;
};

void expand(Solver& solver, Mode mode, std::size_t depth, std::vector<Decision>& prefix,
            std::uint64_t& unattributed, std::vector<Task>& tasks) {
  std::optional<std::size_t> edge = depth == 0 ? std::nullopt : solver.choose(mode);
  if (!edge) {
    tasks.push_back({prefix, unattributed, false});
    unattributed = 0;
    return;
  }
  for (Color c : {Color::kRed, Color::kBlue}) {
    ++unattributed;
    const std::size_t mark = solver.trail_size();
    prefix.push_back({*edge, c});
    if (solver.decide(*edge, c)) {
      expand(solver, mode, depth - 1, prefix, unattributed, tasks);
    } else {
      tasks.push_back({prefix, unattributed, true});
      unattributed = 0;
    }
    prefix.pop_back();
    solver.undo(mark);
  }
}

struct RunResult {
  std::vector<EdgeColoring> solutions;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

// Runs the search in `mode`, splitting the top of the tree into ordered tasks
// when more than one worker is requested. The combination step replays the
// sequential node accounting, so verdicts, solution order and
// BudgetExceeded do not depend on the worker count.
RunResult run_search(const ClauseSystem& system, const PartialColoring& fixed, Mode mode,
                     std::size_t limit, const SearchOptions& options) {
  if (fixed.size() != system.edge_count()) {
    throw InvalidArgument("fixed colouring covers " + std::to_string(fixed.size()) +
                          " edges, graph has " + std::to_string(system.edge_count()));
  }
  Solver root(system);
  for (std::size_t e = 0; e < fixed.size(); ++e) {
    if (fixed[e]) root.fix(e, *fixed[e]);
  }
  RunResult out;
  if (root.in_conflict()) return out;

  std::vector<Task> tasks;
  if (options.workers <= 1) {
    tasks.push_back({});
  } else {
    std::size_t depth = 0;
    while ((std::size_t{1} << depth) < 8 * static_cast<std::size_t>(options.workers) && depth < 12)
      ++depth;
    std::vector<Decision> prefix;
    std::uint64_t unattributed = 0;
    expand(root, mode, depth, prefix, unattributed, tasks);
  }

  std::vector<SubtreeResult> results(tasks.size());
  std::atomic<std::uint64_t> first_found{kNoIndex};
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      const Task& task = tasks[i];
      SubtreeResult& r = results[i];
      if (task.dead) continue;
      if (task.attributed > options.budget) {
        r.exceeded = true;
        continue;
      }
      Solver solver = root;
      for (const Decision& d : task.prefix) solver.decide(d.edge, d.color);
      SubtreeSearch search(solver, mode, options.budget - task.attributed, limit,
                           mode == Mode::kFind ? &first_found : nullptr, i);
      r = search.run();
      if (mode == Mode::kFind && !r.solutions.empty()) {
        std::uint64_t seen = first_found.load();
        while (i < seen && !first_found.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  const unsigned threads =
      std::min<std::size_t>(std::max(1u, options.workers), tasks.size());
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Sequential replay of the accounting.
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const SubtreeResult& r = results[i];
    out.nodes += tasks[i].attributed;
    if (out.nodes > options.budget) throw BudgetExceeded(out.nodes);
    if (tasks[i].dead) continue;
    if (r.cancelled) {
      // Only tasks after a successful one are cancelled.
      break;
    }
    if (r.count_overflow) throw OutOfRange("good colouring count exceeds 2^64");
    if (mode == Mode::kCount) {
      if (r.exceeded) throw BudgetExceeded(out.nodes + r.nodes);
      out.nodes += r.nodes;
      if (out.nodes > options.budget) throw BudgetExceeded(out.nodes);
      out.count += r.count;
      continue;
    }
    const std::size_t wanted = mode == Mode::kFind ? 1
                               : limit == 0        ? r.solutions.size()
                                                   : limit - out.solutions.size();
    if (r.solutions.size() >= wanted && wanted > 0 && (mode == Mode::kFind || limit > 0)) {
      out.nodes += r.nodes_at_solution[wanted - 1];
      if (out.nodes > options.budget) throw BudgetExceeded(out.nodes);
      out.solutions.insert(out.solutions.end(), r.solutions.begin(),
                           r.solutions.begin() + static_cast<std::ptrdiff_t>(wanted));
      return out;
    }
    if (r.exceeded) throw BudgetExceeded(out.nodes + r.nodes);
    out.nodes += r.nodes;
    if (out.nodes > options.budget) throw BudgetExceeded(out.nodes);
    out.solutions.insert(out.solutions.end(), r.solutions.begin(), r.solutions.end());
  }
  return out;
}

}  // namespace

std::optional<EdgeColoring> find_good_coloring(const ClauseSystem& system,
                                               const PartialColoring& fixed,
                                               const SearchOptions& options) {
  RunResult r = run_search(system, fixed, Mode::kFind, 1, options);
  if (r.solutions.empty()) return std::nullopt;
  return r.solutions.front();
}

std::optional<EdgeColoring> find_good_coloring(const Graph& f, const Graph& g, const Graph& h,
                                               const PartialColoring& fixed,
                                               const SearchOptions& options) {
  return find_good_coloring(ClauseSystem(f, g, h), fixed, options);
}

bool arrows(const Graph& f, const Graph& g, const Graph& h, const SearchOptions& options) {
  return !find_good_coloring(f, g, h, no_fixed_edges(f), options).has_value();
}

ColoringEnumeration enumerate_good_colorings(const Graph& f, const Graph& g, const Graph& h,
                                             std::size_t limit, const SearchOptions& options) {
  ClauseSystem system(f, g, h);
  ColoringEnumeration out;
  // Ask for one more than the limit to learn whether the list was cut short.
  RunResult r = run_search(system, no_fixed_edges(f), Mode::kEnumerate,
                           limit == 0 ? 0 : limit + 1, options);
  out.colorings = std::move(r.solutions);
  if (limit > 0 && out.colorings.size() > limit) {
    out.colorings.resize(limit);
    out.truncated = true;
  }
  return out;
}

std::uint64_t count_good_colorings(const Graph& f, const Graph& g, const Graph& h,
                                   const SearchOptions& options) {
  ClauseSystem system(f, g, h);
  return run_search(system, no_fixed_edges(f), Mode::kCount, 0, options).count;
}

bool is_arrow_minimal(const Graph& f, const Graph& g, const Graph& h,
                      const SearchOptions& options) {
  if (!arrows(f, g, h, options)) return false;
  for (Vertex v = 0; v < f.vertex_count(); ++v) {
    if (f.degree(v) == 0) return false;
  }
  for (std::size_t x = 0; x < f.edge_count(); ++x) {
    if (arrows(delete_edge(f, x), g, h, options)) return false;
  }
  return true;
}

GadgetVerdict verify_determiner(const MarkedGraph& d, const Graph& g, const Graph& h,
                                const SearchOptions& options, std::string_view signal) {
  const std::size_t f_index = d.edge_mark_index(signal);
  ClauseSystem system(d.graph(), g, h);
  PartialColoring fixed = no_fixed_edges(d.graph());
  GadgetVerdict verdict;
  if (!find_good_coloring(system, fixed, options)) {
    verdict.violated_condition = 1;
    return verdict;
  }
  fixed[f_index] = Color::kBlue;
  if (auto witness = find_good_coloring(system, fixed, options)) {
    verdict.violated_condition = 2;
    verdict.witness = std::move(witness);
    return verdict;
  }
  verdict.ok = true;
  return verdict;
}

GadgetVerdict verify_sender(const MarkedGraph& s, Polarity polarity, const Graph& g,
                            const Graph& h, const SearchOptions& options) {
  const std::size_t e = s.edge_mark_index("e");
  const std::size_t f = s.edge_mark_index("f");
  if (e == f) throw InvalidArgument("signal edges e and f must be distinct");
  ClauseSystem system(s.graph(), g, h);
  GadgetVerdict verdict;

  auto with = [&](std::optional<Color> ce, std::optional<Color> cf) {
    PartialColoring fixed = no_fixed_edges(s.graph());
    fixed[e] = ce;
    fixed[f] = cf;
    return find_good_coloring(system, fixed, options);
  };

  if (!with(std::nullopt, std::nullopt)) {
    verdict.violated_condition = 1;
    return verdict;
  }
  // Colour combinations that break the polarity, in witness order.
  for (Color ce : {Color::kRed, Color::kBlue}) {
    const Color cf = polarity == Polarity::kNegative ? ce : opposite(ce);
    if (auto witness = with(ce, cf)) {
      verdict.violated_condition = 2;
      verdict.witness = std::move(witness);
      return verdict;
    }
  }
  if (!with(Color::kRed, std::nullopt) || !with(Color::kBlue, std::nullopt)) {
    verdict.violated_condition = 3;
    return verdict;
  }
  verdict.ok = true;
  return verdict;
}

GadgetVerdict verify_negative_sender(const MarkedGraph& s, const Graph& g, const Graph& h,
                                     const SearchOptions& options) {
  return verify_sender(s, Polarity::kNegative, g, h, options);
}

GadgetVerdict verify_positive_sender(const MarkedGraph& s, const Graph& g, const Graph& h,
                                     const SearchOptions& options) {
  return verify_sender(s, Polarity::kPositive, g, h, options);
}

bool signals_nonadjacent(const MarkedGraph& s) {
  const MarkedEdge e = s.edge_mark("e");
  const MarkedEdge f = s.edge_mark("f");
  return e.first != f.first && e.first != f.second && e.second != f.first &&
         e.second != f.second;
}

bool is_sender_minimal(const MarkedGraph& s, Polarity polarity, const Graph& g, const Graph& h,
                       const SearchOptions& options) {
  if (!verify_sender(s, polarity, g, h, options).ok) {
    throw PreconditionViolated("graph is not a sender of the requested polarity");
  }
  const std::size_t e = s.edge_mark_index("e");
  const std::size_t f = s.edge_mark_index("f");
  const MarkedEdge me = s.edge_mark("e");
  const MarkedEdge mf = s.edge_mark("f");
  for (std::size_t x = 0; x < s.graph().edge_count(); ++x) {
    if (x == e || x == f) continue;
    Graph reduced = delete_edge(s.graph(), x);
    const std::size_t re = *reduced.edge_index(me.first, me.second);
    const std::size_t rf = *reduced.edge_index(mf.first, mf.second);
    ClauseSystem system(reduced, g, h);
    bool broken = false;
    for (Color ce : {Color::kRed, Color::kBlue}) {
      PartialColoring fixed = no_fixed_edges(reduced);
      fixed[re] = ce;
      fixed[rf] = polarity == Polarity::kNegative ? ce : opposite(ce);
      if (find_good_coloring(system, fixed, options)) {
        broken = true;
        break;
      }
    }
    if (!broken) return false;
  }
  return true;
}

std::optional<MarkedGraph> search_sender(const Graph& g, const Graph& h, Polarity polarity,
                                         const SenderSearchOptions& search,
                                         const SearchOptions& options) {
  if (search.max_vertices > SenderSearchOptions::kVertexCap) {
    throw PreconditionViolated("sender search is capped at " +
                               std::to_string(SenderSearchOptions::kVertexCap) + " vertices");
  }
  for (std::size_t n = 2; n <= search.max_vertices; ++n) {
    std::vector<Edge> all;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) all.emplace_back(a, b);
    const std::size_t pairs = all.size();
    for (std::size_t m = 2; m <= pairs; ++m) {
      // Edge subsets of size m in lexicographic order of their index lists.
      std::vector<std::size_t> pick(m);
      for (std::size_t i = 0; i < m; ++i) pick[i] = i;
      while (true) {
        std::vector<Edge> edges;
        edges.reserve(m);
        for (std::size_t i : pick) edges.push_back(all[i]);
        Graph candidate(n, edges);
        bool isolated = false;
        for (Vertex v = 0; v < n && !isolated; ++v) isolated = candidate.degree(v) == 0;
        if (!isolated) {
          for (std::size_t ei = 0; ei < m; ++ei) {
            for (std::size_t fi = ei + 1; fi < m; ++fi) {
              const Edge& ee = candidate.edge(ei);
              const Edge& fe = candidate.edge(fi);
              MarkedGraph s(candidate);
              s.mark_edge("e", ee.u, ee.v).mark_edge("f", fe.u, fe.v);
              if (search.require_nonadjacent_signals && !signals_nonadjacent(s)) continue;
              if (verify_sender(s, polarity, g, h, options).ok) return s;
            }
          }
        }
        // Next combination.
        std::size_t i = m;
        while (i > 0 && pick[i - 1] == pairs - m + (i - 1)) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return std::nullopt;
}

}  // namespace arrowlab
