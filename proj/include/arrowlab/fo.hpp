#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "arrowlab/graph.hpp"

namespace arrowlab {

enum class FormulaKind { kEdge, kEqual, kNot, kAnd, kOr, kForall, kExists };

// First-order formula over the graph vocabulary. Terms are variables only.
// Atoms use `first`/`second` as their variables; quantifiers use `first` as
// the bound variable and children[0] as the body.
struct Formula {
  FormulaKind kind = FormulaKind::kEqual;
  std::string first;
  std::string second;
  std::vector<Formula> children;

  static Formula edge(std::string a, std::string b);
  static Formula equal(std::string a, std::string b);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);

  bool operator==(const Formula&) const = default;
};

// Concrete syntax:
//   forall v. phi   exists v. phi   phi & psi   phi | psi   !phi
//   phi -> psi      phi <-> psi     E(a,b)      a = b       ( phi )
// Identifiers match [a-z][a-z0-9_]*; `.` binds weakest; `->` and `<->` are
// rewritten into !, &, |. Throws ParseError with line and column.
Formula parse_formula(std::string_view text);

// Minimal-parenthesis rendering; parse_formula(to_string(f)) == f.
std::string to_string(const Formula& f);

std::size_t quantifier_rank(const Formula& f);
std::size_t node_count(const Formula& f);
std::set<std::string> free_variables(const Formula& f);
inline bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

using Assignment = std::map<std::string, Vertex>;

// Tarskian satisfaction; E is symmetric adjacency, quantifiers range over all
// vertices. Throws InvalidArgument for unbound free variables and OutOfRange
// for assigned values outside the graph.
bool evaluate(const Graph& g, const Formula& f, const Assignment& assignment = {});

// One formula per line; blank lines and lines starting with '#' ignored.
// Parse errors report the line within the file.
std::vector<Formula> parse_sentence_file(std::string_view text);

// Sentences of quantifier rank <= rank from bounded syntax enumeration over
// the variables x, y, z (up to `max_nodes` nodes, alpha-equivalent duplicates
// removed), preceded by a curated list of graph properties. A spot check,
// not a complete set of rank-r sentences.
std::vector<Formula> default_corpus(std::size_t rank, std::size_t max_nodes = 0);

// The node bound default_corpus uses for a rank when max_nodes == 0.
std::size_t default_corpus_node_bound(std::size_t rank);

struct SentenceComparison {
  std::string sentence;
  std::size_t rank = 0;
  bool in_a = false;
  bool in_b = false;
  bool agree() const { return in_a == in_b; }
};

struct ModelComparison {
  std::size_t rank = 0;
  std::vector<SentenceComparison> rows;  // corpus order, qr <= rank only
  std::size_t skipped = 0;               // sentences of higher rank
  std::vector<std::size_t> separating;   // indices into rows
};

// Throws InvalidArgument if a corpus entry has free variables.
ModelComparison compare_models(const Graph& a, const Graph& b, const std::vector<Formula>& corpus,
                               std::size_t rank, unsigned workers = 1);

}  // namespace arrowlab
