#include "arrowlab/fo.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <optional>
#include <thread>
#include <unordered_set>

#include "arrowlab/errors.hpp"

namespace arrowlab {

Formula Formula::edge(std::string a, std::string b) {
  return {FormulaKind::kEdge, std::move(a), std::move(b), {}};
}
Formula Formula::equal(std::string a, std::string b) {
  return {FormulaKind::kEqual, std::move(a), std::move(b), {}};
}
Formula Formula::negation(Formula f) { return {FormulaKind::kNot, {}, {}, {std::move(f)}}; }
Formula Formula::conjunction(Formula a, Formula b) {
  return {FormulaKind::kAnd, {}, {}, {std::move(a), std::move(b)}};
}
Formula Formula::disjunction(Formula a, Formula b) {
  return {FormulaKind::kOr, {}, {}, {std::move(a), std::move(b)}};
}
Formula Formula::forall(std::string var, Formula body) {
  return {FormulaKind::kForall, std::move(var), {}, {std::move(body)}};
}
Formula Formula::exists(std::string var, Formula body) {
  return {FormulaKind::kExists, std::move(var), {}, {std::move(body)}};
}

namespace {

enum class Token { kIdent, kForall, kExists, kEdge, kDot, kComma, kLParen, kRParen, kAnd, kOr,
                   kNot, kImplies, kIff, kEquals, kEnd };

struct Lexeme {
  Token token;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Lexeme> lex(std::string_view text, std::size_t first_line) {
  std::vector<Lexeme> out;
  std::size_t line = first_line;
  std::size_t column = 1;
  std::size_t i = 0;
  auto error = [&](const std::string& what) { throw ParseError(what, line, column); };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++column;
      ++i;
      continue;
    }
    Lexeme lx{Token::kEnd, std::string(1, c), line, column};
    std::size_t len = 1;
    switch (c) {
      case '.': lx.token = Token::kDot; break;
      case ',': lx.token = Token::kComma; break;
      case '(': lx.token = Token::kLParen; break;
      case ')': lx.token = Token::kRParen; break;
      case '&': lx.token = Token::kAnd; break;
      case '|': lx.token = Token::kOr; break;
      case '!': lx.token = Token::kNot; break;
      case '=': lx.token = Token::kEquals; break;
      case 'E': lx.token = Token::kEdge; break;
      case '-':
        if (text.substr(i, 2) != "->") error("expected '->'");
        lx.token = Token::kImplies;
        len = 2;
        break;
      case '<':
        if (text.substr(i, 3) != "<->") error("expected '<->'");
        lx.token = Token::kIff;
        len = 3;
        break;
      default:
        if (c >= 'a' && c <= 'z') {
          while (i + len < text.size()) {
            const char d = text[i + len];
            if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') {
              ++len;
            } else {
              break;
            }
          }
          lx.text = std::string(text.substr(i, len));
          lx.token = lx.text == "forall"   ? Token::kForall
                     : lx.text == "exists" ? Token::kExists
                                           : Token::kIdent;
        } else {
          error(std::string("unexpected character '") + c + "'");
        }
    }
    if (len > 1 && lx.token != Token::kIdent && lx.token != Token::kForall &&
        lx.token != Token::kExists) {
      lx.text = std::string(text.substr(i, len));
    }
    out.push_back(std::move(lx));
    i += len;
    column += len;
  }
  out.push_back({Token::kEnd, "end of input", line, column});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Lexeme> lexemes) : lx_(std::move(lexemes)) {}

  Formula parse() {
    Formula f = iff();
    if (peek().token != Token::kEnd) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Lexeme& peek() const { return lx_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().line, peek().column);
  }
  bool accept(Token t) {
    if (peek().token != t) return false;
    ++pos_;
    return true;
  }
  std::string expect_ident() {
    if (peek().token != Token::kIdent) fail("expected variable, found '" + peek().text + "'");
    return lx_[pos_++].text;
  }
  void expect(Token t, const char* what) {
    if (!accept(t)) fail(std::string("expected ") + what + ", found '" + peek().text + "'");
  }

  Formula iff() {
    Formula left = implication();
    while (accept(Token::kIff)) {
      Formula right = implication();
      Formula forward = Formula::disjunction(Formula::negation(left), right);
      Formula backward = Formula::disjunction(Formula::negation(right), left);
      left = Formula::conjunction(std::move(forward), std::move(backward));
    }
    return left;
  }

  Formula implication() {
    Formula left = disjunction();
    if (accept(Token::kImplies)) {
      Formula right = implication();
      return Formula::disjunction(Formula::negation(std::move(left)), std::move(right));
    }
    return left;
  }

  Formula disjunction() {
    Formula left = conjunction();
    while (accept(Token::kOr)) left = Formula::disjunction(std::move(left), conjunction());
    return left;
  }

  Formula conjunction() {
    Formula left = unary();
    while (accept(Token::kAnd)) left = Formula::conjunction(std::move(left), unary());
    return left;
  }

  Formula unary() {
    if (accept(Token::kNot)) return Formula::negation(unary());
    if (peek().token == Token::kForall || peek().token == Token::kExists) {
      const bool universal = peek().token == Token::kForall;
      ++pos_;
      std::string var = expect_ident();
      expect(Token::kDot, "'.'");
      Formula body = iff();
      return universal ? Formula::forall(std::move(var), std::move(body))
                       : Formula::exists(std::move(var), std::move(body));
    }
    return primary();
  }

  Formula primary() {
    if (accept(Token::kLParen)) {
      Formula f = iff();
      expect(Token::kRParen, "')'");
      return f;
    }
    if (accept(Token::kEdge)) {
      expect(Token::kLParen, "'('");
      std::string a = expect_ident();
      expect(Token::kComma, "','");
      std::string b = expect_ident();
      expect(Token::kRParen, "')'");
      return Formula::edge(std::move(a), std::move(b));
    }
    if (peek().token == Token::kIdent) {
      std::string a = expect_ident();
      expect(Token::kEquals, "'='");
      std::string b = expect_ident();
      return Formula::equal(std::move(a), std::move(b));
    }
    fail("expected formula, found '" + peek().text + "'");
  }

  std::vector<Lexeme> lx_;
  std::size_t pos_ = 0;
};

int precedence(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kForall:
    case FormulaKind::kExists: return 0;
    case FormulaKind::kOr: return 1;
    case FormulaKind::kAnd: return 2;
    case FormulaKind::kNot: return 3;
    default: return 4;
  }
}

void render(const Formula& f, int context, std::string& out) {
  const bool parens = precedence(f) < context;
  if (parens) out += '(';
  switch (f.kind) {
    case FormulaKind::kEdge: out += "E(" + f.first + "," + f.second + ")"; break;
    case FormulaKind::kEqual: out += f.first + " = " + f.second; break;
    case FormulaKind::kNot:
      out += '!';
      // Keep "!(x = y)" readable.
      render(f.children[0], f.children[0].kind == FormulaKind::kEqual ? 5 : 3, out);
      break;
    case FormulaKind::kAnd:
      render(f.children[0], 2, out);
      out += " & ";
      render(f.children[1], 3, out);
      break;
    case FormulaKind::kOr:
      render(f.children[0], 1, out);
      out += " | ";
      render(f.children[1], 2, out);
      break;
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      out += f.kind == FormulaKind::kForall ? "forall " : "exists ";
      out += f.first + ". ";
      render(f.children[0], 0, out);
      break;
  }
  if (parens) out += ')';
}

void collect_free(const Formula& f, std::vector<std::string>& bound, std::set<std::string>& out) {
  auto note = [&](const std::string& v) {
    if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
  };
  switch (f.kind) {
    case FormulaKind::kEdge:
    case FormulaKind::kEqual:
      note(f.first);
      note(f.second);
      break;
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      bound.push_back(f.first);
      collect_free(f.children[0], bound, out);
      bound.pop_back();
      break;
    default:
      for (const Formula& c : f.children) collect_free(c, bound, out);
  }
}

// Formula with variables resolved to slots.
struct Compiled {
  FormulaKind kind = FormulaKind::kEqual;
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<Compiled> children;
};

Compiled compile(const Formula& f, std::map<std::string, std::size_t>& slots) {
  auto slot = [&](const std::string& v) {
    auto [it, inserted] = slots.emplace(v, slots.size());
    return it->second;
  };
  Compiled c;
  c.kind = f.kind;
  switch (f.kind) {
    case FormulaKind::kEdge:
    case FormulaKind::kEqual:
      c.a = slot(f.first);
      c.b = slot(f.second);
      break;
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      c.a = slot(f.first);
      c.children.push_back(compile(f.children[0], slots));
      break;
    default:
      for (const Formula& child : f.children) c.children.push_back(compile(child, slots));
  }
  return c;
}

bool eval(const Graph& g, const Compiled& c, std::vector<Vertex>& env) {
  switch (c.kind) {
    case FormulaKind::kEdge: return g.adjacent(env[c.a], env[c.b]);
    case FormulaKind::kEqual: return env[c.a] == env[c.b];
    case FormulaKind::kNot: return !eval(g, c.children[0], env);
    case FormulaKind::kAnd: return eval(g, c.children[0], env) && eval(g, c.children[1], env);
    case FormulaKind::kOr: return eval(g, c.children[0], env) || eval(g, c.children[1], env);
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      const bool universal = c.kind == FormulaKind::kForall;
      const Vertex saved = env[c.a];
      bool result = universal;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        env[c.a] = v;
        if (eval(g, c.children[0], env) != universal) {
          result = !universal;
          break;
        }
      }
      env[c.a] = saved;
      return result;
    }
  }
  return false;
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(lex(text, 1)).parse(); }

std::string to_string(const Formula& f) {
  std::string out;
  render(f, 0, out);
  return out;
}

std::size_t quantifier_rank(const Formula& f) {
  switch (f.kind) {
    case FormulaKind::kEdge:
    case FormulaKind::kEqual: return 0;
    case FormulaKind::kNot: return quantifier_rank(f.children[0]);
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return std::max(quantifier_rank(f.children[0]), quantifier_rank(f.children[1]));
    case FormulaKind::kForall:
    case FormulaKind::kExists: return quantifier_rank(f.children[0]) + 1;
  }
  return 0;
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 1;
  for (const Formula& c : f.children) n += node_count(c);
  return n;
}

std::set<std::string> free_variables(const Formula& f) {
  std::vector<std::string> bound;
  std::set<std::string> out;
  collect_free(f, bound, out);
  return out;
}

bool evaluate(const Graph& g, const Formula& f, const Assignment& assignment) {
  std::map<std::string, std::size_t> slots;
  Compiled c = compile(f, slots);
  std::vector<Vertex> env(slots.size(), 0);
  for (const std::string& v : free_variables(f)) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw InvalidArgument("unbound free variable '" + v + "'");
    if (it->second >= g.vertex_count()) {
      throw OutOfRange("variable '" + v + "' assigned to vertex " + std::to_string(it->second) +
                       " outside the graph");
    }
    env[slots.at(v)] = it->second;
  }
  return eval(g, c, env);
}

std::vector<Formula> parse_sentence_file(std::string_view text) {
  std::vector<Formula> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      out.push_back(Parser(lex(line, line_no)).parse());
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

namespace {

const char* const kCurated[] = {
    "exists x. x = x",
    "forall x. !E(x,x)",
    "exists x. exists y. E(x,y)",
    "forall x. exists y. E(x,y)",
    "exists x. forall y. !E(x,y)",
    "exists x. exists y. !(x = y)",
    "exists x. exists y. (!(x = y) & !E(x,y))",
    "exists x. forall y. (x = y | E(x,y))",
    "exists x. exists y. exists z. (E(x,y) & E(y,z) & E(x,z))",
    "exists x. exists y. exists z. (E(x,y) & E(x,z) & !(y = z))",
    "forall x. forall y. forall z. (E(x,y) & E(x,z) -> y = z)",
    "exists x. exists y. (E(x,y) & forall z. (E(x,z) -> z = y))",
    "forall x. forall y. (x = y | E(x,y) | exists z. (E(x,z) & E(z,y)))",
    "forall x. (exists y. E(x,y) -> exists y. exists z. (E(x,y) & E(x,z) & !(y = z)))",
    // Every vertex has an antipode at distance exactly 3 reachable through both neighbours.
    "forall x. exists y. (!(x = y | E(x,y) | exists z. (E(x,z) & E(z,y))) & "
    "forall z. (E(x,z) -> z = y | E(z,y) | exists x. (E(z,x) & E(x,y))))",
};

// Renames bound variables by binding depth so alpha-equivalent sentences
// collide.
std::string alpha_key(const Formula& f, std::map<std::string, std::string>& names,
                      std::size_t depth) {
  auto name = [&](const std::string& v) {
    auto it = names.find(v);
    return it == names.end() ? "?" + v : it->second;
  };
  switch (f.kind) {
    case FormulaKind::kEdge: return "E" + name(f.first) + "," + name(f.second);
    case FormulaKind::kEqual: return "=" + name(f.first) + "," + name(f.second);
    case FormulaKind::kNot: return "!" + alpha_key(f.children[0], names, depth);
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return std::string(f.kind == FormulaKind::kAnd ? "&(" : "|(") +
             alpha_key(f.children[0], names, depth) + ";" +
             alpha_key(f.children[1], names, depth) + ")";
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      auto saved = names.find(f.first) == names.end()
                       ? std::optional<std::string>{}
                       : std::optional<std::string>{names[f.first]};
      names[f.first] = "v" + std::to_string(depth);
      std::string body = alpha_key(f.children[0], names, depth + 1);
      if (saved) {
        names[f.first] = *saved;
      } else {
        names.erase(f.first);
      }
      return std::string(f.kind == FormulaKind::kForall ? "A" : "X") + std::to_string(depth) +
             "." + body;
    }
  }
  return {};
}

}  // namespace

std::size_t default_corpus_node_bound(std::size_t rank) {
  return rank <= 1 ? 7 : 6;
}

std::vector<Formula> default_corpus(std::size_t rank, std::size_t max_nodes) {
  if (max_nodes == 0) max_nodes = default_corpus_node_bound(rank);
  std::vector<Formula> out;
  std::unordered_set<std::string> seen;
  auto keep = [&](const Formula& f) {
    if (!is_sentence(f) || quantifier_rank(f) > rank) return;
    std::map<std::string, std::string> names;
    if (seen.insert(alpha_key(f, names, 0)).second) out.push_back(f);
  };
  for (const char* text : kCurated) keep(parse_formula(text));

  const std::vector<std::string> vars{"x", "y", "z"};
  // by_size[s]: formulas with s nodes and rank <= rank.
  std::vector<std::vector<Formula>> by_size(max_nodes + 1);
  if (max_nodes >= 1) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i; j < vars.size(); ++j) {
        by_size[1].push_back(Formula::edge(vars[i], vars[j]));
        by_size[1].push_back(Formula::equal(vars[i], vars[j]));
      }
    }
  }
  for (std::size_t s = 2; s <= max_nodes; ++s) {
    auto& level = by_size[s];
    for (const Formula& f : by_size[s - 1]) {
      if (f.kind != FormulaKind::kNot) level.push_back(Formula::negation(f));
      if (quantifier_rank(f) + 1 > rank) continue;
      std::set<std::string> free = free_variables(f);
      for (const std::string& v : vars) {
        if (!free.contains(v)) continue;
        level.push_back(Formula::exists(v, f));
        level.push_back(Formula::forall(v, f));
      }
    }
    for (std::size_t i = 1; i + 1 < s; ++i) {
      const std::size_t j = s - 1 - i;
      if (i > j) break;
      for (std::size_t p = 0; p < by_size[i].size(); ++p) {
        for (std::size_t q = (i == j ? p + 1 : 0); q < by_size[j].size(); ++q) {
          level.push_back(Formula::conjunction(by_size[i][p], by_size[j][q]));
          level.push_back(Formula::disjunction(by_size[i][p], by_size[j][q]));
        }
      }
    }
  }
  for (const auto& level : by_size)
    for (const Formula& f : level) keep(f);
  return out;
}

ModelComparison compare_models(const Graph& a, const Graph& b, const std::vector<Formula>& corpus,
                               std::size_t rank, unsigned workers) {
  ModelComparison out;
  out.rank = rank;
  std::vector<const Formula*> selected;
  for (const Formula& f : corpus) {
    if (!is_sentence(f)) {
      throw InvalidArgument("corpus entry is not a sentence: " + to_string(f));
    }
    if (quantifier_rank(f) > rank) {
      ++out.skipped;
      continue;
    }
    selected.push_back(&f);
  }
  out.rows.resize(selected.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      const Formula& f = *selected[i];
      out.rows[i] = {to_string(f), quantifier_rank(f), evaluate(a, f), evaluate(b, f)};
    }
  };
  const unsigned threads = std::min<std::size_t>(std::max(1u, workers), selected.size());
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < out.rows.size(); ++i) {
    if (!out.rows[i].agree()) out.separating.push_back(i);
  }
  return out;
}

}  // namespace arrowlab
