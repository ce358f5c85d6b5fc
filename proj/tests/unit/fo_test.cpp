#include <doctest.h>

#include "../oracles.hpp"
#include "arrowlab/errors.hpp"
#include "arrowlab/fo.hpp"

using namespace arrowlab;

namespace {

// Direct recursion over a name -> vertex map.
bool reference_eval(const Graph& g, const Formula& f, Assignment env) {
  switch (f.kind) {
    case FormulaKind::kEdge: return g.adjacent(env.at(f.first), env.at(f.second));
    case FormulaKind::kEqual: return env.at(f.first) == env.at(f.second);
    case FormulaKind::kNot: return !reference_eval(g, f.children[0], env);
    case FormulaKind::kAnd:
      return reference_eval(g, f.children[0], env) && reference_eval(g, f.children[1], env);
    case FormulaKind::kOr:
      return reference_eval(g, f.children[0], env) || reference_eval(g, f.children[1], env);
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      std::size_t hits = 0;
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        env[f.first] = v;
        hits += reference_eval(g, f.children[0], env);
      }
      return f.kind == FormulaKind::kExists ? hits > 0 : hits == g.vertex_count();
    }
  }
  return false;
}

std::pair<std::size_t, std::size_t> error_position(const std::string& text) {
  try {
    parse_formula(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_SUITE("fo") {
  TEST_CASE("parsing") {
    Formula f = parse_formula("forall x. exists y. E(x,y)");
    CHECK(f == Formula::forall("x", Formula::exists("y", Formula::edge("x", "y"))));
    CHECK(parse_formula("x = y & !E(x,y) | y = z") ==
          Formula::disjunction(Formula::conjunction(Formula::equal("x", "y"),
                                                    Formula::negation(Formula::edge("x", "y"))),
                               Formula::equal("y", "z")));
    CHECK(parse_formula("x = y -> y = z") ==
          Formula::disjunction(Formula::negation(Formula::equal("x", "y")),
                               Formula::equal("y", "z")));
    CHECK(parse_formula("a = b -> b = c -> c = d") ==
          parse_formula("a = b -> (b = c -> c = d)"));
    CHECK(parse_formula("E(x,y) <-> E(y,x)") ==
          parse_formula("(!E(x,y) | E(y,x)) & (!E(y,x) | E(x,y))"));
    CHECK(parse_formula("exists v_1. v_1 = v_1") ==
          Formula::exists("v_1", Formula::equal("v_1", "v_1")));
    CHECK(parse_formula("E(x,y) & exists z. E(y,z) | E(z,x)") ==
          Formula::conjunction(Formula::edge("x", "y"),
                               Formula::exists("z", parse_formula("E(y,z) | E(z,x)"))));
  }

  TEST_CASE("parse errors report positions") {
    using P = std::pair<std::size_t, std::size_t>;
    CHECK(error_position("forall x E(x,x)") == P{1, 10});
    CHECK(error_position("E(x y)") == P{1, 5});
    CHECK(error_position("x = ") == P{1, 5});
    CHECK(error_position("x = y)") == P{1, 6});
    CHECK(error_position("x = Y") == P{1, 5});
    CHECK(error_position("x - y") == P{1, 3});
    CHECK(error_position("exists x.\n  E(x,x) &") == P{2, 11});
    CHECK(error_position("") == P{1, 1});
    CHECK_THROWS_AS(parse_sentence_file("# c\nexists x. x = x\n\nforall y.\n"), ParseError);
    try {
      parse_sentence_file("# c\nexists x. x = x\n\nforall y.\n");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
    CHECK(parse_sentence_file("# c\n exists x. x = x\n\n  # d\nforall y. y = y").size() == 2);
  }

  TEST_CASE("quantifier rank") {
    CHECK(quantifier_rank(parse_formula("E(x,y)")) == 0);
    CHECK(quantifier_rank(parse_formula("forall x. exists y. E(x,y)")) == 2);
    CHECK(quantifier_rank(parse_formula("(exists x. x = x) & forall y. forall z. y = z")) == 2);
    CHECK(quantifier_rank(parse_formula("!exists x. !exists y. !exists z. E(x,z)")) == 3);
    CHECK(quantifier_rank(parse_formula("exists x. exists x. x = x")) == 2);
  }

  TEST_CASE("quantifier rank agrees with the stack walk on random formulas") {
    std::mt19937 rng(97);
    for (int trial = 0; trial < 1000; ++trial) {
      Formula f = oracle::random_formula(rng, 1 + rng() % 7);
      CHECK(quantifier_rank(f) == oracle::quantifier_rank(f));
    }
  }

  TEST_CASE("printing round-trips") {
    CHECK(to_string(parse_formula("!(x = y)")) == "!(x = y)");
    CHECK(to_string(parse_formula("forall x. exists y. E(x,y)")) == "forall x. exists y. E(x,y)");
    CHECK(to_string(parse_formula("((E(x,y)))")) == "E(x,y)");
    CHECK(to_string(parse_formula("(a = b | b = c) & c = d")) == "(a = b | b = c) & c = d");
    CHECK(to_string(parse_formula("a = b & (b = c & c = d)")) == "a = b & (b = c & c = d)");
    CHECK(to_string(parse_formula("(exists x. x = x) & x = x")) == "(exists x. x = x) & x = x");
    std::mt19937 rng(101);
    for (int trial = 0; trial < 1000; ++trial) {
      Formula f = oracle::random_formula(rng, 1 + rng() % 6);
      REQUIRE(parse_formula(to_string(f)) == f);
    }
  }

  TEST_CASE("free variables") {
    CHECK(free_variables(parse_formula("exists x. E(x,y)")) == std::set<std::string>{"y"});
    CHECK(free_variables(parse_formula("E(x,x) & exists x. x = x")) ==
          std::set<std::string>{"x"});
    CHECK(is_sentence(parse_formula("forall x. exists y. E(x,y)")));
    CHECK(node_count(parse_formula("forall x. exists y. E(x,y)")) == 3);
  }

  TEST_CASE("evaluation") {
    const Formula triangle = parse_formula("exists x. exists y. exists z. (E(x,y) & E(y,z) & E(x,z))");
    CHECK(evaluate(complete_graph(3), triangle));
    CHECK_FALSE(evaluate(cycle_graph(4), triangle));
    const Formula total = parse_formula("forall x. exists y. E(x,y)");
    CHECK(evaluate(cycle_graph(5), total));
    CHECK_FALSE(evaluate(path_graph(1), total));
    CHECK(evaluate(Graph(0), total));
    CHECK_FALSE(evaluate(Graph(0), parse_formula("exists x. x = x")));
    CHECK(evaluate(path_graph(3), parse_formula("E(x,y)"), {{"x", 0}, {"y", 1}}));
    CHECK_FALSE(evaluate(path_graph(3), parse_formula("E(x,y)"), {{"x", 0}, {"y", 2}}));
    CHECK_THROWS_AS(evaluate(path_graph(3), parse_formula("E(x,y)"), {{"x", 0}}), InvalidArgument);
    CHECK_THROWS_AS(evaluate(path_graph(3), parse_formula("E(x,y)"), {{"x", 0}, {"y", 3}}),
                    OutOfRange);
    // Shadowing: the inner x is rebound.
    CHECK(evaluate(path_graph(3), parse_formula("exists x. (E(x,y) & exists x. x = y)"),
                   {{"y", 1}}));
  }

  TEST_CASE("evaluation matches the reference on random inputs") {
    std::mt19937 rng(103);
    for (int trial = 0; trial < 600; ++trial) {
      const Graph g = oracle::random_graph(1 + rng() % 5, 0.5, rng);
      const Formula f = oracle::random_formula(rng, 1 + rng() % 5);
      Assignment env;
      for (const char* v : {"x", "y", "z", "w"}) env[v] = rng() % g.vertex_count();
      const bool got = evaluate(g, f, env);
      CHECK(got == reference_eval(g, f, env));
      // Values given to variables that are not free do not matter.
      Assignment other = env;
      const std::set<std::string> free = free_variables(f);
      for (auto& [name, value] : other)
        if (!free.contains(name)) value = rng() % g.vertex_count();
      other["unused"] = 0;
      CHECK(evaluate(g, f, other) == got);
    }
  }

  TEST_CASE("sentences are isomorphism invariant") {
    std::mt19937 rng(107);
    const auto corpus = default_corpus(2);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 2 + rng() % 5;
      const Graph g = oracle::random_graph(n, 0.5, rng);
      const Graph h = permute(g, oracle::random_permutation(n, rng));
      CHECK(compare_models(g, h, corpus, 2).separating.empty());
    }
  }

  TEST_CASE("default corpus") {
    for (std::size_t r = 0; r <= 3; ++r) {
      const auto corpus = default_corpus(r);
      std::set<std::string> printed;
      for (const Formula& f : corpus) {
        CHECK(is_sentence(f));
        CHECK(quantifier_rank(f) <= r);
        printed.insert(to_string(f));
      }
      CHECK(printed.size() == corpus.size());
    }
    CHECK(default_corpus(0).empty());
    CHECK(default_corpus(1).size() > 2);
    CHECK(default_corpus(2).size() > default_corpus(1).size());
    CHECK(default_corpus(3).size() > default_corpus(2).size());
    CHECK(default_corpus_node_bound(1) == 7);
    CHECK(default_corpus_node_bound(4) == 6);
  }

  TEST_CASE("model comparison") {
    const Graph c12 = cycle_graph(12);
    const Graph c6c6 = disjoint_union(cycle_graph(6), cycle_graph(6)).graph;
    ModelComparison low = compare_models(c12, c6c6, default_corpus(2), 2);
    CHECK(low.separating.empty());
    CHECK(low.skipped == 0);
    // Rank 4 sees the missing antipodes in the 6-cycles.
    ModelComparison high = compare_models(c12, c6c6, default_corpus(4), 4);
    REQUIRE_FALSE(high.separating.empty());
    CHECK(high.rows[high.separating.front()].rank == 4);

    ModelComparison mixed = compare_models(complete_graph(3), path_graph(3),
                                           {parse_formula("exists x. exists y. exists z. (E(x,y) & E(y,z) & E(x,z))"),
                                            parse_formula("exists x. x = x")},
                                           2);
    CHECK(mixed.skipped == 1);
    REQUIRE(mixed.rows.size() == 1);
    CHECK(mixed.rows[0].agree());

    ModelComparison triangle =
        compare_models(complete_graph(3), path_graph(3),
                       {parse_formula("exists x. exists y. exists z. (E(x,y) & E(y,z) & E(x,z))")}, 3);
    CHECK(triangle.separating == std::vector<std::size_t>{0});
    CHECK(triangle.rows[0].in_a);
    CHECK_FALSE(triangle.rows[0].in_b);

    CHECK_THROWS_AS(compare_models(c12, c6c6, {parse_formula("E(x,x)")}, 1), InvalidArgument);
    const auto corpus = default_corpus(3);
    const auto one = compare_models(c12, cycle_graph(11), corpus, 3);
    const auto four = compare_models(c12, cycle_graph(11), corpus, 3, 4);
    CHECK(one.separating == four.separating);
  }
}
