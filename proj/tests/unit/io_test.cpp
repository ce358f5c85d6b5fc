#include <doctest.h>

#include <fstream>

#include "../oracles.hpp"
#include "arrowlab/errors.hpp"
#include "arrowlab/io.hpp"

using namespace arrowlab;

TEST_SUITE("io") {
  TEST_CASE("text format") {
    Graph g = parse_graph("# a triangle\n\np graph 3 3\ne 0 1\ne 2 1\n  e 0 2  \n");
    CHECK(g == complete_graph(3));
    CHECK(write_graph(g) == "p graph 3 3\ne 0 1\ne 0 2\ne 1 2\n");
    CHECK(parse_graph("p graph 0 0\n") == Graph(0));
    CHECK(parse_graph("p graph 4 0") == empty_graph(4));
  }

  TEST_CASE("json format") {
    Graph g = parse_graph(" {\"n\": 4, \"edges\": [[0, 1], [3, 2]]}");
    CHECK(g == Graph(4, {{0, 1}, {2, 3}}));
    CHECK(write_graph_json(g) == "{\"edges\":[[0,1],[2,3]],\"n\":4}");
    CHECK(parse_graph(write_graph_json(cycle_graph(7))) == cycle_graph(7));
    CHECK_THROWS_AS(parse_graph("{\"n\": 3}"), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0]]}"), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[0, 1]"), ParseError);
    CHECK_THROWS_AS(parse_graph("{\"n\": 3, \"edges\": [[1, 1]]}"), InvalidArgument);
  }

  TEST_CASE("marked graphs") {
    const std::string text = "p graph 5 4\ne 0 1\ne 1 2\ne 2 3\ne 3 4\nme e 0 1\nme f 4 3\nmv u 2\n";
    MarkedGraph m = parse_marked_graph(text);
    CHECK(m.edge_mark("f") == MarkedEdge{4, 3});
    CHECK(m.vertex_mark("u") == 2);
    CHECK(write_marked_graph(m) == text);
    CHECK(parse_graph(text) == path_graph(5));
    CHECK(parse_marked_graph(write_marked_graph(m)) == m);
  }

  TEST_CASE("parse errors carry positions") {
    auto position = [](const std::string& text) -> std::pair<std::size_t, std::size_t> {
      try {
        parse_marked_graph(text);
      } catch (const ParseError& e) {
        return {e.line(), e.column()};
      }
      return {0, 0};
    };
    CHECK(position("") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(position("q graph 1 0\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(position("p graph 3 1\ne 0 x\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(position("p graph 3 1\n# c\ne 0 0\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(position("p graph 3 1\ne 0 3\n") == std::pair<std::size_t, std::size_t>{2, 1});
    CHECK(position("p graph 3 2\ne 0 1\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(position("p graph 3 2\ne 0 1\ne 1 0\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(position("p graph 3 1\ne 0 1\nme e 1 2\n") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(position("p graph 3 1\ne 0 1\nmv u 3\n") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(position("p graph 3 1\ne 0 1\nme e 0 1\nme e 1 0\n") ==
          std::pair<std::size_t, std::size_t>{4, 2});
    CHECK(position("p graph 3 1\ne 0 1\nz\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(position("p graph 3 1\ne 0 1 2\n") == std::pair<std::size_t, std::size_t>{2, 1});
  }

  TEST_CASE("colourings") {
    EdgeColoring c{Color::kRed, Color::kBlue, Color::kBlue};
    CHECK(write_coloring(c) == "c 0 0\nc 1 1\nc 2 1\n");
    CHECK(parse_coloring(write_coloring(c), 3) == c);
    CHECK(coloring_string(c) == "RBB");
    PartialColoring p = parse_partial_coloring("c 2 0\n", 3);
    CHECK_FALSE(p[0].has_value());
    CHECK(p[2] == Color::kRed);
    CHECK_THROWS_AS(parse_coloring("c 0 0\n", 2), InvalidArgument);
    CHECK_THROWS_AS(parse_coloring("c 0 2\nc 1 0\n", 2), ParseError);
    CHECK_THROWS_AS(parse_coloring("c 0 0\nc 0 1\n", 2), ParseError);
    CHECK_THROWS_AS(parse_coloring("c 5 0\n", 2), ParseError);
  }

  TEST_CASE("round trips on random graphs") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = oracle::random_graph(rng() % 12, 0.3, rng);
      CHECK(parse_graph(write_graph(g)) == g);
      CHECK(parse_graph(write_graph_json(g)) == g);
    }
  }

  TEST_CASE("shipped data files parse") {
    const std::string dir = ARROWLAB_DATA_DIR;
    auto slurp = [&](const std::string& name) {
      std::ifstream in(dir + "/" + name);
      REQUIRE(in.good());
      return std::string(std::istreambuf_iterator<char>(in), {});
    };
    CHECK(parse_graph(slurp("k6.g")) == complete_graph(6));
    CHECK(are_isomorphic(parse_graph(slurp("c12.g")), cycle_graph(12)));
    MarkedGraph p5 = parse_marked_graph(slurp("p5.mg"));
    CHECK(p5.edge_mark("e") == MarkedEdge{0, 1});
    CHECK(p5.edge_mark("f") == MarkedEdge{3, 4});
  }
}
