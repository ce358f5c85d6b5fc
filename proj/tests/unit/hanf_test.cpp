#include <doctest.h>

#include "../oracles.hpp"
#include "arrowlab/canonical.hpp"
#include "arrowlab/errors.hpp"
#include "arrowlab/hanf.hpp"

using namespace arrowlab;

namespace {

const Graph C12 = cycle_graph(12);
const Graph C6C6 = disjoint_union(cycle_graph(6), cycle_graph(6)).graph;

}  // namespace

TEST_SUITE("hanf") {
  TEST_CASE("balls and neighbourhoods") {
    CHECK(ball(cycle_graph(6), 0, 1) == std::vector<Vertex>{0, 1, 5});
    CHECK(ball(cycle_graph(6), 0, 0) == std::vector<Vertex>{0});
    CHECK(ball(cycle_graph(6), 2, 9).size() == 6);
    CHECK(ball(C6C6, 0, 9).size() == 6);
    RootedGraph n = neighborhood(cycle_graph(6), 0, 1);
    CHECK(n.graph == Graph(3, {{0, 1}, {0, 2}}));
    CHECK(n.root == 0);
    RootedGraph m = neighborhood(path_graph(5), 3, 1);
    CHECK(m.graph == path_graph(3));
    CHECK(m.root == 1);
  }

  TEST_CASE("type encoding layout") {
    CHECK(canonical_code(Graph(1), Vertex{0}) == std::string("\0\0\0\1\1", 5));
    CHECK(canonical_code(complete_graph(2)) == std::string("\0\0\0\2\0\x80", 6));
    CHECK(to_hex(canonical_code(complete_graph(2))) == "000000020080");
    CHECK(canonical_code(Graph(0)) == std::string("\0\0\0\0\0", 5));
    std::mt19937 rng(61);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 9;
      const std::string code = canonical_code(oracle::random_graph(n, 0.5, rng), Vertex{0});
      CHECK(code.size() == 5 + (n * (n - 1) / 2 + 7) / 8);
      CHECK(static_cast<unsigned char>(code[3]) == n);
      CHECK(code[4] == 1);
    }
  }

  TEST_CASE("rooted canonical codes decide rooted isomorphism") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 300; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      const Graph a = oracle::random_graph(n, 0.5, rng);
      const Graph b = trial % 2 ? permute(a, oracle::random_permutation(n, rng))
                                : oracle::random_graph(n, 0.5, rng);
      const Vertex ra = rng() % n, rb = rng() % n;
      CHECK((canonical_code(a, ra) == canonical_code(b, rb)) ==
            oracle::isomorphic(a, b, static_cast<int>(ra), static_cast<int>(rb)));
      CHECK((canonical_code(a) == canonical_code(b)) == oracle::isomorphic(a, b));
    }
  }

  TEST_CASE("canonical order relabels onto the code") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 2 + rng() % 7;
      const Graph g = oracle::random_graph(n, 0.4, rng);
      CanonicalLabeling l = canonical_labeling(g);
      std::vector<Vertex> perm(n);
      for (std::size_t i = 0; i < n; ++i) perm[l.order[i]] = static_cast<Vertex>(i);
      CHECK(canonical_code(permute(g, perm)) == l.code);
    }
  }

  TEST_CASE("regular graphs with many automorphisms") {
    // Petersen graph versus its relabelling, and versus the 5-prism.
    Graph petersen(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                        {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    Graph prism(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                     {3, 8}, {4, 9}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
    std::mt19937 rng(73);
    CHECK(canonical_code(petersen) ==
          canonical_code(permute(petersen, oracle::random_permutation(10, rng))));
    CHECK(canonical_code(petersen) != canonical_code(prism));
    CHECK(canonical_code(cycle_graph(9)) ==
          canonical_code(permute(cycle_graph(9), oracle::random_permutation(9, rng))));
  }

  TEST_CASE("census of the two cycle structures") {
    TypeCensus a = type_census(C12, 2);
    TypeCensus b = type_census(C6C6, 2);
    REQUIRE(a.size() == 1);
    CHECK(a.begin()->second == 12);
    CHECK(a.begin()->first == canonical_type({path_graph(5), 2}));
    CHECK(a == b);
    CHECK(are_r_equivalent(C12, C6C6, 2));
    CHECK_FALSE(are_r_equivalent(C12, C6C6, 3));
    CHECK_FALSE(are_r_equivalent(C12, C6C6, 4));
    CHECK_FALSE(are_r_equivalent(C12, cycle_graph(11), 1));
  }

  TEST_CASE("paths have one type per distance to the nearer end") {
    TypeCensus c = type_census(path_graph(9), 2);
    CHECK(c.size() == 3);
    std::vector<std::size_t> counts;
    for (const auto& [type, count] : c) counts.push_back(count);
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<std::size_t>{2, 2, 5});
  }

  TEST_CASE("certificates") {
    HanfCertificate one = hanf_certificate(C12, C6C6, 1);
    CHECK(one.radius == 2);
    CHECK(one.equivalent);
    CHECK(one.conclusion == "FO-1-equivalent");
    CHECK(one.warnings.empty());
    HanfCertificate two = hanf_certificate(C12, C6C6, 2);
    CHECK(two.radius == 4);
    CHECK_FALSE(two.equivalent);
    CHECK(two.conclusion == "inconclusive");
    CHECK(hanf_certificate(Graph(1), Graph(1), 1).warnings.size() == 1);
    CHECK_THROWS_AS(hanf_certificate(C12, C6C6, 0), PreconditionViolated);
    CHECK(hanf_certificate(C12, C12, 40).equivalent);
    CHECK_THROWS_AS(hanf_radius(63), OutOfRange);
  }

  TEST_CASE("equivalence is monotone in the radius") {
    std::mt19937 rng(79);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 4 + rng() % 8;
      const Graph a = oracle::random_graph(n, 0.25, rng);
      const Graph b = oracle::random_graph(n, 0.25, rng);
      for (std::size_t r = 4; r >= 1; --r) {
        if (are_r_equivalent(a, b, r)) CHECK(are_r_equivalent(a, b, r - 1));
      }
    }
    for (std::size_t k = 3; k <= 9; ++k) {
      const Graph a = cycle_graph(2 * k);
      const Graph b = disjoint_union(cycle_graph(k), cycle_graph(k)).graph;
      for (std::size_t r = 0; r <= k; ++r) {
        CHECK(are_r_equivalent(a, b, r) == (2 * r + 1 < k));
      }
    }
  }

  TEST_CASE("types ignore vertex names and worker count") {
    std::mt19937 rng(83);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 3 + rng() % 10;
      const Graph g = oracle::random_graph(n, 0.3, rng);
      const Graph h = permute(g, oracle::random_permutation(n, rng));
      const std::size_t r = rng() % 4;
      CHECK(type_census(g, r) == type_census(h, r));
      std::size_t total = 0;
      for (const auto& [type, count] : type_census(g, r)) total += count;
      CHECK(total == n);
      const Graph other = oracle::random_graph(n, 0.3, rng);
      CHECK(are_r_equivalent(g, g, r));
      CHECK(are_r_equivalent(g, other, r) == are_r_equivalent(other, g, r));
      CHECK(type_census(g, r, 4) == type_census(g, r));
      auto map = r_equivalence_bijection(g, h, r);
      REQUIRE(map.has_value());
      CHECK(map->is_injective());
      auto tg = r_types(g, r), th = r_types(h, r);
      for (Vertex v = 0; v < n; ++v) CHECK(tg[v] == th[(*map)[v]]);
    }
    CHECK_FALSE(r_equivalence_bijection(C12, C6C6, 3).has_value());
  }

  TEST_CASE("cached and uncached types agree") {
    TypeCache cache;
    std::mt19937 rng(89);
    const Graph g = oracle::random_graph(14, 0.2, rng);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      CHECK(r_type(g, v, 2, &cache) == r_type(g, v, 2));
    }
    CHECK(cache.size() <= g.vertex_count());
  }
}
