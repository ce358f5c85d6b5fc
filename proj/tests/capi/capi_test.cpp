#include <doctest.h>

#include <cstring>
#include <memory>
#include <string>

#include "arrowlab/arrowlab.h"

namespace {

struct Free {
  void operator()(al_graph* g) const { al_graph_free(g); }
  void operator()(al_marked* m) const { al_marked_free(m); }
  void operator()(al_text* t) const { al_text_free(t); }
};
using GraphPtr = std::unique_ptr<al_graph, Free>;
using MarkedPtr = std::unique_ptr<al_marked, Free>;
using TextPtr = std::unique_ptr<al_text, Free>;

GraphPtr named(const char* name) {
  al_graph* g = nullptr;
  REQUIRE(al_graph_named(name, &g) == AL_OK);
  return GraphPtr(g);
}

MarkedPtr p5_sender() {
  al_marked* m = nullptr;
  REQUIRE(al_marked_parse("p graph 5 4\ne 0 1\ne 1 2\ne 2 3\ne 3 4\nme e 0 1\nme f 3 4\n", &m) ==
          AL_OK);
  return MarkedPtr(m);
}

std::string take(al_text* t) {
  TextPtr owned(t);
  return std::string(al_text_data(t), al_text_size(t));
}

al_options options(unsigned workers = 1, al_format format = AL_FORMAT_TEXT) {
  al_options o;
  al_options_init(&o);
  o.workers = workers;
  o.format = format;
  return o;
}

}  // namespace

TEST_CASE("graphs through the C interface") {
  CHECK(std::strlen(al_version()) > 0);
  al_graph* g = nullptr;
  REQUIRE(al_graph_parse("p graph 3 2\ne 0 1\ne 1 2\n", &g) == AL_OK);
  GraphPtr path(g);
  CHECK(al_graph_vertex_count(g) == 3);
  CHECK(al_graph_edge_count(g) == 2);
  uint32_t u = 0, v = 0;
  CHECK(al_graph_edge(g, 1, &u, &v) == AL_OK);
  CHECK((u == 1 && v == 2));
  CHECK(al_graph_edge(g, 2, &u, &v) == AL_ERR_OUT_OF_RANGE);

  al_text* text = nullptr;
  REQUIRE(al_graph_write(g, 1, &text) == AL_OK);
  CHECK(take(text) == "{\"edges\":[[0,1],[1,2]],\"n\":3}\n");

  const uint32_t pairs[] = {0, 1, 1, 2};
  al_graph* built = nullptr;
  REQUIRE(al_graph_from_edges(3, pairs, 2, &built) == AL_OK);
  GraphPtr owned(built);
  int iso = 0;
  CHECK(al_graph_isomorphic(g, built, &iso) == AL_OK);
  CHECK(iso == 1);

  int64_t d = 0;
  CHECK(al_graph_distance(g, 0, 2, &d) == AL_OK);
  CHECK(d == 2);
  GraphPtr two = named("E2");
  CHECK(al_graph_distance(two.get(), 0, 1, &d) == AL_OK);
  CHECK(d == -1);
  size_t k = 0;
  GraphPtr k5 = named("K5");
  CHECK(al_graph_connectivity(k5.get(), &k) == AL_OK);
  CHECK(k == 4);
  int connected = 0;
  CHECK(al_graph_connected(two.get(), &connected) == AL_OK);
  CHECK(connected == 0);

  al_graph* joined = nullptr;
  REQUIRE(al_graph_disjoint_union(k5.get(), g, &joined) == AL_OK);
  CHECK(al_graph_vertex_count(joined) == 8);
  al_graph_free(joined);
}

TEST_CASE("errors map to status codes") {
  al_graph* g = nullptr;
  CHECK(al_graph_parse("p graph 2 1\ne 0 5\n", &g) == AL_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(al_last_error()).find("line 2") != std::string::npos);
  CHECK(al_graph_parse(nullptr, &g) == AL_ERR_INVALID_ARGUMENT);
  const uint32_t loop[] = {1, 1};
  CHECK(al_graph_from_edges(2, loop, 1, &g) == AL_ERR_INVALID_ARGUMENT);
  CHECK(al_graph_read_file("/nonexistent/graph.g", &g) == AL_ERR_IO);
  CHECK(al_graph_named("Q7", &g) == AL_ERR_INVALID_ARGUMENT);
  CHECK(std::string(al_status_name(AL_ERR_BUDGET_EXCEEDED)).size() > 0);

  GraphPtr k6 = named("K6"), k3 = named("K3");
  al_options o = options();
  o.budget = 2;
  int arrows = -1;
  CHECK(al_arrows(k6.get(), k3.get(), k3.get(), &o, &arrows) == AL_ERR_BUDGET_EXCEEDED);
  CHECK(arrows == -1);
  o.budget = 0;
  CHECK(al_arrows(k6.get(), k3.get(), k3.get(), &o, &arrows) == AL_ERR_INVALID_ARGUMENT);
  o = options(0);
  CHECK(al_arrows(k6.get(), k3.get(), k3.get(), &o, &arrows) == AL_ERR_INVALID_ARGUMENT);

  MarkedPtr s = p5_sender();
  al_marked* chain = nullptr;
  CHECK(al_chain_senders(s.get(), 2, &chain) == AL_ERR_INVALID_ARGUMENT);
  CHECK(al_formula_rank("forall x.", nullptr) == AL_ERR_INVALID_ARGUMENT);
  size_t rank = 0;
  CHECK(al_formula_rank("forall x.", &rank) == AL_ERR_PARSE);
  GraphPtr c9 = named("C9"), p3 = named("P3");
  al_marked* far = nullptr;
  CHECK(al_build_far_apart(s.get(), p3.get(), p3.get(), 0, 0, nullptr, &far) ==
        AL_ERR_PRECONDITION);

  // Null handles are tolerated by the free functions.
  al_graph_free(nullptr);
  al_marked_free(nullptr);
  al_text_free(nullptr);
}

TEST_CASE("arrowing through the C interface") {
  GraphPtr k6 = named("K6"), k5 = named("K5"), k3 = named("K3");
  al_options o = options();
  int yes = -1;
  CHECK(al_arrows(k6.get(), k3.get(), k3.get(), &o, &yes) == AL_OK);
  CHECK(yes == 1);
  CHECK(al_arrows(k5.get(), k3.get(), k3.get(), nullptr, &yes) == AL_OK);
  CHECK(yes == 0);
  CHECK(al_is_arrow_minimal(k6.get(), k3.get(), k3.get(), &o, &yes) == AL_OK);
  CHECK(yes == 1);

  al_text* c = nullptr;
  REQUIRE(al_find_good_coloring(k5.get(), k3.get(), k3.get(), &o, &c) == AL_OK);
  REQUIRE(c != nullptr);
  const std::string coloring = take(c);
  CHECK(coloring.size() == 10);
  int good = 0;
  CHECK(al_is_good_coloring(k5.get(), k3.get(), k3.get(), coloring.c_str(), &good) == AL_OK);
  CHECK(good == 1);
  CHECK(al_is_good_coloring(k5.get(), k3.get(), k3.get(), "RRRRRRRRRR", &good) == AL_OK);
  CHECK(good == 0);
  CHECK(al_is_good_coloring(k5.get(), k3.get(), k3.get(), "RB", &good) ==
        AL_ERR_INVALID_ARGUMENT);
  CHECK(al_find_good_coloring(k6.get(), k3.get(), k3.get(), &o, &c) == AL_OK);
  CHECK(c == nullptr);

  GraphPtr p3 = named("P3");
  uint64_t count = 0;
  CHECK(al_count_good_colorings(p3.get(), p3.get(), p3.get(), &o, &count) == AL_OK);
  CHECK(count == 2);
}

TEST_CASE("gadgets and the witness pipeline through the C interface") {
  MarkedPtr s = p5_sender();
  GraphPtr p3 = named("P3");
  int ok = 0;
  CHECK(al_verify_sender(s.get(), p3.get(), p3.get(), 0, nullptr, &ok) == AL_OK);
  CHECK(ok == 1);
  CHECK(al_verify_sender(s.get(), p3.get(), p3.get(), 1, nullptr, &ok) == AL_OK);
  CHECK(ok == 0);
  CHECK(al_is_sender_minimal(s.get(), p3.get(), p3.get(), 0, nullptr, &ok) == AL_OK);
  CHECK(ok == 1);

  al_marked* joined = nullptr;
  size_t collapsed = 7;
  REQUIRE(al_edge_join(s.get(), "f", s.get(), "e", &joined, &collapsed) == AL_OK);
  MarkedPtr join_owned(joined);
  CHECK(collapsed == 0);
  al_graph* jg = nullptr;
  REQUIRE(al_marked_graph(joined, &jg) == AL_OK);
  GraphPtr join_graph(jg);
  GraphPtr p8 = named("P8");
  int iso = 0;
  CHECK(al_graph_isomorphic(jg, p8.get(), &iso) == AL_OK);
  CHECK(iso == 1);

  al_marked* chain = nullptr;
  REQUIRE(al_chain_senders(s.get(), 5, &chain) == AL_OK);
  MarkedPtr chain_owned(chain);
  al_marked* closed = nullptr;
  REQUIRE(al_close_chain(chain, 2, &closed) == AL_OK);
  MarkedPtr closed_owned(closed);
  uint32_t u = 0, v = 0;
  CHECK(al_marked_vertex(closed, "u", &u) == AL_OK);
  CHECK(al_marked_vertex(closed, "v", &v) == AL_OK);
  CHECK(al_marked_vertex(closed, "nope", &v) == AL_ERR_INVALID_ARGUMENT);
  al_graph* cg = nullptr;
  REQUIRE(al_marked_graph(closed, &cg) == AL_OK);
  GraphPtr cycle(cg);
  int64_t d = 0;
  CHECK(al_graph_distance(cg, u, v, &d) == AL_OK);
  CHECK(d == 6);

  al_marked* far = nullptr;
  REQUIRE(al_build_far_apart(s.get(), p3.get(), p3.get(), 4, 0, nullptr, &far) == AL_OK);
  MarkedPtr far_owned(far);
  al_graph *f1 = nullptr, *f2 = nullptr;
  REQUIRE(al_witness_pair(far, &f1, &f2) == AL_OK);
  GraphPtr f1_owned(f1), f2_owned(f2);
  CHECK(al_graph_vertex_count(f1) == 52);
  int eq = 0;
  CHECK(al_are_r_equivalent(f1, f2, 2, nullptr, &eq) == AL_OK);
  CHECK(eq == 1);
  int bij = 0;
  CHECK(al_verify_explicit_bijection(far, 1, nullptr, &bij) == AL_OK);
  CHECK(bij == 1);

  al_options o = options();
  int status = -1;
  al_text* report = nullptr;
  REQUIRE(al_report_witness_run(s.get(), p3.get(), p3.get(), 1, 0, &o, &status, &report) == AL_OK);
  CHECK(status == AL_WITNESS_SUCCESS);
  CHECK(take(report).rfind("status SUCCESS\n", 0) == 0);
}

TEST_CASE("first-order calls and type encodings") {
  size_t rank = 0;
  CHECK(al_formula_rank("forall x. exists y. E(x,y)", &rank) == AL_OK);
  CHECK(rank == 2);
  GraphPtr c5 = named("C5");
  int value = 0;
  CHECK(al_evaluate(c5.get(), "forall x. exists y. E(x,y)", &value) == AL_OK);
  CHECK(value == 1);
  CHECK(al_evaluate(c5.get(), "E(x,y)", &value) == AL_ERR_INVALID_ARGUMENT);
  al_text* hex = nullptr;
  REQUIRE(al_r_type_hex(c5.get(), 0, 1, &hex) == AL_OK);
  CHECK(take(hex).rfind("0000000301", 0) == 0);
}

TEST_CASE("reports do not depend on the worker count") {
  GraphPtr k5 = named("K5"), k3 = named("K3"), c12 = named("C12");
  al_graph* c6c6 = nullptr;
  GraphPtr c6 = named("C6");
  REQUIRE(al_graph_disjoint_union(c6.get(), c6.get(), &c6c6) == AL_OK);
  GraphPtr c6c6_owned(c6c6);
  for (al_format format : {AL_FORMAT_TEXT, AL_FORMAT_STRUCTURED}) {
    al_options one = options(1, format), many = options(8, format);
    al_text *a = nullptr, *b = nullptr;
    int va = 0, vb = 0;
    REQUIRE(al_report_arrow_decide(k5.get(), k3.get(), k3.get(), &one, &va, &a) == AL_OK);
    REQUIRE(al_report_arrow_decide(k5.get(), k3.get(), k3.get(), &many, &vb, &b) == AL_OK);
    CHECK(take(a) == take(b));
    CHECK(va == vb);
    REQUIRE(al_report_hanf_certificate(c12.get(), c6c6, 1, &one, &va, &a) == AL_OK);
    REQUIRE(al_report_hanf_certificate(c12.get(), c6c6, 1, &many, &vb, &b) == AL_OK);
    CHECK(take(a) == take(b));
    REQUIRE(al_report_fo_compare(c12.get(), c6c6, nullptr, 2, &one, &va, &a) == AL_OK);
    REQUIRE(al_report_fo_compare(c12.get(), c6c6, nullptr, 2, &many, &vb, &b) == AL_OK);
    CHECK(take(a) == take(b));
  }
  al_options s = options(1, AL_FORMAT_STRUCTURED);
  al_text* r = nullptr;
  REQUIRE(al_report_graph_info(c12.get(), &s, &r) == AL_OK);
  CHECK(take(r).rfind("arrowlab-report v1\ncommand: graph info\n", 0) == 0);
}
