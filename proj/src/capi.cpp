#include "arrowlab/arrowlab.h"

#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "arrowlab/errors.hpp"
#include "arrowlab/io.hpp"
#include "arrowlab/report.hpp"

struct al_graph {
  arrowlab::Graph g;
};

struct al_marked {
  arrowlab::MarkedGraph m;
};

struct al_text {
  std::string s;
};

namespace {

using namespace arrowlab;

thread_local std::string last_error;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Body>
al_status guard(Body&& body) {
  try {
    body();
    last_error.clear();
    return AL_OK;
  } catch (const ParseError& e) {
    last_error = e.what();
    return AL_ERR_PARSE;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    return AL_ERR_BUDGET_EXCEEDED;
  } catch (const ConstructionFailed& e) {
    last_error = e.what();
    return AL_ERR_CONSTRUCTION;
  } catch (const PreconditionViolated& e) {
    last_error = e.what();
    return AL_ERR_PRECONDITION;
  } catch (const OutOfRange& e) {
    last_error = e.what();
    return AL_ERR_OUT_OF_RANGE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return AL_ERR_INVALID_ARGUMENT;
  } catch (const IoError& e) {
    last_error = e.what();
    return AL_ERR_IO;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return AL_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return AL_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return AL_ERR_INTERNAL;
  }
}

template <class T>
const T& need(const T* p, const char* what) {
  if (p == nullptr) throw InvalidArgument(std::string("null ") + what);
  return *p;
}

template <class T>
void need_out(T* p) {
  if (p == nullptr) throw InvalidArgument("null output pointer");
}

const Graph& G(const al_graph* g) { return need(g, "graph").g; }
const MarkedGraph& M(const al_marked* m) { return need(m, "marked graph").m; }

void check_vertex(const Graph& g, std::uint32_t v) {
  if (v >= g.vertex_count()) {
    throw OutOfRange("vertex " + std::to_string(v) + " outside the graph");
  }
}

al_options resolve(const al_options* options) {
  al_options out;
  al_options_init(&out);
  if (options != nullptr) out = *options;
  if (out.budget < 1) throw InvalidArgument("budget must be at least 1");
  if (out.workers < 1) throw InvalidArgument("workers must be at least 1");
  if (out.format != AL_FORMAT_TEXT && out.format != AL_FORMAT_STRUCTURED) {
    throw InvalidArgument("unknown output format");
  }
  return out;
}

SearchOptions search(const al_options& o) { return SearchOptions{o.budget, o.workers}; }

ReportFormat format(const al_options& o) {
  return o.format == AL_FORMAT_STRUCTURED ? ReportFormat::kStructured : ReportFormat::kText;
}

std::string read_file(const char* path) {
  if (path == nullptr) throw InvalidArgument("null path");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(std::string("cannot open '") + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string text_arg(const char* s, const char* what) {
  if (s == nullptr) throw InvalidArgument(std::string("null ") + what);
  return s;
}

void emit(al_text** out, std::string s) {
  need_out(out);
  *out = new al_text{std::move(s)};
}

void emit(al_text** out, const Report& report, const al_options& o) {
  emit(out, report.render(format(o)));
}

void echo(Report& report, const std::string& key, const Graph& g) {
  report.field(key + ".vertices", std::to_string(g.vertex_count()));
  report.field(key + ".edges", std::to_string(g.edge_count()));
}

void echo_budget(Report& report, const al_options& o) {
  report.field("budget", std::to_string(o.budget));
}

Polarity polarity(int positive) { return positive ? Polarity::kPositive : Polarity::kNegative; }

std::string distance_string(const Distance& d) { return d ? std::to_string(*d) : "inf"; }

int to_int(Verdict v) {
  switch (v) {
    case Verdict::kFalse: return AL_FALSE;
    case Verdict::kTrue: return AL_TRUE;
    case Verdict::kUnknown: return AL_UNKNOWN;
  }
  return AL_UNKNOWN;
}

int to_int(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::kSuccess: return AL_WITNESS_SUCCESS;
    case WitnessStatus::kPartial: return AL_WITNESS_PARTIAL;
    case WitnessStatus::kNoArrowingSeparation: return AL_WITNESS_NO_ARROWING_SEPARATION;
    case WitnessStatus::kNotHanfEquivalent: return AL_WITNESS_NOT_HANF_EQUIVALENT;
  }
  return AL_WITNESS_PARTIAL;
}

Graph named_graph(const std::string& name) {
  if (name.size() < 2) throw InvalidArgument("unknown graph name '" + name + "'");
  std::size_t n = 0;
  try {
    std::size_t used = 0;
    n = std::stoul(name.substr(1), &used);
    if (used != name.size() - 1) throw InvalidArgument("");
  } catch (const std::exception&) {
    throw InvalidArgument("unknown graph name '" + name + "'");
  }
  switch (name[0]) {
    case 'K': return complete_graph(n);
    case 'C': return cycle_graph(n);
    case 'P': return path_graph(n);
    case 'E': return empty_graph(n);
    default: throw InvalidArgument("unknown graph name '" + name + "'");
  }
}

}  // namespace

extern "C" {

void al_options_init(al_options* options) {
  if (options == nullptr) return;
  options->budget = SearchOptions{}.budget;
  options->workers = 1;
  options->format = AL_FORMAT_TEXT;
}

const char* al_status_name(al_status status) {
  switch (status) {
    case AL_OK: return "ok";
    case AL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case AL_ERR_PARSE: return "parse error";
    case AL_ERR_OUT_OF_RANGE: return "out of range";
    case AL_ERR_PRECONDITION: return "precondition violated";
    case AL_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case AL_ERR_CONSTRUCTION: return "construction failed";
    case AL_ERR_IO: return "i/o error";
    case AL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* al_last_error(void) { return last_error.c_str(); }

const char* al_version(void) { return "1.0.0"; }

const char* al_text_data(const al_text* text) { return text == nullptr ? "" : text->s.c_str(); }

size_t al_text_size(const al_text* text) { return text == nullptr ? 0 : text->s.size(); }

void al_text_free(al_text* text) { delete text; }

al_status al_graph_parse(const char* text, al_graph** out) {
  return guard([&] {
    need_out(out);
    *out = new al_graph{parse_graph(text_arg(text, "text"))};
  });
}

al_status al_graph_read_file(const char* path, al_graph** out) {
  return guard([&] {
    need_out(out);
    *out = new al_graph{parse_graph(read_file(path))};
  });
}

al_status al_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, al_graph** out) {
  return guard([&] {
    need_out(out);
    if (m > 0 && pairs == nullptr) throw InvalidArgument("null edge array");
    std::vector<Edge> edges;
    edges.reserve(m);
    for (size_t i = 0; i < m; ++i) {
      if (pairs[2 * i] == pairs[2 * i + 1]) throw InvalidArgument("self-loop");
      edges.emplace_back(pairs[2 * i], pairs[2 * i + 1]);
    }
    *out = new al_graph{Graph(n, edges)};
  });
}

al_status al_graph_named(const char* name, al_graph** out) {
  return guard([&] {
    need_out(out);
    *out = new al_graph{named_graph(text_arg(name, "name"))};
  });
}

void al_graph_free(al_graph* g) { delete g; }

size_t al_graph_vertex_count(const al_graph* g) { return g == nullptr ? 0 : g->g.vertex_count(); }

size_t al_graph_edge_count(const al_graph* g) { return g == nullptr ? 0 : g->g.edge_count(); }

al_status al_graph_edge(const al_graph* g, size_t index, uint32_t* u, uint32_t* v) {
  return guard([&] {
    need_out(u);
    need_out(v);
    if (index >= G(g).edge_count()) throw OutOfRange("edge index out of range");
    *u = G(g).edge(index).u;
    *v = G(g).edge(index).v;
  });
}

al_status al_graph_write(const al_graph* g, int json, al_text** out) {
  return guard([&] { emit(out, json ? write_graph_json(G(g)) + '\n' : write_graph(G(g))); });
}

al_status al_graph_disjoint_union(const al_graph* a, const al_graph* b, al_graph** out) {
  return guard([&] {
    need_out(out);
    *out = new al_graph{disjoint_union(G(a), G(b)).graph};
  });
}

al_status al_graph_isomorphic(const al_graph* a, const al_graph* b, int* out) {
  return guard([&] {
    need_out(out);
    *out = are_isomorphic(G(a), G(b)) ? 1 : 0;
  });
}

al_status al_graph_distance(const al_graph* g, uint32_t from, uint32_t to, int64_t* out) {
  return guard([&] {
    need_out(out);
    check_vertex(G(g), from);
    check_vertex(G(g), to);
    const Distance d = distance(G(g), from, to);
    *out = d ? static_cast<int64_t>(*d) : -1;
  });
}

al_status al_graph_connectivity(const al_graph* g, size_t* out) {
  return guard([&] {
    need_out(out);
    *out = vertex_connectivity(G(g));
  });
}

al_status al_graph_connected(const al_graph* g, int* out) {
  return guard([&] {
    need_out(out);
    *out = is_connected(G(g)) ? 1 : 0;
  });
}

al_status al_marked_parse(const char* text, al_marked** out) {
  return guard([&] {
    need_out(out);
    *out = new al_marked{parse_marked_graph(text_arg(text, "text"))};
  });
}

al_status al_marked_read_file(const char* path, al_marked** out) {
  return guard([&] {
    need_out(out);
    *out = new al_marked{parse_marked_graph(read_file(path))};
  });
}

al_status al_marked_from_graph(const al_graph* g, al_marked** out) {
  return guard([&] {
    need_out(out);
    *out = new al_marked{MarkedGraph(G(g))};
  });
}

al_status al_marked_mark_edge(al_marked* m, const char* label, uint32_t a, uint32_t b) {
  return guard([&] {
    if (m == nullptr) throw InvalidArgument("null marked graph");
    m->m.mark_edge(text_arg(label, "label"), a, b);
  });
}

al_status al_marked_mark_vertex(al_marked* m, const char* label, uint32_t v) {
  return guard([&] {
    if (m == nullptr) throw InvalidArgument("null marked graph");
    m->m.mark_vertex(text_arg(label, "label"), v);
  });
}

void al_marked_free(al_marked* m) { delete m; }

al_status al_marked_graph(const al_marked* m, al_graph** out) {
  return guard([&] {
    need_out(out);
    *out = new al_graph{M(m).graph()};
  });
}

al_status al_marked_vertex(const al_marked* m, const char* label, uint32_t* out) {
  return guard([&] {
    need_out(out);
    *out = M(m).vertex_mark(text_arg(label, "label"));
  });
}

al_status al_marked_write(const al_marked* m, al_text** out) {
  return guard([&] { emit(out, write_marked_graph(M(m))); });
}

al_status al_arrows(const al_graph* f, const al_graph* g, const al_graph* h,
                    const al_options* options, int* out) {
  return guard([&] {
    need_out(out);
    *out = arrows(G(f), G(g), G(h), search(resolve(options))) ? 1 : 0;
  });
}

al_status al_is_arrow_minimal(const al_graph* f, const al_graph* g, const al_graph* h,
                              const al_options* options, int* out) {
  return guard([&] {
    need_out(out);
    *out = is_arrow_minimal(G(f), G(g), G(h), search(resolve(options))) ? 1 : 0;
  });
}

al_status al_count_good_colorings(const al_graph* f, const al_graph* g, const al_graph* h,
                                  const al_options* options, uint64_t* out) {
  return guard([&] {
    need_out(out);
    *out = count_good_colorings(G(f), G(g), G(h), search(resolve(options)));
  });
}

al_status al_find_good_coloring(const al_graph* f, const al_graph* g, const al_graph* h,
                                const al_options* options, al_text** out) {
  return guard([&] {
    need_out(out);
    *out = nullptr;
    auto c = find_good_coloring(G(f), G(g), G(h), no_fixed_edges(G(f)), search(resolve(options)));
    if (c) emit(out, coloring_string(*c));
  });
}

al_status al_is_good_coloring(const al_graph* f, const al_graph* g, const al_graph* h,
                              const char* coloring_text, int* out) {
  return guard([&] {
    need_out(out);
    const std::string text = text_arg(coloring_text, "colouring");
    EdgeColoring c;
    if (!text.empty() && text.find_first_not_of("RB") == std::string::npos) {
      for (char ch : text) c.push_back(ch == 'R' ? Color::kRed : Color::kBlue);
    } else {
      c = parse_coloring(text, G(f).edge_count());
    }
    *out = is_good_coloring(G(f), G(g), G(h), c) ? 1 : 0;
  });
}

al_status al_edge_join(const al_marked* left, const char* left_edge, const al_marked* right,
                       const char* right_edge, al_marked** out, size_t* collapsed) {
  return guard([&] {
    need_out(out);
    GluedGraph glued = edge_join(M(left), text_arg(left_edge, "edge label"), M(right),
                                 text_arg(right_edge, "edge label"));
    if (collapsed != nullptr) *collapsed = glued.collapsed_edges;
    *out = new al_marked{std::move(glued.graph)};
  });
}

al_status al_self_identify(const al_marked* m, const char* first_edge, const char* second_edge,
                           al_marked** out, size_t* collapsed) {
  return guard([&] {
    need_out(out);
    GluedGraph glued =
        self_identify(M(m), text_arg(first_edge, "edge label"), text_arg(second_edge, "edge label"));
    if (collapsed != nullptr) *collapsed = glued.collapsed_edges;
    *out = new al_marked{std::move(glued.graph)};
  });
}

al_status al_chain_senders(const al_marked* sender, size_t copies, al_marked** out) {
  return guard([&] {
    need_out(out);
    *out = new al_marked{chain_senders(M(sender), copies)};
  });
}

al_status al_close_chain(const al_marked* chain, size_t n, al_marked** out) {
  return guard([&] {
    need_out(out);
    *out = new al_marked{close_chain(M(chain), n)};
  });
}

al_status al_verify_sender(const al_marked* s, const al_graph* g, const al_graph* h, int positive,
                           const al_options* options, int* ok) {
  return guard([&] {
    need_out(ok);
    *ok = verify_sender(M(s), polarity(positive), G(g), G(h), search(resolve(options))).ok ? 1 : 0;
  });
}

al_status al_is_sender_minimal(const al_marked* s, const al_graph* g, const al_graph* h,
                               int positive, const al_options* options, int* out) {
  return guard([&] {
    need_out(out);
    *out = is_sender_minimal(M(s), polarity(positive), G(g), G(h), search(resolve(options))) ? 1
                                                                                              : 0;
  });
}

al_status al_are_r_equivalent(const al_graph* a, const al_graph* b, size_t radius,
                              const al_options* options, int* out) {
  return guard([&] {
    need_out(out);
    *out = are_r_equivalent(G(a), G(b), radius, resolve(options).workers) ? 1 : 0;
  });
}

al_status al_r_type_hex(const al_graph* g, uint32_t center, size_t radius, al_text** out) {
  return guard([&] {
    check_vertex(G(g), center);
    emit(out, r_type(G(g), center, radius).hex());
  });
}

al_status al_formula_rank(const char* formula, size_t* out) {
  return guard([&] {
    need_out(out);
    *out = quantifier_rank(parse_formula(text_arg(formula, "formula")));
  });
}

al_status al_evaluate(const al_graph* g, const char* sentence, int* out) {
  return guard([&] {
    need_out(out);
    *out = evaluate(G(g), parse_formula(text_arg(sentence, "sentence"))) ? 1 : 0;
  });
}

al_status al_build_far_apart(const al_marked* sender, const al_graph* g, const al_graph* h,
                             size_t n, int waive_sender_minimality, const al_options* options,
                             al_marked** out) {
  return guard([&] {
    need_out(out);
    FarApartGraph far = build_far_apart_minimal(M(sender), G(g), G(h), n,
                                                search(resolve(options)), waive_sender_minimality);
    *out = new al_marked{std::move(far.graph)};
  });
}

al_status al_witness_pair(const al_marked* f, al_graph** f1, al_graph** f2) {
  return guard([&] {
    need_out(f1);
    need_out(f2);
    WitnessPair pair = build_witness_pair(M(f));
    *f1 = new al_graph{std::move(pair.f1)};
    *f2 = new al_graph{std::move(pair.f2)};
  });
}

al_status al_verify_explicit_bijection(const al_marked* f, size_t rank, const al_options* options,
                                       int* out) {
  return guard([&] {
    need_out(out);
    *out = verify_explicit_bijection(M(f), rank, resolve(options).workers) ? 1 : 0;
  });
}

al_status al_report_graph_info(const al_graph* g, const al_options* options, al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    const Graph& graph = G(g);
    Report r("graph info");
    r.both("vertices", std::to_string(graph.vertex_count()));
    r.both("edges", std::to_string(graph.edge_count()));
    r.both("components", std::to_string(component_count(graph)));
    r.both("connected", yes_no(is_connected(graph)));
    std::string degrees;
    for (std::size_t d : degree_sequence(graph)) degrees += (degrees.empty() ? "" : " ") + std::to_string(d);
    r.both("degrees", degrees);
    emit(out, r, o);
  });
}

al_status al_report_graph_iso(const al_graph* a, const al_graph* b, const al_options* options,
                              int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    auto map = find_isomorphism(G(a), G(b));
    Report r("graph iso");
    echo(r, "A", G(a));
    echo(r, "B", G(b));
    r.field("isomorphic", yes_no(map.has_value()));
    r.line(map ? "ISOMORPHIC" : "NOT-ISOMORPHIC");
    if (map) {
      std::string image;
      for (Vertex v : map->image) image += (image.empty() ? "" : " ") + std::to_string(v);
      r.both("map", image);
    }
    *verdict = map ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_graph_distance(const al_graph* g, uint32_t from, uint32_t to,
                                   const al_options* options, al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    check_vertex(G(g), from);
    check_vertex(G(g), to);
    Report r("graph distance");
    r.field("from", std::to_string(from));
    r.field("to", std::to_string(to));
    r.both("distance", distance_string(distance(G(g), from, to)));
    emit(out, r, o);
  });
}

al_status al_report_graph_kconn(const al_graph* g, size_t k, const al_options* options,
                                int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    const std::size_t kappa = vertex_connectivity(G(g));
    Report r("graph kconn");
    r.both("connectivity", std::to_string(kappa));
    *verdict = 1;
    if (k != SIZE_MAX) {
      if (k == 0) throw InvalidArgument("k must be positive");
      r.field("k", std::to_string(k));
      r.both("exactly-k-connected", yes_no(kappa == k));
      r.both("at-least-k-connected", yes_no(kappa >= k));
      *verdict = kappa >= k ? 1 : 0;
    }
    emit(out, r, o);
  });
}

al_status al_report_arrow_decide(const al_graph* f, const al_graph* g, const al_graph* h,
                                 const al_options* options, int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    auto c = find_good_coloring(G(f), G(g), G(h), no_fixed_edges(G(f)), search(o));
    Report r("arrow decide");
    echo(r, "F", G(f));
    echo(r, "G", G(g));
    echo(r, "H", G(h));
    echo_budget(r, o);
    r.field("arrows", yes_no(!c));
    r.line(c ? "DOES-NOT-ARROW" : "ARROWS");
    if (c) r.both("good-coloring", coloring_string(*c));
    *verdict = c ? 0 : 1;
    emit(out, r, o);
  });
}

al_status al_report_arrow_enumerate(const al_graph* f, const al_graph* g, const al_graph* h,
                                    size_t limit, const al_options* options, al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    ColoringEnumeration all = enumerate_good_colorings(G(f), G(g), G(h), limit, search(o));
    Report r("arrow enumerate");
    echo(r, "F", G(f));
    echo(r, "G", G(g));
    echo(r, "H", G(h));
    echo_budget(r, o);
    r.field("limit", std::to_string(limit));
    for (const EdgeColoring& c : all.colorings) r.both("coloring", coloring_string(c));
    r.both("count", std::to_string(all.colorings.size()));
    r.both("truncated", yes_no(all.truncated));
    emit(out, r, o);
  });
}

al_status al_report_arrow_minimal(const al_graph* f, const al_graph* g, const al_graph* h,
                                  const al_options* options, int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    const bool minimal = is_arrow_minimal(G(f), G(g), G(h), search(o));
    Report r("arrow minimal");
    echo(r, "F", G(f));
    echo(r, "G", G(g));
    echo(r, "H", G(h));
    echo_budget(r, o);
    r.field("minimal", yes_no(minimal));
    r.line(minimal ? "MINIMAL" : "NOT-MINIMAL");
    *verdict = minimal ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_verify_determiner(const al_marked* d, const al_graph* g, const al_graph* h,
                                      const char* signal, const al_options* options, int* verdict,
                                      al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    const std::string label = signal == nullptr ? "f" : signal;
    GadgetVerdict v = verify_determiner(M(d), G(g), G(h), search(o), label);
    Report r("gadget verify-determiner");
    echo(r, "D", M(d).graph());
    r.field("signal", label);
    echo_budget(r, o);
    add_gadget_verdict(r, v);
    std::string text = v.ok ? "OK" : "FAIL";
    if (v.violated_condition) text += " condition=" + std::to_string(*v.violated_condition);
    if (v.witness) text += " witness=" + coloring_string(*v.witness);
    r.line(text);
    *verdict = v.ok ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_verify_sender(const al_marked* s, const al_graph* g, const al_graph* h,
                                  int positive, const al_options* options, int* verdict,
                                  al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    GadgetVerdict v = verify_sender(M(s), polarity(positive), G(g), G(h), search(o));
    const bool nonadjacent = signals_nonadjacent(M(s));
    Report r(positive ? "gadget verify-positive-sender" : "gadget verify-negative-sender");
    echo(r, "S", M(s).graph());
    echo_budget(r, o);
    add_gadget_verdict(r, v);
    r.field("non-adjacent-signals", yes_no(nonadjacent));
    std::string text = v.ok ? "OK" : "FAIL";
    if (v.violated_condition) text += " condition=" + std::to_string(*v.violated_condition);
    if (v.witness) text += " witness=" + coloring_string(*v.witness);
    text += " non-adjacent-signals=" + yes_no(nonadjacent);
    r.line(text);
    *verdict = v.ok ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_sender_search(const al_graph* g, const al_graph* h, int positive,
                                  size_t max_vertices, int nonadjacent_signals,
                                  const al_options* options, int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    SenderSearchOptions opts;
    opts.max_vertices = max_vertices;
    opts.require_nonadjacent_signals = nonadjacent_signals != 0;
    auto found = search_sender(G(g), G(h), polarity(positive), opts, search(o));
    Report r("gadget search");
    r.field("polarity", positive ? "positive" : "negative");
    r.field("max-vertices", std::to_string(max_vertices));
    r.field("require-non-adjacent-signals", yes_no(opts.require_nonadjacent_signals));
    echo_budget(r, o);
    r.field("found", yes_no(found.has_value()));
    if (found) {
      r.marked_graph("sender", *found);
      r.line("# sender found");
      std::string text = write_marked_graph(*found);
      text.pop_back();
      r.line(text);
    } else {
      r.line("# no sender up to " + std::to_string(max_vertices) + " vertices");
    }
    *verdict = found ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_marked(const char* command, const al_marked* m, size_t collapsed,
                           const al_options* options, al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    Report r(text_arg(command, "command"));
    r.field("collapsed-edges", std::to_string(collapsed));
    r.marked_graph("graph", M(m));
    r.line("# collapsed-edges " + std::to_string(collapsed));
    std::string text = write_marked_graph(M(m));
    text.pop_back();
    r.line(text);
    emit(out, r, o);
  });
}

al_status al_report_hanf_types(const al_graph* g, size_t radius, const al_options* options,
                               al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    const std::vector<NeighborhoodType> types = r_types(G(g), radius, o.workers);
    Report r("hanf types");
    r.field("radius", std::to_string(radius));
    for (Vertex v = 0; v < types.size(); ++v) r.both("vertex", std::to_string(v) + ' ' + types[v].hex());
    emit(out, r, o);
  });
}

al_status al_report_hanf_census(const al_graph* g, size_t radius, const al_options* options,
                                al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    const TypeCensus census = type_census(G(g), radius, o.workers);
    Report r("hanf census");
    r.field("radius", std::to_string(radius));
    for (const auto& [type, count] : census) r.both("type", type.hex() + ' ' + std::to_string(count));
    emit(out, r, o);
  });
}

al_status al_report_hanf_equiv(const al_graph* a, const al_graph* b, size_t radius,
                               const al_options* options, int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    TypeCache cache;
    const TypeCensus ca = type_census(G(a), radius, o.workers, &cache);
    const TypeCensus cb = type_census(G(b), radius, o.workers, &cache);
    Report r("hanf equiv");
    echo(r, "A", G(a));
    echo(r, "B", G(b));
    r.field("radius", std::to_string(radius));
    r.field("equivalent", yes_no(ca == cb));
    add_census(r, "census.a", ca);
    add_census(r, "census.b", cb);
    r.line(ca == cb ? "EQUIVALENT" : "NOT-EQUIVALENT");
    *verdict = ca == cb ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_hanf_certificate(const al_graph* a, const al_graph* b, size_t rank,
                                     const al_options* options, int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    HanfCertificate cert = hanf_certificate(G(a), G(b), rank, o.workers);
    Report r("hanf certificate");
    echo(r, "A", G(a));
    echo(r, "B", G(b));
    add_hanf_certificate(r, cert);
    r.line("radius " + std::to_string(cert.radius));
    r.line("equivalent " + yes_no(cert.equivalent));
    r.line("conclusion " + cert.conclusion);
    for (const std::string& w : cert.warnings) r.line("warning " + w);
    *verdict = cert.equivalent ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_fo_qr(const char* formulas, const al_options* options, al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    Report r("fo qr");
    for (const Formula& f : parse_sentence_file(text_arg(formulas, "formulas"))) {
      r.both("qr", std::to_string(quantifier_rank(f)) + ' ' + to_string(f));
    }
    emit(out, r, o);
  });
}

al_status al_report_fo_eval(const al_graph* g, const char* sentences, const al_options* options,
                            al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    Report r("fo eval");
    echo(r, "F", G(g));
    for (const Formula& f : parse_sentence_file(text_arg(sentences, "sentences"))) {
      if (!is_sentence(f)) throw InvalidArgument("not a sentence: " + to_string(f));
      r.both("value", yes_no(evaluate(G(g), f)) + ' ' + to_string(f));
    }
    emit(out, r, o);
  });
}

al_status al_report_fo_compare(const al_graph* a, const al_graph* b, const char* sentences,
                               size_t rank, const al_options* options, int* verdict,
                               al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    const std::vector<Formula> corpus =
        sentences == nullptr ? default_corpus(rank) : parse_sentence_file(sentences);
    ModelComparison cmp = compare_models(G(a), G(b), corpus, rank, o.workers);
    Report r("fo compare");
    echo(r, "A", G(a));
    echo(r, "B", G(b));
    r.field("corpus", sentences == nullptr ? "default" : "file");
    add_model_comparison(r, cmp);
    r.line("sentences " + std::to_string(cmp.rows.size()) + " skipped " +
           std::to_string(cmp.skipped) + " separating " + std::to_string(cmp.separating.size()));
    for (std::size_t i : cmp.separating) {
      const SentenceComparison& row = cmp.rows[i];
      r.line("separates qr=" + std::to_string(row.rank) + " A=" + yes_no(row.in_a) +
             " B=" + yes_no(row.in_b) + ' ' + row.sentence);
    }
    *verdict = cmp.separating.empty() ? 1 : 0;
    emit(out, r, o);
  });
}

al_status al_report_witness_build(const al_marked* sender, const al_graph* g, const al_graph* h,
                                  size_t n, int waive_sender_minimality,
                                  const al_options* options, int* minimal, al_text** out) {
  return guard([&] {
    need_out(minimal);
    const al_options o = resolve(options);
    FarApartGraph far =
        build_far_apart_minimal(M(sender), G(g), G(h), n, search(o), waive_sender_minimality);
    Report r("witness build");
    r.field("n", std::to_string(n));
    echo_budget(r, o);
    r.field("distance_uv", distance_string(far.distance));
    r.field("minimal", verdict_name(far.minimal));
    r.field("sender_minimality_waived", yes_no(far.sender_minimality_waived));
    for (const std::string& note : far.notes) r.field("note", note);
    r.marked_graph("F", far.graph);
    r.line("# n " + std::to_string(n));
    r.line("# d(u,v) " + distance_string(far.distance));
    r.line(std::string("# minimal ") + verdict_name(far.minimal));
    for (const std::string& note : far.notes) r.line("# note " + note);
    std::string text = write_marked_graph(far.graph);
    text.pop_back();
    r.line(text);
    *minimal = to_int(far.minimal);
    emit(out, r, o);
  });
}

al_status al_report_witness_pair(const al_marked* f, const al_options* options, al_text** out) {
  return guard([&] {
    const al_options o = resolve(options);
    WitnessPair pair = build_witness_pair(M(f));
    Report r("witness pair");
    echo(r, "F1", pair.f1);
    echo(r, "F2", pair.f2);
    r.graph("F1", pair.f1);
    r.graph("F2", pair.f2);
    r.line("F1 vertices=" + std::to_string(pair.f1.vertex_count()) +
           " edges=" + std::to_string(pair.f1.edge_count()) +
           " components=" + std::to_string(component_count(pair.f1)));
    r.line("F2 vertices=" + std::to_string(pair.f2.vertex_count()) +
           " edges=" + std::to_string(pair.f2.edge_count()) +
           " components=" + std::to_string(component_count(pair.f2)));
    emit(out, r, o);
  });
}

al_status al_report_witness_run(const al_marked* sender, const al_graph* g, const al_graph* h,
                                size_t rank, int waive_sender_minimality,
                                const al_options* options, int* status, al_text** out) {
  return guard([&] {
    need_out(status);
    const al_options o = resolve(options);
    WitnessCertificate cert =
        run_witness(M(sender), G(g), G(h), rank, search(o), waive_sender_minimality);
    Report r("witness run");
    echo_budget(r, o);
    add_witness_certificate(r, cert);
    *status = to_int(cert.status);
    emit(out, r, o);
  });
}

al_status al_report_witness_certify(const al_graph* f1, const al_graph* f2, const al_graph* g,
                                    const al_graph* h, size_t rank, const al_options* options,
                                    int* status, al_text** out) {
  return guard([&] {
    need_out(status);
    const al_options o = resolve(options);
    WitnessCertificate cert = certify(G(f1), G(f2), G(g), G(h), rank, search(o));
    Report r("witness certify");
    echo_budget(r, o);
    add_witness_certificate(r, cert);
    *status = to_int(cert.status);
    emit(out, r, o);
  });
}

al_status al_report_witness_bijection(const al_marked* f, size_t rank, const al_options* options,
                                      int* verdict, al_text** out) {
  return guard([&] {
    need_out(verdict);
    const al_options o = resolve(options);
    const bool ok = verify_explicit_bijection(M(f), rank, o.workers);
    Report r("witness bijection");
    r.field("rank", std::to_string(rank));
    r.field("radius", std::to_string(hanf_radius(rank)));
    r.field("bijection", yes_no(ok));
    r.line(ok ? "BIJECTION-PRESERVES-TYPES" : "BIJECTION-FAILS");
    *verdict = ok ? 1 : 0;
    emit(out, r, o);
  });
}

}  // extern "C"
