#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "arrowlab/arrowlab.h"

namespace {

// Exit codes.
constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

struct Failure {
  int code;
};

struct GraphDeleter {
  void operator()(al_graph* g) const { al_graph_free(g); }
};
struct MarkedDeleter {
  void operator()(al_marked* m) const { al_marked_free(m); }
};
struct TextDeleter {
  void operator()(al_text* t) const { al_text_free(t); }
};
using GraphPtr = std::unique_ptr<al_graph, GraphDeleter>;
using MarkedPtr = std::unique_ptr<al_marked, MarkedDeleter>;
using TextPtr = std::unique_ptr<al_text, TextDeleter>;

int exit_code(al_status status) {
  switch (status) {
    case AL_OK: return kYes;
    case AL_ERR_BUDGET_EXCEEDED: return kBudget;
    case AL_ERR_CONSTRUCTION: return kNo;
    default: return kUsage;
  }
}

void check(al_status status, const std::string& context = {}) {
  if (status == AL_OK) return;
  std::cerr << "arrowlab: " << (context.empty() ? "" : context + ": ") << al_status_name(status)
            << ": " << al_last_error() << '\n';
  throw Failure{exit_code(status)};
}

struct Common {
  std::uint64_t budget = 100'000'000;
  unsigned workers = 1;
  std::string format = "text";
  bool timings = false;

  al_options options() const {
    al_options o;
    al_options_init(&o);
    o.budget = budget;
    o.workers = workers;
    o.format = format == "structured" ? AL_FORMAT_STRUCTURED : AL_FORMAT_TEXT;
    return o;
  }
};

// A path that names no file but reads like K6, C27, P3 or E4 is a built-in graph.
GraphPtr load_graph(const std::string& path) {
  al_graph* g = nullptr;
  static const std::regex named("[KCPE][0-9]+");
  if (!std::filesystem::exists(path) && std::regex_match(path, named)) {
    check(al_graph_named(path.c_str(), &g), path);
  } else {
    check(al_graph_read_file(path.c_str(), &g), path);
  }
  return GraphPtr(g);
}

MarkedPtr load_marked(const std::string& path) {
  al_marked* m = nullptr;
  check(al_marked_read_file(path.c_str(), &m), path);
  return MarkedPtr(m);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "arrowlab: cannot open '" << path << "'\n";
    throw Failure{kUsage};
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

class Runner {
 public:
  explicit Runner(const Common& common) : common_(common), options_(common.options()) {}

  const al_options* options() const { return &options_; }

  // Runs a report-producing call, prints the report and returns its exit code.
  int report(const std::function<al_status(al_text**)>& call,
             const std::function<int()>& code = [] { return kYes; }) {
    al_text* raw = nullptr;
    const auto start = std::chrono::steady_clock::now();
    check(call(&raw));
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    TextPtr text(raw);
    std::fwrite(al_text_data(text.get()), 1, al_text_size(text.get()), stdout);
    if (common_.timings) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", ms);
      std::cout << (options_.format == AL_FORMAT_STRUCTURED ? "timing.ms: " : "time-ms ") << buf
                << '\n';
    }
    return code();
  }

 private:
  Common common_;
  al_options options_;
};

int yes_no(int verdict) { return verdict ? kYes : kNo; }

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--budget", common.budget, "Search decision-node budget")
      ->check(CLI::Range(std::uint64_t{1}, UINT64_MAX))
      ->capture_default_str();
  cmd->add_option("--workers", common.workers, "Worker threads; results do not depend on it")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_flag("--timings", common.timings, "Append wall-clock time to the report");
}

struct Inputs {
  std::string f, g, h, s, a, b, out1, out2, formula, file, left_edge = "e", right_edge = "e",
      first = "e", second = "f", signal = "f";
  std::size_t n = 0, r = 0, radius = 0, copies = 0, limit = 0, max_vertices = 5;
  std::optional<std::size_t> k;
  std::uint32_t from = 0, to = 0;
  bool positive = false, nonadjacent = false, waive = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ramsey arrowing, gadgets, Hanf locality and first-order witnesses"};
  app.require_subcommand(1);
  Common common;
  Inputs in;
  std::function<int()> action;

  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& help,
                  std::function<int(Runner&)> body) {
    CLI::App* cmd = group->add_subcommand(name, help);
    add_common(cmd, common);
    cmd->callback([&, body] {
      action = [&, body] {
        Runner runner(common);
        return body(runner);
      };
    });
    return cmd;
  };
  auto req = [](CLI::App* cmd, const std::string& flags, std::string& target,
                const std::string& help) { cmd->add_option(flags, target, help)->required(); };

  const std::string graph_help = "Graph file, or K<n>/C<n>/P<n>/E<n>";

  // graph
  CLI::App* graph = app.add_subcommand("graph", "Graph utilities")->require_subcommand(1);
  {
    auto* c = leaf(graph, "info", "Vertex and edge counts, components, degrees", [&](Runner& run) {
      auto f = load_graph(in.f);
      return run.report([&](al_text** out) { return al_report_graph_info(f.get(), run.options(), out); });
    });
    req(c, "-F", in.f, graph_help);

    c = leaf(graph, "iso", "Isomorphism test with a witness map", [&](Runner& run) {
      auto a = load_graph(in.a), b = load_graph(in.b);
      int v = 0;
      return run.report(
          [&](al_text** out) { return al_report_graph_iso(a.get(), b.get(), run.options(), &v, out); },
          [&] { return yes_no(v); });
    });
    req(c, "-A", in.a, graph_help);
    req(c, "-B", in.b, graph_help);

    c = leaf(graph, "distance", "Shortest-path distance ('inf' across components)", [&](Runner& run) {
      auto f = load_graph(in.f);
      return run.report([&](al_text** out) {
        return al_report_graph_distance(f.get(), in.from, in.to, run.options(), out);
      });
    });
    req(c, "-F", in.f, graph_help);
    c->add_option("--from", in.from, "Source vertex")->required();
    c->add_option("--to", in.to, "Target vertex")->required();

    c = leaf(graph, "kconn", "Vertex connectivity; with -k, exact and lower-bound readings",
             [&](Runner& run) {
               auto f = load_graph(in.f);
               int v = 0;
               return run.report(
                   [&](al_text** out) {
                     return al_report_graph_kconn(f.get(), in.k ? *in.k : SIZE_MAX, run.options(),
                                                  &v, out);
                   },
                   [&] { return yes_no(v); });
             });
    req(c, "-F", in.f, graph_help);
    c->add_option("-k", in.k, "Connectivity to test; exit 0 iff kappa >= k");
  }

  // arrow
  CLI::App* arrow = app.add_subcommand("arrow", "Arrowing F -> (G, H)")->require_subcommand(1);
  {
    auto triple = [&](CLI::App* c) {
      req(c, "-F", in.f, graph_help);
      req(c, "-G", in.g, "Red pattern: " + graph_help);
      req(c, "-H", in.h, "Blue pattern: " + graph_help);
    };
    auto* c = leaf(arrow, "decide", "ARROWS, or a good colouring", [&](Runner& run) {
      auto f = load_graph(in.f), g = load_graph(in.g), h = load_graph(in.h);
      int v = 0;
      return run.report(
          [&](al_text** out) {
            return al_report_arrow_decide(f.get(), g.get(), h.get(), run.options(), &v, out);
          },
          [&] { return yes_no(v); });
    });
    triple(c);

    c = leaf(arrow, "enumerate", "All good colourings in lexicographic order", [&](Runner& run) {
      auto f = load_graph(in.f), g = load_graph(in.g), h = load_graph(in.h);
      return run.report([&](al_text** out) {
        return al_report_arrow_enumerate(f.get(), g.get(), h.get(), in.limit, run.options(), out);
      });
    });
    triple(c);
    c->add_option("--limit", in.limit, "Stop after this many colourings (0 = all)")
        ->capture_default_str();

    c = leaf(arrow, "minimal", "F arrows and no single-edge deletion does", [&](Runner& run) {
      auto f = load_graph(in.f), g = load_graph(in.g), h = load_graph(in.h);
      int v = 0;
      return run.report(
          [&](al_text** out) {
            return al_report_arrow_minimal(f.get(), g.get(), h.get(), run.options(), &v, out);
          },
          [&] { return yes_no(v); });
    });
    triple(c);
  }

  // gadget
  CLI::App* gadget = app.add_subcommand("gadget", "Senders, determiners and gluing")
                         ->require_subcommand(1);
  {
    const std::string marked_help = "Marked graph file";
    auto* c = leaf(gadget, "join", "Edge join A(e) + (e')B", [&](Runner& run) {
      auto a = load_marked(in.a), b = load_marked(in.b);
      al_marked* raw = nullptr;
      std::size_t collapsed = 0;
      check(al_edge_join(a.get(), in.left_edge.c_str(), b.get(), in.right_edge.c_str(), &raw,
                         &collapsed));
      MarkedPtr m(raw);
      return run.report([&](al_text** out) {
        return al_report_marked("gadget join", m.get(), collapsed, run.options(), out);
      });
    });
    req(c, "-A", in.a, marked_help);
    req(c, "-B", in.b, marked_help);
    c->add_option("--left-edge", in.left_edge, "Edge mark of A")->capture_default_str();
    c->add_option("--right-edge", in.right_edge, "Edge mark of B")->capture_default_str();

    c = leaf(gadget, "identify", "Identify two marked edges of one graph", [&](Runner& run) {
      auto s = load_marked(in.s);
      al_marked* raw = nullptr;
      std::size_t collapsed = 0;
      check(al_self_identify(s.get(), in.first.c_str(), in.second.c_str(), &raw, &collapsed));
      MarkedPtr m(raw);
      return run.report([&](al_text** out) {
        return al_report_marked("gadget identify", m.get(), collapsed, run.options(), out);
      });
    });
    req(c, "-S", in.s, marked_help);
    c->add_option("--first", in.first, "Edge mark kept")->capture_default_str();
    c->add_option("--second", in.second, "Edge mark merged into the first")->capture_default_str();

    c = leaf(gadget, "chain", "Chain an odd number of sender copies", [&](Runner& run) {
      auto s = load_marked(in.s);
      al_marked* raw = nullptr;
      check(al_chain_senders(s.get(), in.copies, &raw));
      MarkedPtr m(raw);
      return run.report([&](al_text** out) {
        return al_report_marked("gadget chain", m.get(), 0, run.options(), out);
      });
    });
    req(c, "-S", in.s, "Sender with marks e and f");
    c->add_option("--copies", in.copies, "Number of copies (odd)")->required();

    c = leaf(gadget, "close", "Close a chain of 2n+1 links, marking u and v", [&](Runner& run) {
      auto s = load_marked(in.s);
      al_marked* raw = nullptr;
      check(al_close_chain(s.get(), in.n, &raw));
      MarkedPtr m(raw);
      return run.report([&](al_text** out) {
        return al_report_marked("gadget close", m.get(), 0, run.options(), out);
      });
    });
    req(c, "-S", in.s, "Chain produced by 'gadget chain'");
    c->add_option("-n", in.n, "Chain parameter")->required();

    c = leaf(gadget, "verify-determiner", "Signal edge red in every good colouring",
             [&](Runner& run) {
               auto s = load_marked(in.s);
               auto g = load_graph(in.g), h = load_graph(in.h);
               int v = 0;
               return run.report(
                   [&](al_text** out) {
                     return al_report_verify_determiner(s.get(), g.get(), h.get(),
                                                        in.signal.c_str(), run.options(), &v, out);
                   },
                   [&] { return yes_no(v); });
             });
    req(c, "-S", in.s, marked_help);
    req(c, "-G", in.g, graph_help);
    req(c, "-H", in.h, graph_help);
    c->add_option("--signal", in.signal, "Signal edge mark")->capture_default_str();

    for (int positive = 0; positive <= 1; ++positive) {
      const std::string name = positive ? "verify-positive-sender" : "verify-negative-sender";
      c = leaf(gadget, name,
               positive ? "Signals e and f agree in every good colouring"
                        : "Signals e and f differ in every good colouring",
               [&, positive](Runner& run) {
                 auto s = load_marked(in.s);
                 auto g = load_graph(in.g), h = load_graph(in.h);
                 int v = 0;
                 return run.report(
                     [&](al_text** out) {
                       return al_report_verify_sender(s.get(), g.get(), h.get(), positive,
                                                      run.options(), &v, out);
                     },
                     [&] { return yes_no(v); });
               });
      req(c, "-S", in.s, "Marked graph with edge marks e and f");
      req(c, "-G", in.g, graph_help);
      req(c, "-H", in.h, graph_help);
    }

    c = leaf(gadget, "search", "Smallest sender by exhaustive enumeration", [&](Runner& run) {
      auto g = load_graph(in.g), h = load_graph(in.h);
      int v = 0;
      return run.report(
          [&](al_text** out) {
            return al_report_sender_search(g.get(), h.get(), in.positive, in.max_vertices,
                                           in.nonadjacent, run.options(), &v, out);
          },
          [&] { return yes_no(v); });
    });
    req(c, "-G", in.g, graph_help);
    req(c, "-H", in.h, graph_help);
    c->add_flag("--positive", in.positive, "Search for a positive sender");
    c->add_flag("--non-adjacent", in.nonadjacent, "Require vertex-disjoint signal edges");
    c->add_option("--max-vertices", in.max_vertices, "Largest vertex count tried (at most 7)")
        ->capture_default_str();
  }

  // hanf
  CLI::App* hanf = app.add_subcommand("hanf", "Neighbourhood types and Hanf certificates")
                       ->require_subcommand(1);
  {
    auto* c = leaf(hanf, "types", "Canonical radius-ball type of every vertex", [&](Runner& run) {
      auto f = load_graph(in.f);
      return run.report([&](al_text** out) {
        return al_report_hanf_types(f.get(), in.radius, run.options(), out);
      });
    });
    req(c, "-F", in.f, graph_help);
    c->add_option("--radius", in.radius, "Ball radius")->required();

    c = leaf(hanf, "census", "Multiplicity of each type, sorted by encoding", [&](Runner& run) {
      auto f = load_graph(in.f);
      return run.report([&](al_text** out) {
        return al_report_hanf_census(f.get(), in.radius, run.options(), out);
      });
    });
    req(c, "-F", in.f, graph_help);
    c->add_option("--radius", in.radius, "Ball radius")->required();

    c = leaf(hanf, "equiv", "Type-preserving bijection exists at the radius", [&](Runner& run) {
      auto a = load_graph(in.a), b = load_graph(in.b);
      int v = 0;
      return run.report(
          [&](al_text** out) {
            return al_report_hanf_equiv(a.get(), b.get(), in.radius, run.options(), &v, out);
          },
          [&] { return yes_no(v); });
    });
    req(c, "-A", in.a, graph_help);
    req(c, "-B", in.b, graph_help);
    c->add_option("--radius", in.radius, "Ball radius")->required();

    c = leaf(hanf, "certificate", "Census check at radius 2^r", [&](Runner& run) {
      auto a = load_graph(in.a), b = load_graph(in.b);
      int v = 0;
      return run.report(
          [&](al_text** out) {
            return al_report_hanf_certificate(a.get(), b.get(), in.r, run.options(), &v, out);
          },
          [&] { return yes_no(v); });
    });
    req(c, "-A", in.a, graph_help);
    req(c, "-B", in.b, graph_help);
    c->add_option("-r", in.r, "Quantifier rank (>= 1)")->required();
  }

  // fo
  CLI::App* fo = app.add_subcommand("fo", "First-order sentences over graphs")
                     ->require_subcommand(1);
  {
    auto formulas = [&]() { return in.file.empty() ? in.formula : read_text(in.file); };
    auto source = [&](CLI::App* c) {
      auto* one = c->add_option("--formula", in.formula, "A single formula");
      auto* many = c->add_option("--file", in.file, "Formula file, one per line");
      one->excludes(many);
      c->require_option(1);
    };
    auto* c = leaf(fo, "qr", "Quantifier rank", [&](Runner& run) {
      const std::string text = formulas();
      return run.report(
          [&](al_text** out) { return al_report_fo_qr(text.c_str(), run.options(), out); });
    });
    source(c);

    c = leaf(fo, "eval", "Evaluate sentences on a graph", [&](Runner& run) {
      auto f = load_graph(in.f);
      const std::string text = formulas();
      return run.report([&](al_text** out) {
        return al_report_fo_eval(f.get(), text.c_str(), run.options(), out);
      });
    });
    req(c, "-F", in.f, graph_help);
    source(c);
    c->require_option(2);

    c = leaf(fo, "compare", "Sentences of rank <= r on which two graphs differ", [&](Runner& run) {
      auto a = load_graph(in.a), b = load_graph(in.b);
      const std::optional<std::string> text =
          in.file.empty() ? std::nullopt : std::optional<std::string>(read_text(in.file));
      int v = 0;
      return run.report(
          [&](al_text** out) {
            return al_report_fo_compare(a.get(), b.get(), text ? text->c_str() : nullptr, in.r,
                                        run.options(), &v, out);
          },
          [&] { return yes_no(v); });
    });
    req(c, "-A", in.a, graph_help);
    req(c, "-B", in.b, graph_help);
    c->add_option("-r", in.r, "Quantifier rank")->required();
    c->add_option("--file", in.file, "Sentence file (default: built-in corpus)");
  }

  // witness
  CLI::App* witness = app.add_subcommand("witness", "Pairs separating arrowing from FO rank r")
                          ->require_subcommand(1);
  {
    auto sender_inputs = [&](CLI::App* c) {
      req(c, "-S", in.s, "Minimal negative sender, marks e and f");
      req(c, "-G", in.g, graph_help);
      req(c, "-H", in.h, graph_help);
      c->add_flag("--waive-sender-minimality", in.waive,
                  "Skip the sender minimality check (recorded in the report)");
    };
    auto* c = leaf(witness, "build", "Minimal F with marked vertices u, v at distance >= n",
                   [&](Runner& run) {
                     auto s = load_marked(in.s);
                     auto g = load_graph(in.g), h = load_graph(in.h);
                     int minimal = AL_UNKNOWN;
                     return run.report(
                         [&](al_text** out) {
                           return al_report_witness_build(s.get(), g.get(), h.get(), in.n,
                                                          in.waive, run.options(), &minimal, out);
                         },
                         [&] {
                           return minimal == AL_TRUE ? kYes : minimal == AL_FALSE ? kNo : kBudget;
                         });
                   });
    sender_inputs(c);
    c->add_option("-n", in.n, "Distance parameter")->required();

    c = leaf(witness, "pair", "F1 = F + (F - {u,v}) and F2 = (F - {u}) + (F - {v})",
             [&](Runner& run) {
               auto f = load_marked(in.f);
               if (!in.out1.empty() || !in.out2.empty()) {
                 al_graph *r1 = nullptr, *r2 = nullptr;
                 check(al_witness_pair(f.get(), &r1, &r2));
                 GraphPtr f1(r1), f2(r2);
                 for (auto [path, g] : {std::pair{in.out1, f1.get()}, std::pair{in.out2, f2.get()}}) {
                   if (path.empty()) continue;
                   al_text* raw = nullptr;
                   check(al_graph_write(g, 0, &raw));
                   TextPtr text(raw);
                   std::ofstream(path, std::ios::binary) << al_text_data(text.get());
                 }
               }
               return run.report([&](al_text** out) {
                 return al_report_witness_pair(f.get(), run.options(), out);
               });
             });
    req(c, "-F", in.f, "Marked graph with vertex marks u and v");
    c->add_option("--out1", in.out1, "Write F1 to this file");
    c->add_option("--out2", in.out2, "Write F2 to this file");

    auto status_code = [](int status) {
      switch (status) {
        case AL_WITNESS_SUCCESS: return kYes;
        case AL_WITNESS_PARTIAL: return kBudget;
        default: return kNo;
      }
    };

    c = leaf(witness, "run", "Full pipeline with n = 2^(r+1)", [&](Runner& run) {
      auto s = load_marked(in.s);
      auto g = load_graph(in.g), h = load_graph(in.h);
      int status = AL_WITNESS_PARTIAL;
      return run.report(
          [&](al_text** out) {
            return al_report_witness_run(s.get(), g.get(), h.get(), in.r, in.waive,
                                         run.options(), &status, out);
          },
          [&] { return status_code(status); });
    });
    sender_inputs(c);
    c->add_option("-r", in.r, "Quantifier rank (>= 1)")->required();

    c = leaf(witness, "certify", "Certificate for a given pair (F1, F2)", [&](Runner& run) {
      auto a = load_graph(in.a), b = load_graph(in.b);
      auto g = load_graph(in.g), h = load_graph(in.h);
      int status = AL_WITNESS_PARTIAL;
      return run.report(
          [&](al_text** out) {
            return al_report_witness_certify(a.get(), b.get(), g.get(), h.get(), in.r,
                                             run.options(), &status, out);
          },
          [&] { return status_code(status); });
    });
    req(c, "-A", in.a, "F1: " + graph_help);
    req(c, "-B", in.b, "F2: " + graph_help);
    req(c, "-G", in.g, graph_help);
    req(c, "-H", in.h, graph_help);
    c->add_option("-r", in.r, "Quantifier rank (>= 1)")->required();

    c = leaf(witness, "bijection", "Check the piecewise type-preserving bijection",
             [&](Runner& run) {
               auto f = load_marked(in.f);
               int v = 0;
               return run.report(
                   [&](al_text** out) {
                     return al_report_witness_bijection(f.get(), in.r, run.options(), &v, out);
                   },
                   [&] { return yes_no(v); });
             });
    req(c, "-F", in.f, "Marked graph with vertex marks u and v");
    c->add_option("-r", in.r, "Quantifier rank")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const Failure& f) {
    return f.code;
  }
}
