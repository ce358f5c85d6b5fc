#ifndef ARROWLAB_ARROWLAB_H
#define ARROWLAB_ARROWLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(ARROWLAB_BUILDING)
#define AL_API __attribute__((visibility("default")))
#else
#define AL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Opaque handles. Every handle returned through an out-parameter is owned by
 * the caller and released with the matching *_free function. */
typedef struct al_graph al_graph;
typedef struct al_marked al_marked;
typedef struct al_text al_text;

typedef enum al_status {
  AL_OK = 0,
  AL_ERR_INVALID_ARGUMENT = 1,
  AL_ERR_PARSE = 2,
  AL_ERR_OUT_OF_RANGE = 3,
  AL_ERR_PRECONDITION = 4,
  AL_ERR_BUDGET_EXCEEDED = 5,
  AL_ERR_CONSTRUCTION = 6,
  AL_ERR_IO = 7,
  AL_ERR_INTERNAL = 8
} al_status;

typedef enum al_format { AL_FORMAT_TEXT = 0, AL_FORMAT_STRUCTURED = 1 } al_format;

typedef struct al_options {
  uint64_t budget;   /* search decision nodes, >= 1 */
  unsigned workers;  /* threads, >= 1; never changes results */
  al_format format;  /* rendering of al_text reports */
} al_options;

/* Three-valued verdicts reported by the witness pipeline. */
enum { AL_FALSE = 0, AL_TRUE = 1, AL_UNKNOWN = 2 };

/* Witness certificate status. */
enum {
  AL_WITNESS_SUCCESS = 0,
  AL_WITNESS_PARTIAL = 1,
  AL_WITNESS_NO_ARROWING_SEPARATION = 2,
  AL_WITNESS_NOT_HANF_EQUIVALENT = 3
};

AL_API void al_options_init(al_options* options);
AL_API const char* al_status_name(al_status status);
/* Message of the last failed call on this thread; "" after success. */
AL_API const char* al_last_error(void);
AL_API const char* al_version(void);

/* Text results. */
AL_API const char* al_text_data(const al_text* text);
AL_API size_t al_text_size(const al_text* text);
AL_API void al_text_free(al_text* text);

/* Graphs: text format or JSON, see the README. */
AL_API al_status al_graph_parse(const char* text, al_graph** out);
AL_API al_status al_graph_read_file(const char* path, al_graph** out);
/* pairs holds 2*m endpoints. */
AL_API al_status al_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, al_graph** out);
/* "K<n>", "C<n>", "P<n>" (n vertices) or "E<n>" (edgeless). */
AL_API al_status al_graph_named(const char* name, al_graph** out);
AL_API void al_graph_free(al_graph* g);
AL_API size_t al_graph_vertex_count(const al_graph* g);
AL_API size_t al_graph_edge_count(const al_graph* g);
AL_API al_status al_graph_edge(const al_graph* g, size_t index, uint32_t* u, uint32_t* v);
AL_API al_status al_graph_write(const al_graph* g, int json, al_text** out);
AL_API al_status al_graph_disjoint_union(const al_graph* a, const al_graph* b, al_graph** out);

AL_API al_status al_graph_isomorphic(const al_graph* a, const al_graph* b, int* out);
/* -1 when the vertices lie in different components. */
AL_API al_status al_graph_distance(const al_graph* g, uint32_t from, uint32_t to, int64_t* out);
AL_API al_status al_graph_connectivity(const al_graph* g, size_t* out);
AL_API al_status al_graph_connected(const al_graph* g, int* out);

/* Marked graphs: the graph text format plus `me` and `mv` lines. */
AL_API al_status al_marked_parse(const char* text, al_marked** out);
AL_API al_status al_marked_read_file(const char* path, al_marked** out);
AL_API al_status al_marked_from_graph(const al_graph* g, al_marked** out);
AL_API al_status al_marked_mark_edge(al_marked* m, const char* label, uint32_t a, uint32_t b);
AL_API al_status al_marked_mark_vertex(al_marked* m, const char* label, uint32_t v);
AL_API void al_marked_free(al_marked* m);
AL_API al_status al_marked_graph(const al_marked* m, al_graph** out);
AL_API al_status al_marked_vertex(const al_marked* m, const char* label, uint32_t* out);
AL_API al_status al_marked_write(const al_marked* m, al_text** out);

/* Arrowing. options may be NULL for defaults. */
AL_API al_status al_arrows(const al_graph* f, const al_graph* g, const al_graph* h,
                           const al_options* options, int* out);
AL_API al_status al_is_arrow_minimal(const al_graph* f, const al_graph* g, const al_graph* h,
                                     const al_options* options, int* out);
AL_API al_status al_count_good_colorings(const al_graph* f, const al_graph* g,
                                         const al_graph* h, const al_options* options,
                                         uint64_t* out);
/* Good colouring as "RB..." by edge index, or NULL text when none exists. */
AL_API al_status al_find_good_coloring(const al_graph* f, const al_graph* g, const al_graph* h,
                                       const al_options* options, al_text** out);
/* Accepts the compact "RB..." form or the "c <edge> <0|1>" line format. */
AL_API al_status al_is_good_coloring(const al_graph* f, const al_graph* g, const al_graph* h,
                                     const char* coloring_text, int* out);

/* Gadgets. collapsed may be NULL. */
AL_API al_status al_edge_join(const al_marked* left, const char* left_edge,
                              const al_marked* right, const char* right_edge, al_marked** out,
                              size_t* collapsed);
AL_API al_status al_self_identify(const al_marked* m, const char* first_edge,
                                  const char* second_edge, al_marked** out, size_t* collapsed);
AL_API al_status al_chain_senders(const al_marked* sender, size_t copies, al_marked** out);
AL_API al_status al_close_chain(const al_marked* chain, size_t n, al_marked** out);
/* positive selects the sender polarity; ok receives the verdict. */
AL_API al_status al_verify_sender(const al_marked* s, const al_graph* g, const al_graph* h,
                                  int positive, const al_options* options, int* ok);
AL_API al_status al_is_sender_minimal(const al_marked* s, const al_graph* g, const al_graph* h,
                                      int positive, const al_options* options, int* out);

/* Hanf locality. */
AL_API al_status al_are_r_equivalent(const al_graph* a, const al_graph* b, size_t radius,
                                     const al_options* options, int* out);
AL_API al_status al_r_type_hex(const al_graph* g, uint32_t center, size_t radius, al_text** out);

/* First-order logic. */
AL_API al_status al_formula_rank(const char* formula, size_t* out);
/* Closed formula; assignments are not supported through the C API. */
AL_API al_status al_evaluate(const al_graph* g, const char* sentence, int* out);

/* Witness pipeline. */
AL_API al_status al_build_far_apart(const al_marked* sender, const al_graph* g,
                                    const al_graph* h, size_t n, int waive_sender_minimality,
                                    const al_options* options, al_marked** out);
AL_API al_status al_witness_pair(const al_marked* f, al_graph** f1, al_graph** f2);
AL_API al_status al_verify_explicit_bijection(const al_marked* f, size_t rank,
                                              const al_options* options, int* out);

/* Reports rendered per options->format. Each also hands back the verdict the
 * command line maps to its exit code: 1 = definite yes, 0 = definite no. */
AL_API al_status al_report_graph_info(const al_graph* g, const al_options* options,
                                      al_text** out);
AL_API al_status al_report_graph_iso(const al_graph* a, const al_graph* b,
                                     const al_options* options, int* verdict, al_text** out);
AL_API al_status al_report_graph_distance(const al_graph* g, uint32_t from, uint32_t to,
                                          const al_options* options, al_text** out);
/* k == SIZE_MAX reports kappa only; otherwise also the exact and lower-bound readings. */
AL_API al_status al_report_graph_kconn(const al_graph* g, size_t k, const al_options* options,
                                       int* verdict, al_text** out);
AL_API al_status al_report_arrow_decide(const al_graph* f, const al_graph* g, const al_graph* h,
                                        const al_options* options, int* verdict, al_text** out);
/* limit 0 = all. */
AL_API al_status al_report_arrow_enumerate(const al_graph* f, const al_graph* g,
                                           const al_graph* h, size_t limit,
                                           const al_options* options, al_text** out);
AL_API al_status al_report_arrow_minimal(const al_graph* f, const al_graph* g, const al_graph* h,
                                         const al_options* options, int* verdict, al_text** out);
/* signal NULL means "f". */
AL_API al_status al_report_verify_determiner(const al_marked* d, const al_graph* g,
                                             const al_graph* h, const char* signal,
                                             const al_options* options, int* verdict,
                                             al_text** out);
AL_API al_status al_report_verify_sender(const al_marked* s, const al_graph* g,
                                         const al_graph* h, int positive,
                                         const al_options* options, int* verdict, al_text** out);
AL_API al_status al_report_sender_search(const al_graph* g, const al_graph* h, int positive,
                                         size_t max_vertices, int nonadjacent_signals,
                                         const al_options* options, int* verdict, al_text** out);
/* Marked-graph output (join, identify, chain, close, build) as a report:
 * text format is the marked graph file itself, with `#` comment lines. */
AL_API al_status al_report_marked(const char* command, const al_marked* m, size_t collapsed,
                                  const al_options* options, al_text** out);
AL_API al_status al_report_hanf_types(const al_graph* g, size_t radius,
                                      const al_options* options, al_text** out);
AL_API al_status al_report_hanf_census(const al_graph* g, size_t radius,
                                       const al_options* options, al_text** out);
AL_API al_status al_report_hanf_equiv(const al_graph* a, const al_graph* b, size_t radius,
                                      const al_options* options, int* verdict, al_text** out);
AL_API al_status al_report_hanf_certificate(const al_graph* a, const al_graph* b, size_t rank,
                                            const al_options* options, int* verdict,
                                            al_text** out);
/* formulas: one per line, `#` comments. */
AL_API al_status al_report_fo_qr(const char* formulas, const al_options* options, al_text** out);
AL_API al_status al_report_fo_eval(const al_graph* g, const char* sentences,
                                   const al_options* options, al_text** out);
/* sentences NULL = default corpus at the given rank. verdict 1 = no separation. */
AL_API al_status al_report_fo_compare(const al_graph* a, const al_graph* b,
                                      const char* sentences, size_t rank,
                                      const al_options* options, int* verdict, al_text** out);
AL_API al_status al_report_witness_build(const al_marked* sender, const al_graph* g,
                                         const al_graph* h, size_t n,
                                         int waive_sender_minimality, const al_options* options,
                                         int* minimal, al_text** out);
AL_API al_status al_report_witness_pair(const al_marked* f, const al_options* options,
                                        al_text** out);
/* status receives an AL_WITNESS_* value. */
AL_API al_status al_report_witness_run(const al_marked* sender, const al_graph* g,
                                       const al_graph* h, size_t rank,
                                       int waive_sender_minimality, const al_options* options,
                                       int* status, al_text** out);
AL_API al_status al_report_witness_certify(const al_graph* f1, const al_graph* f2,
                                           const al_graph* g, const al_graph* h, size_t rank,
                                           const al_options* options, int* status,
                                           al_text** out);
AL_API al_status al_report_witness_bijection(const al_marked* f, size_t rank,
                                             const al_options* options, int* verdict,
                                             al_text** out);

#ifdef __cplusplus
}
#endif

#endif
