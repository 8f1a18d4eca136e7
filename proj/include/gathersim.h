/* C API for the gathersim library: oblivious-robot gathering simulation on
 * finite graphs. Opaque handles, integer status codes; all documents are
 * JSON strings owned by the library and released with gs_string_free().
 */
#ifndef GATHERSIM_H
#define GATHERSIM_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gs_graph gs_graph;

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_INVALID_ARGUMENT = 1,
  GS_ERR_PARSE = 2,
  GS_ERR_DISCONNECTED = 3,
  GS_ERR_SIMULATION = 4,
  GS_ERR_INTERNAL = 5
} gs_status;

const char* gs_version(void);

/* Message for the most recent failing call on this thread. */
const char* gs_last_error(void);

/* Graph text format: first line `n`, one `u v` line per edge, optional
 * trailing `colors c0 ... c{n-1}` line. */
gs_status gs_graph_parse(const char* text, gs_graph** out);

/* Families: path, cycle, complete, star, complete-bipartite, butterfly,
 * join-ring, windmill, threshold, join, random-tree, random-connected,
 * random-cactus, random-block, random-trivially-perfect. `params` are the
 * positional parameters as strings; `seed` feeds the random families. */
gs_status gs_graph_generate(const char* family, const char* const* params, int nparams,
                            unsigned long long seed, gs_graph** out);

void gs_graph_free(gs_graph* g);
int gs_graph_vertex_count(const gs_graph* g);
int gs_graph_edge_count(const gs_graph* g);
gs_status gs_graph_to_text(const gs_graph* g, char** out_text);

/* Orbit/terminal analysis document (schema gathersim.analyze/1). Requires a
 * connected graph. */
gs_status gs_analyze_json(const gs_graph* g, char** out_json);

/* Round-robin gathering run (schema gathersim.trace/1).
 *   algo:      "auto" | "terminal" | "nonterminal"
 *   adversary: "fixed" | "per-epoch"
 *   max_epochs: 0 = default cap 10*(occ*delta + n)
 *   double_eval: nonzero evaluates every activation under two relabelings
 *                and fails on any disagreement. */
gs_status gs_simulate_json(const gs_graph* g, const int* robots, int robot_count,
                           const char* algo, unsigned long long seed, const char* adversary,
                           int max_epochs, int double_eval, char** out_json);

/* Transition-conformance report (schema gathersim.check/1) for a persisted
 * trace document. */
gs_status gs_check_trace_json(const char* trace_json, char** out_json);

void gs_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* GATHERSIM_H */
