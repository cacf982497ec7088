/* C interface to the tripack triangle packing/covering toolkit.
 *
 * Graphs travel as opaque handles; every structured result is returned as a
 * heap-allocated JSON string (release with tripack_string_free). Functions
 * return TRIPACK_OK on success; on any other status, tripack_last_error()
 * describes the failure for the calling thread.
 */
#ifndef TRIPACK_C_H
#define TRIPACK_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tripack_graph tripack_graph;

typedef enum tripack_status {
    TRIPACK_OK = 0,
    TRIPACK_ERR_PARSE = 1,        /* malformed JSON or type invariant violation */
    TRIPACK_ERR_PRECONDITION = 2, /* operation called outside its precondition */
    TRIPACK_ERR_DOMAIN = 3,       /* numeric argument outside its domain */
    TRIPACK_ERR_BUDGET = 4,       /* search budget exhausted */
    TRIPACK_ERR_INFEASIBLE = 5,   /* no object with the requested properties */
    TRIPACK_ERR_NULL = 6,         /* null pointer argument */
    TRIPACK_ERR_INTERNAL = 7
} tripack_status;

const char* tripack_status_name(tripack_status status);

/* Message for the most recent failure on this thread. */
const char* tripack_last_error(void);

void tripack_string_free(char* text);

/* Graph JSON: {"n": int, "classes": [{"role": "clique"|"independent",
 * "vertices": [int]}], "edges": [[u,v], ...]}; "classes" may be empty. */
tripack_status tripack_graph_from_json(const char* json, tripack_graph** out);
tripack_status tripack_graph_to_json(const tripack_graph* g, char** out);
void tripack_graph_free(tripack_graph* g);
int tripack_graph_vertices(const tripack_graph* g);
int tripack_graph_edges(const tripack_graph* g);

/* [[a,b,c], ...] ascending. */
tripack_status tripack_enumerate_triangles(const tripack_graph* g, char** out);

/* method: "konig" | "vizing" | "class1". Result: list of classes, each a list
 * of [u,v] edges. konig derives the bipartition from the graph's classes when
 * present (two independent classes), otherwise from a 2-coloring. */
tripack_status tripack_color(const tripack_graph* g, const char* method, int64_t budget,
                             char** out);

/* All bound values applicable to the input, keyed by name, exact rationals as
 * strings. */
tripack_status tripack_bounds(const tripack_graph* g, char** out);

/* method: "clique" | "cut". Result: list of hitting edges. */
tripack_status tripack_hit(const tripack_graph* g, const char* method, uint64_t seed,
                           char** out);

/* {"value": k, "triangles": [[a,b,c],...]} */
tripack_status tripack_exact_nu(const tripack_graph* g, int64_t budget, char** out);
/* {"value": k, "edges": [[u,v],...]} */
tripack_status tripack_exact_tau(const tripack_graph* g, int64_t budget, char** out);
/* {"value": k, "sides": [[...],[...]]} */
tripack_status tripack_exact_max_cut(const tripack_graph* g, char** out);

/* Bipartite f-factor on a graph with exactly two independent classes (C, D).
 * degrees_json maps vertex id (as string) to required degree. Result: edge
 * list of the factor. */
tripack_status tripack_f_factor(const tripack_graph* g, const char* degrees_json,
                                char** out);

/* Certificate for the complete 4-partite graph with the given part sizes:
 * {"parts", "packing", "hitting", "ratio", "case_tag"} plus {"nu","tau"} when
 * with_exact is nonzero. */
tripack_status tripack_certify_4partite(int a, int b, int c, int d, int with_exact,
                                        int64_t budget, char** out);

/* Generators; result is Graph JSON. */
tripack_status tripack_gen_split(int n, int delta_min, uint64_t seed, char** out);
tripack_status tripack_gen_tripartite(int n, int m, uint64_t seed, char** out);

/* Experiment reports; format "json" or "csv". failures receives the number of
 * failing rows (may be NULL). */
tripack_status tripack_verify_split(int trials, int n_max, uint64_t seed, int64_t budget,
                                    const char* format, char** out, int* failures);
tripack_status tripack_verify_tripartite(int trials, int n_max, uint64_t seed,
                                         int64_t budget, const char* format, char** out,
                                         int* failures);
tripack_status tripack_sweep_4partite(int a_max, int64_t budget, const char* format,
                                      char** out, int* failures);

#ifdef __cplusplus
}
#endif

#endif
