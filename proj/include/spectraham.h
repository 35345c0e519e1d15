/* spectraham C API: spectral Hamiltonicity toolkit.
 *
 * Opaque handles + status codes; rich results (theorem verdicts, sharpness
 * and survey reports) come back as JSON strings released with
 * sp_string_free. All functions are thread-compatible: handles are
 * immutable once created and may be shared across threads.
 */
#ifndef SPECTRAHAM_H
#define SPECTRAHAM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SP_API __declspec(dllexport)
#else
#define SP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

#define SPECTRAHAM_API_VERSION 1

typedef enum sp_status {
    SP_OK = 0,
    SP_ERR_INVALID_ARGUMENT = 1,
    SP_ERR_INVALID_EDGE = 2,
    SP_ERR_INVALID_VERTEX = 3,
    SP_ERR_EMPTY_GRAPH = 4,
    SP_ERR_NOT_BALANCED = 5,
    SP_ERR_CONVERGENCE = 6,
    SP_ERR_TOO_LARGE = 7,
    SP_ERR_DOMAIN = 8,
    SP_ERR_HYPOTHESIS_NOT_MET = 9,
    SP_ERR_INVALID_FAMILY_PARAMS = 10,
    SP_ERR_UNAVAILABLE_FAMILY = 11,
    SP_ERR_PARSE = 12,
    SP_ERR_NOMEM = 13,
    SP_ERR_INTERNAL = 14
} sp_status;

/* A simple graph, optionally tagged with a bipartition (vertices [0, x_size)
 * form X, the rest Y, all edges crossing). */
typedef struct sp_graph sp_graph;

SP_API const char* sp_version(void);
SP_API int sp_api_version(void);
SP_API const char* sp_status_name(sp_status status);
/* Message for the most recent failure on this thread. */
SP_API const char* sp_last_error(void);

SP_API void sp_graph_free(sp_graph* g);
SP_API void sp_string_free(char* s);
SP_API void sp_buffer_free(void* p);

/* ---- construction and serialization ---- */

/* endpoints: 2*edge_count vertex indices, (u, v) pairs. */
SP_API sp_status sp_graph_from_edges(int32_t n, const int32_t* endpoints, size_t edge_count,
                                     sp_graph** out);
/* endpoints are (x index, y index) pairs; the handle carries the parts. */
SP_API sp_status sp_bipartite_from_edges(int32_t x_size, int32_t y_size, const int32_t* endpoints,
                                         size_t edge_count, sp_graph** out);
SP_API sp_status sp_graph_from_graph6(const char* text, sp_graph** out);
/* Attach (or re-attach) a bipartition to an existing handle. */
SP_API sp_status sp_graph_set_x_size(sp_graph* g, int32_t x_size);

SP_API int32_t sp_graph_order(const sp_graph* g);
SP_API int64_t sp_graph_edge_count(const sp_graph* g);
/* -1 when the handle has no bipartition attached. */
SP_API int32_t sp_graph_x_size(const sp_graph* g);
SP_API int sp_graph_has_edge(const sp_graph* g, int32_t u, int32_t v);
SP_API int32_t sp_graph_degree(const sp_graph* g, int32_t v);
SP_API int sp_graph_is_connected(const sp_graph* g);
SP_API int sp_graph_is_two_connected(const sp_graph* g);

SP_API sp_status sp_graph_to_graph6(const sp_graph* g, char** out);
SP_API sp_status sp_graph_to_json(const sp_graph* g, char** out);
SP_API sp_status sp_graph_to_dot(const sp_graph* g, char** out);
/* Canonical digest string used in reports. */
SP_API sp_status sp_graph_digest(const sp_graph* g, char** out);
SP_API sp_status sp_graph_stats_json(const sp_graph* g, char** out);

/* ---- graph algebra ---- */

SP_API sp_status sp_graph_complement(const sp_graph* g, sp_graph** out);
/* Requires a bipartition on the handle. */
SP_API sp_status sp_graph_quasi_complement(const sp_graph* g, sp_graph** out);
SP_API sp_status sp_graph_join(const sp_graph* a, const sp_graph* b, sp_graph** out);
SP_API sp_status sp_graph_disjoint_union(const sp_graph* a, const sp_graph* b, sp_graph** out);
/* G ∨ K1, cone vertex at index 0. */
SP_API sp_status sp_graph_add_cone(const sp_graph* g, sp_graph** out);

/* ---- spectra ---- */

typedef enum sp_matrix_kind {
    SP_MATRIX_ADJACENCY = 0,
    SP_MATRIX_SIGNLESS_LAPLACIAN = 1
} sp_matrix_kind;

typedef enum sp_solve_method {
    SP_METHOD_AUTO = 0,
    SP_METHOD_DENSE = 1,
    SP_METHOD_POWER = 2
} sp_solve_method;

typedef struct sp_spectral_info {
    double value;
    double residual;
    int64_t iterations;
    int method; /* sp_solve_method actually used */
} sp_spectral_info;

SP_API sp_status sp_spectral_radius(const sp_graph* g, sp_matrix_kind kind, double tol, int method,
                                    sp_spectral_info* out);
/* Also copies the unit eigenvector into vec (length sp_graph_order). */
SP_API sp_status sp_spectral_radius_vector(const sp_graph* g, sp_matrix_kind kind, double tol,
                                           int method, sp_spectral_info* out, double* vec);
/* Degree/edge bounds as JSON; with_spectral also eigensolves and reports
 * mu, q and the cone lower bound next to the bounds. */
SP_API sp_status sp_bounds_json(const sp_graph* g, int with_spectral, double tol, char** out);

/* ---- closures ---- */

/* k >= 0: k-closure of a plain graph. Handles with a balanced bipartition
 * run the bipartite closure instead (threshold n+1, k ignored).
 * added: lib-allocated (x,y)/(u,v) pairs, release with sp_buffer_free. */
SP_API sp_status sp_closure(const sp_graph* g, int32_t k, sp_graph** closed, int32_t** added,
                            size_t* added_count);

/* ---- exact oracles ---- */

typedef enum sp_property {
    SP_PROP_HAMILTONIAN = 0,
    SP_PROP_TRACEABLE = 1,
    SP_PROP_HAMILTON_CONNECTED = 2,
    SP_PROP_TRACEABLE_FROM_EVERY_VERTEX = 3,
    SP_PROP_TRACEABLE_FROM = 4
} sp_property;

typedef struct sp_oracle_info {
    int holds;
    int32_t failing_u; /* -1 when absent */
    int32_t failing_v;
    int32_t failing_vertex;
} sp_oracle_info;

/* vertex: start vertex for SP_PROP_TRACEABLE_FROM, ignored otherwise.
 * witness: optional; lib-allocated vertex sequence of length *witness_len. */
SP_API sp_status sp_oracle_check(const sp_graph* g, sp_property property, int32_t vertex, int32_t cap,
                                 sp_oracle_info* out, int32_t** witness, size_t* witness_len);
SP_API sp_status sp_ham_path_between(const sp_graph* g, int32_t u, int32_t v, int32_t cap,
                                     sp_oracle_info* out, int32_t** witness, size_t* witness_len);

/* ---- families ---- */

/* family: e.g. "Bnk", "Cnk", "K2JoinSplit", "Gamma2MinusV", ... */
SP_API sp_status sp_family_build(const char* family, int32_t n, int32_t k, int32_t variant,
                                 sp_graph** out);
SP_API sp_status sp_family_sample(const char* family, int32_t n, int32_t k, int32_t count,
                                  uint64_t seed, int32_t index, sp_graph** out);
SP_API sp_status sp_family_membership(const sp_graph* g, const char* family, int32_t n, int32_t k,
                                      int* member, char** witness_json);

/* ---- conditions, theorems, reports (JSON out) ---- */

/* condition: "ore_hamilton_connected", "degree_sequence_hc",
 * "bipartite_edge_conditions" (k used by the bipartite branch). */
SP_API sp_status sp_condition_check(const sp_graph* g, const char* condition, int32_t k, char** out);

/* theorem: "T2_10".."T3_11"; thm211_proof_variant switches the T2_11
 * threshold tail to the proof's 2/sqrt(n-1). validate > 0 adds an oracle
 * cross-check (cap oracle_cap) under "validation". */
SP_API sp_status sp_theorem_check(const sp_graph* g, const char* theorem, int32_t k, double tol,
                                  double epsilon, int thm211_proof_variant, int validate,
                                  int32_t oracle_cap, char** out);
/* lemma: "L2_9" or "L3_8". */
SP_API sp_status sp_sharpness(const char* lemma, int32_t n, int32_t k, double tol, char** out);
SP_API sp_status sp_remark_3_11(int32_t n, int32_t k, double tol, char** out);
/* params: JSON {"regime","n","k","samples","seed","tol","epsilon",
 * "oracle_cap","threads","thm211_variant"}; unknown keys rejected. */
SP_API sp_status sp_survey(const char* params_json, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRAHAM_H */
