/*
 * C interface to the unit-distance graph workbench.
 *
 * Graphs are opaque handles owned by the caller (release with
 * udg_graph_free).  Strings returned through `char **` are heap allocated and
 * must be released with udg_string_free.  Every fallible call returns a
 * udg_status; on failure the thread-local udg_last_error() holds a message
 * and udg_status_name() gives the stable code string.
 */
#ifndef UDG_UDG_H
#define UDG_UDG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(UDG_BUILDING_LIBRARY)
#    define UDG_API __declspec(dllexport)
#  else
#    define UDG_API __declspec(dllimport)
#  endif
#else
#  define UDG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum udg_status {
    UDG_OK = 0,
    UDG_E_INVALID_ARGUMENT,
    UDG_E_PARSE,
    UDG_E_NEGATIVE_RADICAND,
    UDG_E_UNFACTORABLE_RADICAND,
    UDG_E_COINCIDENT_CENTERS,
    UDG_E_UNSUPPORTED_RADICAND,
    UDG_E_DISJOINT_CIRCLES,
    UDG_E_DUPLICATE_POINT,
    UDG_E_INVALID_GRAPH,
    UDG_E_GEOMETRY_MISMATCH,
    UDG_E_NOT_GEOMETRIC,
    UDG_E_VERTEX_COLLISION,
    UDG_E_EMPTY_GRAPH,
    UDG_E_SIZE_MISMATCH,
    UDG_E_INVALID_COLORING,
    UDG_E_BUDGET_EXCEEDED,
    UDG_E_NON_FINITE_INPUT,
    UDG_E_UNKNOWN_GRAPH,
    UDG_E_UNKNOWN_CLAIM,
    UDG_E_IO,
    UDG_E_INTERNAL
} udg_status;

typedef enum udg_graph_format {
    UDG_FORMAT_JSON = 0,
    UDG_FORMAT_DIMACS = 1
} udg_graph_format;

typedef struct udg_graph udg_graph;

typedef struct udg_solve_options {
    uint64_t node_limit; /* 0 = unlimited */
    unsigned threads;    /* 0 or 1 = deterministic single-threaded search */
} udg_solve_options;

UDG_API const char *udg_version(void);
/* Stable code string, e.g. "VertexCollision". */
UDG_API const char *udg_status_name(udg_status status);
/* Message of the last failed call on this thread ("" if none). */
UDG_API const char *udg_last_error(void);
UDG_API void udg_string_free(char *s);

/* ---- graphs ---------------------------------------------------------- */

UDG_API size_t udg_catalog_size(void);
/* Borrowed strings, valid for the process lifetime. */
UDG_API udg_status udg_catalog_entry(size_t index, const char **name, const char **description);
UDG_API udg_status udg_catalog_get(const char *name, udg_graph **out);

UDG_API udg_status udg_graph_parse(const char *text, udg_graph_format format, udg_graph **out);
UDG_API udg_status udg_graph_from_edges(size_t n, const size_t *pairs, size_t edge_count, udg_graph **out);
UDG_API udg_status udg_graph_clone(const udg_graph *g, udg_graph **out);
UDG_API void udg_graph_free(udg_graph *g);
UDG_API int udg_graph_equal(const udg_graph *a, const udg_graph *b);

UDG_API size_t udg_graph_vertex_count(const udg_graph *g);
UDG_API size_t udg_graph_edge_count(const udg_graph *g);
UDG_API int udg_graph_is_geometric(const udg_graph *g);
/* "(x; y)" form of vertex v; only for geometric graphs. */
UDG_API udg_status udg_graph_point(const udg_graph *g, size_t v, char **out);

UDG_API udg_status udg_graph_serialize(const udg_graph *g, udg_graph_format format, char **out);
UDG_API udg_status udg_graph_to_cnf(const udg_graph *g, size_t k, char **out);

/* g ⊕ pyth(t), t given as "p/q". */
UDG_API udg_status udg_minkowski_pyth(const udg_graph *g, const char *t, udg_graph **out);

/* elimination_order may be NULL; otherwise it must hold vertex_count entries. */
UDG_API udg_status udg_degeneracy(const udg_graph *g, size_t *degeneracy, size_t *min_degree,
                                  size_t *elimination_order);
UDG_API udg_status udg_max_clique(const udg_graph *g, size_t *size);

/* ---- coloring ------------------------------------------------------- */

/* colors must hold vertex_count entries; it is written only when colorable. */
UDG_API udg_status udg_is_k_colorable(const udg_graph *g, size_t k, const udg_solve_options *options,
                                      int *colorable, uint32_t *colors, uint64_t *nodes_explored);
/* below_nodes receives the node count of the (k-1) refutation, 0 when k == 1. */
UDG_API udg_status udg_chromatic_number(const udg_graph *g, const udg_solve_options *options,
                                        size_t *k, uint32_t *colors, uint64_t *below_nodes);
UDG_API udg_status udg_greedy_coloring(const udg_graph *g, size_t *colors_used, uint32_t *colors);
UDG_API udg_status udg_verify_coloring(const udg_graph *g, const uint32_t *colors, size_t count, int *proper);
/* Decodes DIMACS-signed literals of a k-colorability CNF model. */
UDG_API udg_status udg_cnf_decode(const udg_graph *g, size_t k, const long long *literals, size_t count,
                                  uint32_t *colors);

/* ---- plane colorings ------------------------------------------------ */

UDG_API udg_status udg_hex7_color(double x, double y, int *color);
UDG_API udg_status udg_hex7_window(double *s_min, double *s_max);
/* JSON report: samples, seed, side, coefficients, window, failures, ... */
UDG_API udg_status udg_hex7_verify(uint64_t samples, uint64_t seed, unsigned workers, char **json);
/* Coordinates as exact rationals "p/q". */
UDG_API udg_status udg_rational2_color(const char *x, const char *y, int *color);

/* ---- claims ---------------------------------------------------------- */

/* id NULL runs every claim; json != 0 selects the JSON report. */
UDG_API udg_status udg_claims_run(const char *id, uint64_t seed, uint64_t hex_samples, int json, char **out);

#ifdef __cplusplus
}
#endif

#endif /* UDG_UDG_H */
