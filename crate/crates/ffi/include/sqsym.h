#ifndef SQSYM_H
#define SQSYM_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a call.
 */
typedef enum SqsymStatus {
  SQSYM_STATUS_OK = 0,
  SQSYM_STATUS_NULL_POINTER = 1,
  SQSYM_STATUS_INVALID_UTF8 = 2,
  SQSYM_STATUS_PARSE = 3,
  SQSYM_STATUS_INVALID_INPUT = 4,
  SQSYM_STATUS_SIZE_GUARD = 5,
  SQSYM_STATUS_CYCLIC = 6,
  SQSYM_STATUS_INTERNAL = 7,
} SqsymStatus;

/**
 * How the invariant is computed.
 */
typedef enum SqsymMethod {
  SQSYM_METHOD_ORACLE = 0,
  SQSYM_METHOD_CHAMBERS = 1,
  SQSYM_METHOD_THEOREM = 2,
} SqsymMethod;

typedef enum SqsymFormat {
  SQSYM_FORMAT_TEXT = 0,
  SQSYM_FORMAT_JSON = 1,
} SqsymFormat;

/**
 * A directed signed graph.
 */
typedef struct SqsymGraph SqsymGraph;

/**
 * The chromatic invariant: a polynomial in `t` over the monomial basis.
 */
typedef struct SqsymInvariant SqsymInvariant;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *sqsym_last_error(void);

/**
 * Parses a directed graph document. An edgeless undirected document is
 * accepted as the edgeless directed graph.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum SqsymStatus sqsym_graph_from_json(const char *json, struct SqsymGraph **out);

/**
 * The two-vertex worked example.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SqsymStatus sqsym_graph_example(struct SqsymGraph **out);

/**
 * The circulant tournament on `d` vertices with steps `1..=k`, switched
 * at the `switched_len` vertices in `switched` (which may be null when the
 * length is zero).
 *
 * # Safety
 * `switched` must point to `switched_len` readable values; `out` must be valid.
 */
enum SqsymStatus sqsym_graph_circulant(size_t d,
                                       size_t k,
                                       const size_t *switched,
                                       size_t switched_len,
                                       struct SqsymGraph **out);

/**
 * A seeded random directed signed graph.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SqsymStatus sqsym_graph_random(size_t d, uint64_t seed, struct SqsymGraph **out);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t sqsym_graph_vertex_count(const struct SqsymGraph *graph);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t sqsym_graph_edge_count(const struct SqsymGraph *graph);

/**
 * Whether the orientation has no directed cycle in the double cover.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum SqsymStatus sqsym_graph_is_acyclic(const struct SqsymGraph *graph, bool *out);

/**
 * The graph as a JSON document, released with [`sqsym_string_free`].
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum SqsymStatus sqsym_graph_to_json(const struct SqsymGraph *graph, char **out);

/**
 * # Safety
 * `graph` must be null or a handle not yet freed.
 */
void sqsym_graph_free(struct SqsymGraph *graph);

/**
 * Computes the chromatic invariant; `method` is an [`SqsymMethod`]. Exhaustive work is refused above
 * `max_vertices` vertices.
 *
 * # Safety
 * `graph` must be a live handle and `out` a valid pointer.
 */
enum SqsymStatus sqsym_chromatic(const struct SqsymGraph *graph,
                                 uint32_t method,
                                 size_t max_vertices,
                                 struct SqsymInvariant **out);

/**
 * Renders the invariant in an [`SqsymFormat`], released with [`sqsym_string_free`].
 *
 * # Safety
 * `invariant` must be a live handle and `out` a valid pointer.
 */
enum SqsymStatus sqsym_invariant_render(const struct SqsymInvariant *invariant,
                                        uint32_t format,
                                        char **out);

/**
 * Whether every `t`-coefficient is signed symmetric.
 *
 * # Safety
 * `invariant` must be a live handle and `out` a valid pointer.
 */
enum SqsymStatus sqsym_invariant_is_symmetric(const struct SqsymInvariant *invariant, bool *out);

/**
 * Whether two invariants are equal.
 *
 * # Safety
 * Both handles must be live and `out` a valid pointer.
 */
enum SqsymStatus sqsym_invariant_equal(const struct SqsymInvariant *a,
                                       const struct SqsymInvariant *b,
                                       bool *out);

/**
 * Evaluates at `x_i = 1` for `|i| <= m` and at `t = t_num / t_den`. The
 * exact rational result is written as `p` or `p/q`.
 *
 * # Safety
 * `invariant` must be a live handle and `out` a valid pointer.
 */
enum SqsymStatus sqsym_invariant_count(const struct SqsymInvariant *invariant,
                                       uint64_t m,
                                       int64_t t_num,
                                       int64_t t_den,
                                       char **out);

/**
 * # Safety
 * `invariant` must be null or a handle not yet freed.
 */
void sqsym_invariant_free(struct SqsymInvariant *invariant);

/**
 * Dimension of the degree-`degree` piece of the algebra, in decimal.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum SqsymStatus sqsym_dimension(size_t degree, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void sqsym_string_free(char *s);

/**
 * Library version, statically allocated.
 */
const char *sqsym_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SQSYM_H */
