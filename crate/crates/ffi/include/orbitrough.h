#ifndef ORBITROUGH_H
#define ORBITROUGH_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

#define ORBITROUGH_OK 0

/**
 * A required pointer argument was null.
 */
#define ORBITROUGH_ERR_NULL 1

/**
 * Graph text or a family spec could not be parsed.
 */
#define ORBITROUGH_ERR_PARSE 2

/**
 * A vertex id was not below the vertex count.
 */
#define ORBITROUGH_ERR_VERTEX 3

/**
 * The request exceeds a configured size bound.
 */
#define ORBITROUGH_ERR_SIZE_LIMIT 4

/**
 * An argument was well-formed but not acceptable.
 */
#define ORBITROUGH_ERR_INVALID_ARG 5

/**
 * A string argument was not valid UTF-8.
 */
#define ORBITROUGH_ERR_UTF8 6

/**
 * The library panicked; the handle arguments should be considered suspect.
 */
#define ORBITROUGH_ERR_PANIC 7

/**
 * A graph together with its orbit partition.
 */
typedef struct OrGraph OrGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null after a
 * successful call. Valid until the next call on this thread.
 */
const char *orbitrough_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *orbitrough_version(void);

/**
 * Parses an edge-list graph (`n m` header, then `u v` lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
int32_t orbitrough_graph_parse_edge_list(const char *text, struct OrGraph **out);

/**
 * Parses a DIMACS graph.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable pointer.
 */
int32_t orbitrough_graph_parse_dimacs(const char *text, struct OrGraph **out);

/**
 * Builds a named family member such as `path:5` or `complete_bipartite:2,3`.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a writable pointer.
 */
int32_t orbitrough_graph_family(const char *spec, struct OrGraph **out);

/**
 * Builds a graph on `n` vertices from `edge_count` pairs stored flat in
 * `endpoints` (length `2 * edge_count`).
 *
 * # Safety
 * `endpoints` must point to `2 * edge_count` values (or be null when
 * `edge_count` is 0) and `out` must be writable.
 */
int32_t orbitrough_graph_from_edges(uintptr_t n,
                                    const uintptr_t *endpoints,
                                    uintptr_t edge_count,
                                    struct OrGraph **out);

/**
 * Releases a graph handle. Null is ignored.
 *
 * # Safety
 * `g` must come from an `orbitrough_graph_*` constructor and not be used
 * afterwards.
 */
void orbitrough_graph_free(struct OrGraph *g);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void orbitrough_string_free(char *s);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
int32_t orbitrough_graph_vertex_count(const struct OrGraph *g, uintptr_t *out);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
int32_t orbitrough_graph_edge_count(const struct OrGraph *g, uintptr_t *out);

/**
 * Number of automorphism orbits.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
int32_t orbitrough_orbit_count(const struct OrGraph *g, uintptr_t *out);

/**
 * Writes the orbit index of every vertex into `out`, which must hold
 * exactly as many entries as the graph has vertices. Orbits are numbered
 * by their smallest vertex.
 *
 * # Safety
 * `g` must be a live handle and `out` must point to `len` writable values.
 */
int32_t orbitrough_orbit_ids(const struct OrGraph *g, uintptr_t *out, uintptr_t len);

/**
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
int32_t orbitrough_same_orbit(const struct OrGraph *g, uintptr_t u, uintptr_t v, bool *out);

/**
 * Whether `x` and `y` are indiscernible with respect to the attribute set.
 *
 * # Safety
 * `g` must be a live handle, `attrs` must point to `attrs_len` values and
 * `out` must be writable.
 */
int32_t orbitrough_indiscernible(const struct OrGraph *g,
                                 uintptr_t x,
                                 uintptr_t y,
                                 const uintptr_t *attrs,
                                 uintptr_t attrs_len,
                                 bool *out);

/**
 * Rough membership of `x` in the target set as a reduced fraction.
 *
 * # Safety
 * `g` must be a live handle, the set pointers must cover their lengths and
 * `numer`, `denom` must be writable.
 */
int32_t orbitrough_rough_membership(const struct OrGraph *g,
                                    const uintptr_t *attrs,
                                    uintptr_t attrs_len,
                                    const uintptr_t *target,
                                    uintptr_t target_len,
                                    uintptr_t x,
                                    uintptr_t *numer,
                                    uintptr_t *denom);

/**
 * `{"k":..,"orbits":[[..],..]}`.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
int32_t orbitrough_orbits_json(const struct OrGraph *g, char **out);

/**
 * Blocks of the indiscernibility partition.
 *
 * # Safety
 * `g` must be a live handle, `attrs` must cover `attrs_len` values and
 * `out` must be writable.
 */
int32_t orbitrough_partition_json(const struct OrGraph *g,
                                  const uintptr_t *attrs,
                                  uintptr_t attrs_len,
                                  char **out);

/**
 * Lower and upper approximation, boundary and exactness.
 *
 * # Safety
 * `g` must be a live handle, the set pointers must cover their lengths and
 * `out` must be writable.
 */
int32_t orbitrough_approximation_json(const struct OrGraph *g,
                                      const uintptr_t *attrs,
                                      uintptr_t attrs_len,
                                      const uintptr_t *target,
                                      uintptr_t target_len,
                                      char **out);

/**
 * Positive region and degree of dependency of the decision set.
 *
 * # Safety
 * `g` must be a live handle, the set pointers must cover their lengths and
 * `out` must be writable.
 */
int32_t orbitrough_dependency_json(const struct OrGraph *g,
                                   const uintptr_t *attrs,
                                   uintptr_t attrs_len,
                                   const uintptr_t *decision,
                                   uintptr_t decision_len,
                                   char **out);

/**
 * Reducts and core of the attribute set.
 *
 * # Safety
 * `g` must be a live handle, `attrs` must cover `attrs_len` values and
 * `out` must be writable.
 */
int32_t orbitrough_reducts_json(const struct OrGraph *g,
                                const uintptr_t *attrs,
                                uintptr_t attrs_len,
                                char **out);

/**
 * Essential sets with their size profile and minimum size.
 *
 * # Safety
 * `g` must be a live handle, `attrs` must cover `attrs_len` values and
 * `out` must be writable.
 */
int32_t orbitrough_essential_json(const struct OrGraph *g,
                                  const uintptr_t *attrs,
                                  uintptr_t attrs_len,
                                  char **out);

/**
 * Quotient discernibility matrix over the orbits.
 *
 * # Safety
 * `g` must be a live handle and `out` writable.
 */
int32_t orbitrough_qdm_json(const struct OrGraph *g, char **out);

/**
 * Runs a self-check suite (`all`, `partitions`, `approximations`,
 * `reducts`, `essentials`, `discernibility`). Returns `ORBITROUGH_OK` even
 * when checks fail; inspect `"passed"` in the report.
 *
 * # Safety
 * `g` must be a live handle, `suite` a NUL-terminated string and `out`
 * writable.
 */
int32_t orbitrough_verify_json(const struct OrGraph *g,
                               const char *suite,
                               uint64_t seed,
                               char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORBITROUGH_H */
