#ifndef DISCUT_H
#define DISCUT_H

/* Generated by cbindgen from discut-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by every fallible entry point.
 */
typedef enum {
  DISCUT_STATUS_OK = 0,
  DISCUT_STATUS_NULL_ARGUMENT = 1,
  DISCUT_STATUS_INVALID_INPUT = 2,
  DISCUT_STATUS_OUT_OF_SCOPE = 3,
  DISCUT_STATUS_INTERNAL = 4,
  DISCUT_STATUS_BAD_UTF8 = 5,
} DiscutStatus;

/**
 * Opaque graph handle.
 */
typedef struct DiscutGraph DiscutGraph;

/**
 * Opaque verdict handle; owns its strings and certificate copy.
 */
typedef struct DiscutVerdict DiscutVerdict;

/**
 * Library version string; static storage, do not free.
 */
const char *discut_version(void);

/**
 * Builds a graph on `n` vertices from `edge_pairs` (u,v) pairs laid out as
 * 2*edge_pairs u32 values. On success writes a handle to `out`.
 *
 * # Safety
 * `edges` must point to 2*edge_pairs readable u32 values and `out` to a
 * writable pointer slot.
 */
DiscutStatus discut_graph_new(uint32_t n,
                              const uint32_t *edges,
                              uintptr_t edge_pairs,
                              DiscutGraph **out);

/**
 * Parses the plain-text instance format (`n m` header plus edge lines).
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a writable slot.
 */
DiscutStatus discut_graph_parse(const char *text, DiscutGraph **out);

/**
 * Vertex count; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a pointer previously returned by this library and not yet freed.
 */
uint32_t discut_graph_n(const DiscutGraph *g);

/**
 * Edge count; 0 for a null handle.
 *
 * # Safety
 * `g` must be null or a pointer previously returned by this library and not yet freed.
 */
uint32_t discut_graph_m(const DiscutGraph *g);

/**
 * Frees a graph handle; null is a no-op.
 *
 * # Safety
 * `g` must be null or a pointer previously returned by this library and not yet freed.
 */
void discut_graph_free(DiscutGraph *g);

/**
 * Solves via the automatic route (claw-free pipeline or the 4-vertex-class
 * dispatcher). `oracle_budget` of 0 means the default.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a writable slot.
 */
DiscutStatus discut_solve_auto(const DiscutGraph *g, uint64_t oracle_budget, DiscutVerdict **out);

/**
 * Runs the exponential subset oracle directly.
 *
 * # Safety
 * `g` must be a live graph handle and `out` a writable slot.
 */
DiscutStatus discut_solve_oracle(const DiscutGraph *g, uint64_t oracle_budget, DiscutVerdict **out);

/**
 * 1 = yes, 0 = no, 2 = unresolved, -1 = null handle.
 *
 * # Safety
 * `v` must be null or a pointer previously returned by this library and not yet freed.
 */
int32_t discut_verdict_answer(const DiscutVerdict *v);

/**
 * Reason code string; borrowed from the verdict, do not free.
 *
 * # Safety
 * `v` must be null or a pointer previously returned by this library and not yet freed.
 */
const char *discut_verdict_reason(const DiscutVerdict *v);

/**
 * Solver route string; borrowed from the verdict, do not free.
 *
 * # Safety
 * `v` must be null or a pointer previously returned by this library and not yet freed.
 */
const char *discut_verdict_route(const DiscutVerdict *v);

/**
 * Number of vertices in certificate part `part` (0..3); 0 when the verdict
 * carries no certificate.
 *
 * # Safety
 * `v` must be null or a pointer previously returned by this library and not yet freed.
 */
uintptr_t discut_verdict_part_len(const DiscutVerdict *v, uint32_t part);

/**
 * Copies certificate part `part` into `buf` (up to `cap` values) and
 * returns how many were written.
 *
 * # Safety
 * `buf` must point to at least `cap` writable u32 values.
 */
uintptr_t discut_verdict_part(const DiscutVerdict *v, uint32_t part, uint32_t *buf, uintptr_t cap);

/**
 * Frees a verdict handle; null is a no-op.
 *
 * # Safety
 * `v` must be null or a pointer previously returned by this library and not yet freed.
 */
void discut_verdict_free(DiscutVerdict *v);

#endif  /* DISCUT_H */
