#ifndef GAMECODES_H
#define GAMECODES_H

/* Generated from the gamecodes-ffi crate by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum GcStatus {
  /**
   * Success; out parameters are valid.
   */
  GC_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  GC_STATUS_NULL_ARGUMENT = 1,
  /**
   * A text argument was not valid UTF-8.
   */
  GC_STATUS_INVALID_UTF8 = 2,
  /**
   * Input text failed to parse; see gc_last_error.
   */
  GC_STATUS_PARSE_ERROR = 3,
  /**
   * Arguments violate a documented precondition; see gc_last_error.
   */
  GC_STATUS_PRECONDITION = 4,
  /**
   * The computation would exceed a scale cap; see gc_last_error.
   */
  GC_STATUS_SCALE_CAP = 5,
  /**
   * An index argument was out of range.
   */
  GC_STATUS_INDEX_OUT_OF_RANGE = 6,
  /**
   * An internal invariant failed; see gc_last_error.
   */
  GC_STATUS_INTERNAL = 7,
} GcStatus;

/**
 * An immutable binary code: fixed-width words, sorted ascending.
 */
typedef struct GcCode GcCode;

/**
 * A token-movement graph (vertices and directed edges).
 */
typedef struct GcGraph GcGraph;

/**
 * A fully solved game over all positions of a graph's token game.
 */
typedef struct GcSolution GcSolution;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread; never free it.
 */
const char *gc_last_error(void);

/**
 * Free a string returned by this library. Null is accepted.
 *
 * # Safety
 * `s` must be a pointer previously returned by a gc_* function that
 * documents gc_string_free ownership, or null; it must not be used
 * again afterwards.
 */
void gc_string_free(char *s);

/**
 * Parse a graph file (see the text format in the library docs) into a
 * new graph handle. On success the caller owns the handle and releases
 * it with gc_graph_free.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must point to
 * writable storage for one pointer.
 */
enum GcStatus gc_graph_parse(const char *text, struct GcGraph **out);

/**
 * Build the two-layer family graph on 2^(t-1) paired vertices.
 * Supported range: 1 <= t <= 10.
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
enum GcStatus gc_graph_gamma_t(uint32_t t, struct GcGraph **out);

/**
 * Build a single take-any-number heap of the given size (1..=4096).
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
enum GcStatus gc_graph_nim_heap(uint32_t size, struct GcGraph **out);

/**
 * Build the star graph: k vertices with one move each into a shared
 * sink (1..=4096).
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
enum GcStatus gc_graph_star(uint32_t k, struct GcGraph **out);

/**
 * Build the fixed five-vertex graph with a two-cycle and two sink
 * feeders.
 *
 * # Safety
 * `out` must point to writable storage for one pointer.
 */
enum GcStatus gc_graph_example2(struct GcGraph **out);

/**
 * Disjoint union of two graphs; the second graph's vertices are
 * renumbered after the first's.
 *
 * # Safety
 * `a` and `b` must be live graph handles; `out` must point to writable
 * storage for one pointer.
 */
enum GcStatus gc_graph_sum(const struct GcGraph *a, const struct GcGraph *b, struct GcGraph **out);

/**
 * Number of vertices; 0 if the handle is null.
 *
 * # Safety
 * `g` must be a live graph handle or null.
 */
size_t gc_graph_vertex_count(const struct GcGraph *g);

/**
 * Canonical text form of the graph; free with gc_string_free. Null if
 * the handle is null.
 *
 * # Safety
 * `g` must be a live graph handle or null.
 */
char *gc_graph_serialize(const struct GcGraph *g);

/**
 * Release a graph handle. Null is accepted.
 *
 * # Safety
 * `g` must be a handle returned by this library, not yet freed, or null.
 */
void gc_graph_free(struct GcGraph *g);

/**
 * Code of the losing positions of the token game on `g`, sinks
 * projected away. `max_coords` caps the enumerated coordinate count
 * (2^c positions are built); pass 24 for the default budget.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must point to writable storage
 * for one pointer.
 */
enum GcStatus gc_anncode(const struct GcGraph *g, uint32_t max_coords, struct GcCode **out);

/**
 * Greedy code from a matrix-defined ordering. `matrix_text` is the
 * matrix file format (one row of 0/1 per line, top row first); `m` is
 * the ordering bit count, 0 meaning the full matrix size; thresholds
 * start at d = 1; `value_order` switches the scan to ascending integer
 * order. At most 2^20 vectors are enumerated.
 *
 * # Safety
 * `matrix_text` must be a valid NUL-terminated string; `out` must point
 * to writable storage for one pointer.
 */
enum GcStatus gc_lexicode(const char *matrix_text,
                          uint32_t d,
                          uint32_t m,
                          bool value_order,
                          struct GcCode **out);

/**
 * Greedy code over the span of the basis listed in `basis_text` (code
 * file format, one vector per line, file order kept). At most 20 basis
 * vectors are accepted.
 *
 * # Safety
 * `basis_text` must be a valid NUL-terminated string; `out` must point
 * to writable storage for one pointer.
 */
enum GcStatus gc_lexi_anncode(const char *basis_text, uint32_t d, struct GcCode **out);

/**
 * Parse a code file into a code handle.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string; `out` must point to
 * writable storage for one pointer.
 */
enum GcStatus gc_code_parse(const char *text, struct GcCode **out);

/**
 * Word length in bits; 0 if the handle is null.
 *
 * # Safety
 * `c` must be a live code handle or null.
 */
uint32_t gc_code_length(const struct GcCode *c);

/**
 * Number of codewords; 0 if the handle is null.
 *
 * # Safety
 * `c` must be a live code handle or null.
 */
size_t gc_code_size(const struct GcCode *c);

/**
 * 1 if the code is linear (closed under XOR, zero included).
 *
 * # Safety
 * `c` must be a live code handle or null.
 */
bool gc_code_is_linear(const struct GcCode *c);

/**
 * Dimension as a linear code, or -1 when the code is not linear.
 *
 * # Safety
 * `c` must be a live code handle or null.
 */
int64_t gc_code_dimension(const struct GcCode *c);

/**
 * Minimum distance, or -1 when undefined (fewer than two words).
 *
 * # Safety
 * `c` must be a live code handle or null.
 */
int64_t gc_code_min_distance(const struct GcCode *c);

/**
 * Codeword at `index` (ascending order) as an integer, least
 * significant bit = rightmost printed bit.
 *
 * # Safety
 * `c` must be a live code handle; `out` must point to writable storage
 * for one u64.
 */
enum GcStatus gc_code_word(const struct GcCode *c, size_t index, uint64_t *out);

/**
 * Text form of the code (one word per line, ascending); free with
 * gc_string_free. Null if the handle is null.
 *
 * # Safety
 * `c` must be a live code handle or null.
 */
char *gc_code_serialize(const struct GcCode *c);

/**
 * Release a code handle. Null is accepted.
 *
 * # Safety
 * `c` must be a handle returned by this library, not yet freed, or null.
 */
void gc_code_free(struct GcCode *c);

/**
 * Solve the token game on `g` over all positions: outcome
 * classification plus the general value table. `project_sinks` drops
 * sink vertices from the position encoding (the usual choice);
 * `max_coords` caps the coordinate count as in gc_anncode.
 *
 * # Safety
 * `g` must be a live graph handle; `out` must point to writable storage
 * for one pointer.
 */
enum GcStatus gc_solve(const struct GcGraph *g,
                       bool project_sinks,
                       uint32_t max_coords,
                       struct GcSolution **out);

/**
 * Number of position coordinates; 0 if the handle is null.
 *
 * # Safety
 * `s` must be a live solution handle or null.
 */
uint32_t gc_solution_width(const struct GcSolution *s);

/**
 * Number of solved positions (2^width); 0 if the handle is null.
 *
 * # Safety
 * `s` must be a live solution handle or null.
 */
uint64_t gc_solution_position_count(const struct GcSolution *s);

/**
 * Outcome of `position`: 0 = previous player wins (losing to move),
 * 1 = next player wins, 2 = draw.
 *
 * # Safety
 * `s` must be a live solution handle; `out` must point to writable
 * storage for one u8.
 */
enum GcStatus gc_solution_outcome(const struct GcSolution *s, uint64_t position, uint8_t *out);

/**
 * Value of `position`: writes 1 and the value when finite, 0 when
 * infinite (a draw-capable position).
 *
 * # Safety
 * `s` must be a live solution handle; `out_is_finite` and `out_value`
 * must point to writable storage.
 */
enum GcStatus gc_solution_gamma(const struct GcSolution *s,
                                uint64_t position,
                                bool *out_is_finite,
                                uint64_t *out_value);

/**
 * Finite values reachable in one move from an infinite-valued
 * `position` (its exit set), ascending. Writes up to `cap` values into
 * `buf` and stores the full count in `out_len`; call with cap = 0 to
 * query the length. Finite positions have an empty exit set here.
 *
 * # Safety
 * `s` must be a live solution handle; `buf` must point to `cap`
 * writable u64 slots (ignored when cap = 0); `out_len` must point to
 * writable storage.
 */
enum GcStatus gc_solution_gamma_exits(const struct GcSolution *s,
                                      uint64_t position,
                                      uint64_t *buf,
                                      size_t cap,
                                      size_t *out_len);

/**
 * Counter witness of `position`: writes 1 and the counter when the
 * position has one (finite value), 0 otherwise.
 *
 * # Safety
 * `s` must be a live solution handle; `out_has` and `out_value` must
 * point to writable storage.
 */
enum GcStatus gc_solution_counter(const struct GcSolution *s,
                                  uint64_t position,
                                  bool *out_has,
                                  uint64_t *out_value);

/**
 * Release a solution handle. Null is accepted.
 *
 * # Safety
 * `s` must be a handle returned by this library, not yet freed, or null.
 */
void gc_solution_free(struct GcSolution *s);

/**
 * Run every built-in reproduction check; returns the number of failing
 * checks (0 = the library reproduces all of its reference values).
 */
uint32_t gc_self_check(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GAMECODES_H */
