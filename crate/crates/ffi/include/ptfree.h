/* C interface to the ptfree exact solvers. Vertex ids are 1-based. */

#pragma once

/* Generated with cbindgen:0.29.4 */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every fallible call.
 */
typedef enum PtStatus {
  PT_STATUS_OK = 0,
  /**
   * A required pointer argument was null.
   */
  PT_STATUS_NULL_ARGUMENT = 1,
  /**
   * Input text was not valid UTF-8.
   */
  PT_STATUS_INVALID_UTF8 = 2,
  /**
   * The instance file did not parse.
   */
  PT_STATUS_PARSE_ERROR = 3,
  /**
   * Arguments violated a documented precondition.
   */
  PT_STATUS_INVALID_INPUT = 4,
  /**
   * The graph is not Pt-free; the witness is in the error message.
   */
  PT_STATUS_NOT_PT_FREE = 5,
  /**
   * An internal structural guarantee failed.
   */
  PT_STATUS_INVARIANT_VIOLATION = 6,
  /**
   * Weight arithmetic overflowed 64 bits.
   */
  PT_STATUS_OVERFLOW = 7,
  /**
   * A solver panicked; this is a bug.
   */
  PT_STATUS_PANIC = 8,
} PtStatus;

/**
 * List 3-coloring result; also carries the cost for the min-cost variant.
 */
typedef struct PtColoringResult PtColoringResult;

/**
 * A parsed instance: graph, vertex weights, color lists, color costs, and
 * edge weights.
 */
typedef struct PtInstance PtInstance;

/**
 * Maximum weight induced matching result.
 */
typedef struct PtMatchingResult PtMatchingResult;

/**
 * Maximum weight independent set result.
 */
typedef struct PtMwisResult PtMwisResult;

/**
 * Independent odd cycle transversal result.
 */
typedef struct PtOctResult PtOctResult;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the most recent failure on this thread. The pointer
 * stays valid until the next `pt_` call on the same thread.
 */
const char *pt_last_error_message(void);

/**
 * Parses an instance file (DIMACS-like text) into a handle.
 *
 * # Safety
 * `text` must point to a NUL-terminated string; `out` must be a valid
 * pointer. The returned handle must be released with [`pt_instance_free`].
 */
enum PtStatus pt_instance_parse(const char *text, struct PtInstance **out);

/**
 * Releases an instance handle. Null is a no-op.
 *
 * # Safety
 * `inst` must have come from [`pt_instance_parse`] and not been freed.
 */
void pt_instance_free(struct PtInstance *inst);

/**
 * Number of vertices, or 0 for a null handle.
 *
 * # Safety
 * `inst` must be a live handle or null.
 */
uint32_t pt_instance_vertex_count(const struct PtInstance *inst);

/**
 * Number of edges, or 0 for a null handle.
 *
 * # Safety
 * `inst` must be a live handle or null.
 */
uint64_t pt_instance_edge_count(const struct PtInstance *inst);

/**
 * Decides Pt-freeness. When the answer is no and `witness` is non-null, up
 * to `witness_cap` vertices of one induced path on `t` vertices are copied
 * out and `witness_len` receives the witness length.
 *
 * # Safety
 * `inst` must be a live handle; `out_ptfree` must be valid; `witness` and
 * `witness_len` may be null.
 */
enum PtStatus pt_check_ptfree(const struct PtInstance *inst,
                              uint32_t t,
                              bool *out_ptfree,
                              uint32_t *witness,
                              uintptr_t witness_cap,
                              uintptr_t *witness_len);

/**
 * Solves maximum weight independent set with the instance's vertex weights.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid. Free the result with
 * [`pt_mwis_free`].
 */
enum PtStatus pt_solve_mwis(const struct PtInstance *inst,
                            uint32_t t,
                            bool use_cache,
                            struct PtMwisResult **out);

/**
 * # Safety
 * `res` must be a live result handle.
 */
int64_t pt_mwis_weight(const struct PtMwisResult *res);

/**
 * # Safety
 * `res` must be a live result handle.
 */
uintptr_t pt_mwis_vertex_count(const struct PtMwisResult *res);

/**
 * Copies up to `cap` chosen vertices (1-based) into `buf`; returns how many
 * were written.
 *
 * # Safety
 * `res` must be a live result handle; `buf` must hold `cap` entries.
 */
uintptr_t pt_mwis_copy_vertices(const struct PtMwisResult *res, uint32_t *buf, uintptr_t cap);

/**
 * Recursion nodes used by the solve.
 *
 * # Safety
 * `res` must be a live result handle.
 */
uint64_t pt_mwis_calls(const struct PtMwisResult *res);

/**
 * # Safety
 * `res` must have come from [`pt_solve_mwis`] and not been freed.
 */
void pt_mwis_free(struct PtMwisResult *res);

/**
 * Decides list 3-colorability with the instance's lists. An infeasible
 * instance still returns `PT_STATUS_OK`; query [`pt_coloring_feasible`].
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid. Free the result with
 * [`pt_coloring_free`].
 */
enum PtStatus pt_solve_list3col(const struct PtInstance *inst,
                                uint32_t t,
                                struct PtColoringResult **out);

/**
 * Minimum-cost proper list coloring with the instance's lists and costs.
 *
 * # Safety
 * Same contract as [`pt_solve_list3col`].
 */
enum PtStatus pt_solve_cost3col(const struct PtInstance *inst,
                                uint32_t t,
                                struct PtColoringResult **out);

/**
 * # Safety
 * `res` must be a live result handle.
 */
bool pt_coloring_feasible(const struct PtColoringResult *res);

/**
 * Color of the 1-based vertex `v`, or 0 when infeasible or out of range.
 *
 * # Safety
 * `res` must be a live result handle.
 */
uint8_t pt_coloring_color(const struct PtColoringResult *res, uint32_t v);

/**
 * Total cost for min-cost runs; 0 for decision runs.
 *
 * # Safety
 * `res` must be a live result handle.
 */
int64_t pt_coloring_cost(const struct PtColoringResult *res);

/**
 * # Safety
 * `res` must have come from a coloring solve and not been freed.
 */
void pt_coloring_free(struct PtColoringResult *res);

/**
 * Minimum-weight independent set whose removal leaves the graph bipartite,
 * using the instance's vertex weights (must be nonnegative). An infeasible
 * (non-3-colorable) instance returns `PT_STATUS_OK` with `feasible` false.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid. Free the result with
 * [`pt_oct_free`].
 */
enum PtStatus pt_solve_independent_oct(const struct PtInstance *inst,
                                       uint32_t t,
                                       struct PtOctResult **out);

/**
 * # Safety
 * `res` must be a live result handle.
 */
bool pt_oct_feasible(const struct PtOctResult *res);

/**
 * # Safety
 * `res` must be a live result handle.
 */
int64_t pt_oct_weight(const struct PtOctResult *res);

/**
 * # Safety
 * `res` must be a live result handle.
 */
uintptr_t pt_oct_vertex_count(const struct PtOctResult *res);

/**
 * Copies up to `cap` transversal vertices (1-based) into `buf`.
 *
 * # Safety
 * `res` must be a live result handle; `buf` must hold `cap` entries.
 */
uintptr_t pt_oct_copy_vertices(const struct PtOctResult *res, uint32_t *buf, uintptr_t cap);

/**
 * # Safety
 * `res` must have come from [`pt_solve_independent_oct`] and not been freed.
 */
void pt_oct_free(struct PtOctResult *res);

/**
 * Maximum weight induced matching with the instance's edge weights.
 * Requires `t >= 4`.
 *
 * # Safety
 * `inst` must be a live handle; `out` must be valid. Free the result with
 * [`pt_matching_free`].
 */
enum PtStatus pt_solve_induced_matching(const struct PtInstance *inst,
                                        uint32_t t,
                                        struct PtMatchingResult **out);

/**
 * # Safety
 * `res` must be a live result handle.
 */
int64_t pt_matching_weight(const struct PtMatchingResult *res);

/**
 * # Safety
 * `res` must be a live result handle.
 */
uintptr_t pt_matching_edge_count(const struct PtMatchingResult *res);

/**
 * Copies up to `cap_pairs` edges into `buf` as flattened `(u, v)` pairs
 * (so `buf` must hold `2 * cap_pairs` entries); returns the pair count.
 *
 * # Safety
 * `res` must be a live result handle; `buf` must hold `2 * cap_pairs`
 * entries.
 */
uintptr_t pt_matching_copy_edges(const struct PtMatchingResult *res,
                                 uint32_t *buf,
                                 uintptr_t cap_pairs);

/**
 * # Safety
 * `res` must have come from [`pt_solve_induced_matching`] and not been
 * freed.
 */
void pt_matching_free(struct PtMatchingResult *res);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus
