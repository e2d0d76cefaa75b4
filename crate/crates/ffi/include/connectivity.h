#ifndef CONNECTIVITY_H
#define CONNECTIVITY_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum CxStatus {
  CX_STATUS_OK = 0,
  /**
   * A predicate evaluated to false.
   */
  CX_STATUS_FALSE = 1,
  /**
   * Malformed JSON, bad index or unknown name.
   */
  CX_STATUS_INPUT = 2,
  /**
   * Beyond the supported size.
   */
  CX_STATUS_CAPACITY = 3,
  /**
   * Well-formed but not a valid structure.
   */
  CX_STATUS_INVALID = 4,
  /**
   * Precondition of the operation not met.
   */
  CX_STATUS_DOMAIN = 5,
  /**
   * A required pointer was null.
   */
  CX_STATUS_NULL = 6,
  /**
   * Internal failure.
   */
  CX_STATUS_PANIC = 7,
} CxStatus;

/**
 * A dynamics with connectivity structures on its arrows and states.
 */
typedef struct CxConnDynamics CxConnDynamics;

/**
 * A dynamics over a finite category.
 */
typedef struct CxDynamics CxDynamics;

/**
 * A pair of structures on the same points, internal finer than external.
 */
typedef struct CxFoliation CxFoliation;

/**
 * A finite connectivity space.
 */
typedef struct CxSpace CxSpace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Owned by the
 * library; valid until the next call.
 */
const char *cx_last_error(void);

/**
 * Releases a string returned by any `*_json` function.
 *
 * # Safety
 * `s` must come from this library or be null.
 */
void cx_string_free(char *s);

/**
 * Largest supported number of points.
 */
size_t cx_max_points(void);

/**
 * Parses `{"points": n, "connected": [[...], ...]}`.
 *
 * # Safety
 * `json` must be a NUL-terminated string, `out` a writable pointer.
 */
enum CxStatus cx_space_from_json(const char *json, struct CxSpace **out_space);

/**
 * # Safety
 * `space` must come from this library or be null.
 */
void cx_space_free(struct CxSpace *space);

/**
 * # Safety
 * `space` must be a live handle, `out` a writable pointer.
 */
enum CxStatus cx_space_to_json(const struct CxSpace *space, char **out_json);

/**
 * # Safety
 * `space` must be a live handle, `out` a writable pointer.
 */
enum CxStatus cx_space_points(const struct CxSpace *space, size_t *out_points);

/**
 * `Ok` when the points of `mask` (bit `i` for point `i`) form a connected part, `False` otherwise.
 *
 * # Safety
 * `space` must be a live handle.
 */
enum CxStatus cx_space_is_connected(const struct CxSpace *space, uint64_t mask);

/**
 * # Safety
 * `space` must be a live handle, `out` a writable pointer.
 */
enum CxStatus cx_space_order(const struct CxSpace *space, size_t *out_order);

/**
 * Irreducible parts, chain length, height and both order conventions.
 *
 * # Safety
 * `space` must be a live handle, `out` a writable pointer.
 */
enum CxStatus cx_space_order_json(const struct CxSpace *space, char **out_json);

/**
 * Quotient by a partition given as JSON, e.g. `[[0,1],[2]]`.
 *
 * # Safety
 * `space` must be a live handle, `classes` NUL-terminated, `out` writable.
 */
enum CxStatus cx_space_quotient(const struct CxSpace *space,
                                const char *classes,
                                struct CxSpace **out_space);

/**
 * Parses `{"points": n, "internal": [...], "external": [...]}`.
 *
 * # Safety
 * `json` must be NUL-terminated, `out` writable.
 */
enum CxStatus cx_foliation_from_json(const char *json, struct CxFoliation **out_foliation);

/**
 * # Safety
 * `z` must come from this library or be null.
 */
void cx_foliation_free(struct CxFoliation *z);

/**
 * # Safety
 * `z` must be a live handle.
 */
enum CxStatus cx_foliation_is_regular(const struct CxFoliation *z);

/**
 * # Safety
 * `z` must be a live handle, `out` writable.
 */
enum CxStatus cx_foliation_leaf_count(const struct CxFoliation *z, size_t *out_count);

/**
 * Leaves as point lists, ordered by least point.
 *
 * # Safety
 * `z` must be a live handle, `out` writable.
 */
enum CxStatus cx_foliation_leaves_json(const struct CxFoliation *z, char **out_json);

/**
 * Space of leaves: induced (`quotient` false) or quotient (`quotient` true).
 *
 * # Safety
 * `z` must be a live handle, `out` writable.
 */
enum CxStatus cx_foliation_leaf_space(const struct CxFoliation *z,
                                      bool quotient,
                                      struct CxSpace **out_space);

/**
 * Parses a dynamics with an inline category.
 *
 * # Safety
 * `json` must be NUL-terminated, `out` writable.
 */
enum CxStatus cx_dynamics_from_json(const char *json, struct CxDynamics **out_dynamics);

/**
 * # Safety
 * `d` must come from this library or be null.
 */
void cx_dynamics_free(struct CxDynamics *d);

/**
 * # Safety
 * `d` must be a live handle.
 */
enum CxStatus cx_dynamics_is_proper(const struct CxDynamics *d);

/**
 * # Safety
 * `d` must be a live handle.
 */
enum CxStatus cx_dynamics_is_deterministic(const struct CxDynamics *d);

/**
 * Names of the states reachable from `state`, itself included.
 *
 * # Safety
 * `d` must be a live handle, `state` NUL-terminated, `out` writable.
 */
enum CxStatus cx_dynamics_orbit_json(const struct CxDynamics *d,
                                     const char *state,
                                     char **out_json);

/**
 * Parses a dynamics with `arrow_connected` and `state_connected` families.
 *
 * # Safety
 * `json` must be NUL-terminated, `out` writable.
 */
enum CxStatus cx_conn_dynamics_from_json(const char *json, struct CxConnDynamics **out_dynamics);

/**
 * # Safety
 * `d` must come from this library or be null.
 */
void cx_conn_dynamics_free(struct CxConnDynamics *d);

/**
 * Foliation of the states: internal parts generated by arrow reach, external the state structure.
 *
 * # Safety
 * `d` must be a live handle, `out` writable.
 */
enum CxStatus cx_conn_dynamics_foliation(const struct CxConnDynamics *d,
                                         struct CxFoliation **out_foliation);

/**
 * # Safety
 * `d` must be a live handle, `out` writable.
 */
enum CxStatus cx_conn_dynamics_order(const struct CxConnDynamics *d, size_t *out_order);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CONNECTIVITY_H */
