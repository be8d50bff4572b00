#ifndef VVKIT_H
#define VVKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum VvkitStatus {
  VVKIT_STATUS_OK = 0,
  VVKIT_STATUS_NULL_POINTER = 1,
  VVKIT_STATUS_INVALID_UTF8 = 2,
  /**
   * Malformed JSON, polynomial text or points.
   */
  VVKIT_STATUS_PARSE_ERROR = 3,
  /**
   * Valid input that the computation rejected (precondition, bound, ...).
   */
  VVKIT_STATUS_COMPUTATION_ERROR = 4,
  VVKIT_STATUS_UNKNOWN_CLAIM = 5,
  /**
   * A Rust panic was caught at the boundary.
   */
  VVKIT_STATUS_PANIC = 6,
} VvkitStatus;

/**
 * Opaque handle to an ideal.
 */
typedef struct VvkitIdeal VvkitIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `{"ring": {"vars": [...]}, "gens": [...]}` into a new handle.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` a valid pointer.
 */
enum VvkitStatus vvkit_ideal_from_json(const char *json, struct VvkitIdeal **out);

/**
 * Defining ideal of the points in `{"dim": 2, "points": [...]}`.
 *
 * # Safety
 * `points_json` must be a NUL-terminated string; `out` a valid pointer.
 */
enum VvkitStatus vvkit_points_ideal(const char *points_json, struct VvkitIdeal **out);

/**
 * Ideal as JSON text; free with `vvkit_string_free`.
 *
 * # Safety
 * `ideal` must come from this library; `out` a valid pointer.
 */
enum VvkitStatus vvkit_ideal_to_json(const struct VvkitIdeal *ideal, char **out);

/**
 * # Safety
 * `ideal` must come from this library and not be used afterwards. Null is
 * ignored.
 */
void vvkit_ideal_free(struct VvkitIdeal *ideal);

/**
 * Hilbert series of `R/J` as `{"numerator": [...], "pole_order": n, "series": "..."}`.
 *
 * # Safety
 * `ideal` must come from this library; `out` a valid pointer.
 */
enum VvkitStatus vvkit_hilbert_series_json(const struct VvkitIdeal *ideal, char **out);

/**
 * Torsion check for the Jacobian ideal of a points file. Sets
 * `*torsion_free` to 1 or 0 and, when `report` is not null, stores the
 * full report as JSON.
 *
 * # Safety
 * `points_json` must be a NUL-terminated string; `torsion_free` a valid
 * pointer; `report` null or valid.
 */
enum VvkitStatus vvkit_vv_check(const char *points_json, int32_t *torsion_free, char **report);

/**
 * Collinearity profile and case label of a points file, as JSON.
 *
 * # Safety
 * `points_json` must be a NUL-terminated string; `out` a valid pointer.
 */
enum VvkitStatus vvkit_classify(const char *points_json, char **out);

/**
 * Runs a registered claim; the report is `{"claim", "status", "details"}`.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `out` a valid pointer.
 */
enum VvkitStatus vvkit_repro(const char *id, bool slow, char **out);

/**
 * # Safety
 * `s` must be a string returned by this library, or null.
 */
void vvkit_string_free(char *s);

/**
 * Message for the last failure on this thread, empty after a success. The
 * pointer stays valid until the next call into the library on this thread.
 */
const char *vvkit_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* VVKIT_H */
