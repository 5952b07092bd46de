#ifndef LIEMULT_H
#define LIEMULT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum LmStatus {
  LM_STATUS_OK = 0,
  LM_STATUS_NULL_POINTER = 1,
  LM_STATUS_INVALID_UTF8 = 2,
  LM_STATUS_JACOBI_VIOLATION = 3,
  LM_STATUS_NOT_NILPOTENT = 4,
  LM_STATUS_INDEX_OUT_OF_RANGE = 5,
  LM_STATUS_BAD_PAIR = 6,
  LM_STATUS_DUPLICATE_PAIR = 7,
  LM_STATUS_DIMENSION_MISMATCH = 8,
  LM_STATUS_ABELIAN_INPUT = 9,
  LM_STATUS_UNKNOWN_NAME = 10,
  LM_STATUS_PARAM_OUT_OF_DOMAIN = 11,
  LM_STATUS_PARSE_ERROR = 12,
  LM_STATUS_OTHER = 13,
  LM_STATUS_PANIC = 14,
} LmStatus;

/**
 * Opaque algebra handle.
 */
typedef struct LmAlgebra LmAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a JSON presentation. On success `*out` owns a new handle.
 *
 * # Safety
 * `json` is a nul-terminated string; `out` is writable.
 */
enum LmStatus lm_algebra_from_json(const char *json, struct LmAlgebra **out);

/**
 * Build a catalog algebra. `param` may be null or a rational `p/q`.
 *
 * # Safety
 * `name` and non-null `param` are nul-terminated strings; `out` is writable.
 */
enum LmStatus lm_catalog_get(const char *name, const char *param, struct LmAlgebra **out);

/**
 * # Safety
 * `a` is null or a handle from this library, not yet freed.
 */
void lm_algebra_free(struct LmAlgebra *a);

/**
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum LmStatus lm_algebra_dim(const struct LmAlgebra *a, size_t *out);

/**
 * Dimension of the Schur multiplier.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum LmStatus lm_dim_multiplier(const struct LmAlgebra *a, size_t *out);

/**
 * `s(L)`; fails with `ABELIAN_INPUT` on abelian algebras.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum LmStatus lm_s_invariant(const struct LmAlgebra *a, int64_t *out);

/**
 * `t(L)`.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum LmStatus lm_t_invariant(const struct LmAlgebra *a, int64_t *out);

/**
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum LmStatus lm_is_capable(const struct LmAlgebra *a, bool *out);

/**
 * Full invariant report as JSON. Release with `lm_string_free`.
 *
 * # Safety
 * `a` is a live handle; `out` is writable.
 */
enum LmStatus lm_report_json(const struct LmAlgebra *a, char **out);

/**
 * # Safety
 * `s` is null or a string returned by this library, not yet freed.
 */
void lm_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread.
 */
const char *lm_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LIEMULT_H */
