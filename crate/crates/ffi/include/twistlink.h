#ifndef TWISTLINK_H
#define TWISTLINK_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum TlStatus {
  TL_STATUS_OK = 0,
  TL_STATUS_NULL_POINTER = 1,
  TL_STATUS_INVALID_UTF8 = 2,
  TL_STATUS_PARSE = 3,
  TL_STATUS_INVALID_DIAGRAM = 4,
  TL_STATUS_STALE_SITE = 5,
  TL_STATUS_CAP_EXCEEDED = 6,
  TL_STATUS_BAD_ARGUMENT = 7,
  TL_STATUS_INTERNAL = 8,
} TlStatus;

/**
 * Which group to compute.
 */
typedef enum TlGroupLevel {
  TL_GROUP_LEVEL_TWISTED = 0,
  TL_GROUP_LEVEL_UPPER = 1,
  TL_GROUP_LEVEL_LOWER = 2,
} TlGroupLevel;

/**
 * Opaque diagram handle.
 */
typedef struct TlDiagram TlDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *tl_last_error(void);

/**
 * Library version as a static string.
 */
const char *tl_version(void);

/**
 * Parse TLD text. The diagram is not validated; see `tl_diagram_validate`.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a writable pointer.
 */
enum TlStatus tl_diagram_parse(const char *src, struct TlDiagram **out);

/**
 * Release a handle. Null is ignored.
 *
 * # Safety
 * `d` must come from this library and not be used afterwards.
 */
void tl_diagram_free(struct TlDiagram *d);

/**
 * Release a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void tl_string_free(char *s);

/**
 * Check a diagram. `out_valid` receives the verdict; the violations are
 * written as JSON to `out_report` when it is not null.
 *
 * # Safety
 * Pointers must be valid; `out_report` may be null.
 */
enum TlStatus tl_diagram_validate(const struct TlDiagram *d, bool *out_valid, char **out_report);

/**
 * Serialize to TLD text.
 *
 * # Safety
 * Pointers must be valid.
 */
enum TlStatus tl_diagram_serialize(const struct TlDiagram *d, char **out);

/**
 * Polynomials, faces and carrier surface as JSON.
 *
 * # Safety
 * Pointers must be valid.
 */
enum TlStatus tl_invariants_json(const struct TlDiagram *d, char **out);

/**
 * Group report as JSON, with hom counts into S3 and S4.
 *
 * # Safety
 * Pointers must be valid.
 */
enum TlStatus tl_group_json(const struct TlDiagram *d,
                            enum TlGroupLevel level,
                            size_t budget,
                            char **out);

/**
 * All move sites, one per line.
 *
 * # Safety
 * Pointers must be valid.
 */
enum TlStatus tl_moves_list(const struct TlDiagram *d, char **out);

/**
 * Apply one move site, producing a new handle. The input is unchanged.
 *
 * # Safety
 * Pointers must be valid and `site` NUL-terminated.
 */
enum TlStatus tl_move_apply(const struct TlDiagram *d, const char *site, struct TlDiagram **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWISTLINK_H */
