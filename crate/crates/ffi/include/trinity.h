#ifndef TRINITY_H
#define TRINITY_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TrinityStatus {
  TRINITY_STATUS_OK = 0,
  TRINITY_STATUS_NULL_ARGUMENT = 1,
  TRINITY_STATUS_INVALID_UTF8 = 2,
  TRINITY_STATUS_PARSE = 3,
  TRINITY_STATUS_INVALID = 4,
  TRINITY_STATUS_NOT_PLANAR = 5,
  TRINITY_STATUS_CHECK_FAILED = 6,
  TRINITY_STATUS_PANIC = 7,
} TrinityStatus;

/**
 * Opaque owner of a validated trinity.
 */
typedef struct TrinityHandle TrinityHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses the line or JSON format. On success `*out` owns a new handle.
 *
 * # Safety
 * `source` is a NUL-terminated string and `out` is writable.
 */
enum TrinityStatus trinity_load(const char *source, struct TrinityHandle **out);

/**
 * Builds the planar trinity of a curve description.
 *
 * # Safety
 * `source` is a NUL-terminated string and `out` is writable.
 */
enum TrinityStatus trinity_from_curve(const char *source, struct TrinityHandle **out);

/**
 * # Safety
 * `h` is null or a handle from this library that has not been freed.
 */
void trinity_free(struct TrinityHandle *h);

/**
 * Number of black triangles, or 0 for a null handle.
 *
 * # Safety
 * `h` is null or a live handle.
 */
uintptr_t trinity_black_count(const struct TrinityHandle *h);

/**
 * Genus, or `u32::MAX` for a null handle.
 *
 * # Safety
 * `h` is null or a live handle.
 */
uint32_t trinity_genus(const struct TrinityHandle *h);

/**
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum TrinityStatus trinity_state_count(const struct TrinityHandle *h, uintptr_t *out);

/**
 * Spanning arborescence counts of the red, green and blue dual digraphs.
 *
 * # Safety
 * `h` is a live handle and `out` points to three writable values.
 */
enum TrinityStatus trinity_rho(const struct TrinityHandle *h, int64_t *out);

/**
 * Component summary such as `1 cyclic (14), 6 acyclic (4 isolated)`.
 *
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum TrinityStatus trinity_components(const struct TrinityHandle *h, char **out);

/**
 * Hex digest of the canonical form.
 *
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum TrinityStatus trinity_canonical_digest(const struct TrinityHandle *h, char **out);

/**
 * The clocked state of a planar trinity as `state w:v ...`.
 *
 * # Safety
 * `h` is a live handle and `out` is writable.
 */
enum TrinityStatus trinity_clocked_state(const struct TrinityHandle *h, char **out);

/**
 * Runs every applicable check. `*report` receives the text report whether
 * or not the checks pass; the status is `CheckFailed` if any failed.
 *
 * # Safety
 * `h` is a live handle and `report` is writable.
 */
enum TrinityStatus trinity_verify(const struct TrinityHandle *h, char **report);

/**
 * Message of the last failed call on this thread, or null. The caller
 * frees it with [`trinity_string_free`].
 */
char *trinity_last_error(void);

/**
 * # Safety
 * `s` is null or a string returned by this library that has not been freed.
 */
void trinity_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRINITY_H */
