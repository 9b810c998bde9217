#ifndef KIRWAN_H
#define KIRWAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result codes. The first four match the exit codes of the `kirwan` binary.
typedef enum KirwanStatus {
  KIRWAN_STATUS_OK = 0,
  KIRWAN_STATUS_VALIDATION_FAILED = 1,
  KIRWAN_STATUS_INVALID_INPUT = 2,
  KIRWAN_STATUS_INVARIANT_BREACH = 3,
  KIRWAN_STATUS_NULL_POINTER = 4,
  KIRWAN_STATUS_INVALID_UTF8 = 5,
  KIRWAN_STATUS_PANIC = 6,
} KirwanStatus;

// Opaque scene handle.
typedef struct KirwanScene KirwanScene;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses a scene from JSON text. Presentation checks are deferred to
// `kirwan_scene_validate`; schema and parse errors fail here.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum KirwanStatus kirwan_scene_from_json(const char *json, struct KirwanScene **out);

// # Safety
// `path` must be a nul-terminated string; `out` must be writable.
enum KirwanStatus kirwan_scene_from_file(const char *path, struct KirwanScene **out);

// # Safety
// `scene` must come from this library and not be used afterwards. Null is
// ignored.
void kirwan_scene_free(struct KirwanScene *scene);

// Runs the presentation checks; `*passed` is set either way. The messages of
// a failed check are available from `kirwan_last_error`.
//
// # Safety
// `scene` must be a live handle and `passed` writable.
enum KirwanStatus kirwan_scene_validate(const struct KirwanScene *scene, bool *passed);

// Classical truncation as newline-separated reduced Gröbner basis elements.
//
// # Safety
// `scene` must be a live handle and `out` writable.
enum KirwanStatus kirwan_pi0(const struct KirwanScene *scene, char **out);

// Blow-up charts along the maximal stabilizer locus as a JSON report; with
// `kirwan` set the unstable locus is removed.
//
// # Safety
// `scene` must be a live handle and `out` writable.
enum KirwanStatus kirwan_blowup_json(const struct KirwanScene *scene,
                                     bool kirwan,
                                     uint32_t degree_cap,
                                     char **out);

// Full stabilizer reduction tree as a JSON report.
//
// # Safety
// `scene` must be a live handle and `out` writable.
enum KirwanStatus kirwan_reduce_json(const struct KirwanScene *scene, uint64_t seed, char **out);

// Obstruction reports of the reduction's leaves as a JSON report.
//
// # Safety
// `scene` must be a live handle and `out` writable.
enum KirwanStatus kirwan_report_json(const struct KirwanScene *scene, uint64_t seed, char **out);

// # Safety
// `s` must come from this library. Null is ignored.
void kirwan_string_free(char *s);

// Message of the last failed call on this thread, or null. Valid until the
// next call into the library.
const char *kirwan_last_error(void);

const char *kirwan_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KIRWAN_H */
