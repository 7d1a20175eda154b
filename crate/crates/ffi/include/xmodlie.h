#ifndef XMODLIE_H
#define XMODLIE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes. Values 1 to 5 match the command-line exit codes.
 */
typedef enum XmodlieStatus {
  XmodlieStatus_Ok = 0,
  XmodlieStatus_Usage = 1,
  XmodlieStatus_Parse = 2,
  XmodlieStatus_Axiom = 3,
  XmodlieStatus_Mismatch = 4,
  XmodlieStatus_Internal = 5,
  XmodlieStatus_NullPointer = 6,
  XmodlieStatus_InvalidUtf8 = 7,
} XmodlieStatus;

/**
 * Opaque workspace handle.
 */
typedef struct XmodlieWorkspace XmodlieWorkspace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Loads the built-in corpus into `*out`.
 *
 * # Safety
 * `out` must be a valid pointer to writable storage.
 */
enum XmodlieStatus xmodlie_workspace_builtin(struct XmodlieWorkspace **out);

/**
 * Parses a TOML document into `*out`.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum XmodlieStatus xmodlie_workspace_from_toml(const char *text, struct XmodlieWorkspace **out);

/**
 * Loads a definition file into `*out`.
 *
 * # Safety
 * `path` must be a nul-terminated string and `out` a valid pointer.
 */
enum XmodlieStatus xmodlie_workspace_from_path(const char *path, struct XmodlieWorkspace **out);

/**
 * Releases a workspace. Null is ignored.
 *
 * # Safety
 * `ws` must come from one of the constructors and not be used afterwards.
 */
void xmodlie_workspace_free(struct XmodlieWorkspace *ws);

/**
 * Runs `command` with `nargs` arguments and stores the report in `*out`,
 * as JSON when `machine` is true and as text otherwise. A report whose
 * checks failed is still stored and yields `Mismatch`.
 *
 * # Safety
 * `ws` must be a live handle, `command` and each of the `nargs` entries of
 * `args` nul-terminated strings, and `out` a valid pointer.
 */
enum XmodlieStatus xmodlie_run(const struct XmodlieWorkspace *ws,
                               const char *command,
                               const char *const *args,
                               uintptr_t nargs,
                               bool machine,
                               char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void xmodlie_string_free(char *s);

/**
 * Message for the last failure on this thread, or null. Valid until the
 * next failing call on the same thread.
 */
const char *xmodlie_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* XMODLIE_H */
