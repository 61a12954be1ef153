/* Stable C interface to the quantum sl(m|n) invariant library.
 *
 * Usage pattern:
 *   relmod_ctx* ctx = NULL;
 *   if (relmod_ctx_new(2, 1, 5, "pert", 0.0, &ctx) != RELMOD_OK) { ... }
 *   char* out = NULL;
 *   relmod_status st = relmod_request(ctx,
 *       "{\"op\":\"mdim\",\"weight\":[1, 0.3]}", &out);
 *   ...
 *   relmod_string_free(out);
 *   relmod_ctx_free(ctx);
 *
 * Every request and response is a JSON document. A successful response is
 *   {"status": 0, "result": { ... }}
 * and a failed one is
 *   {"status": N, "error": "message", "error_name": "NotTypical"}.
 * The returned status code always matches the "status" field.
 *
 * A context is not thread-safe; distinct contexts may be used from
 * distinct threads concurrently.
 */

#ifndef RELMOD_H
#define RELMOD_H

#ifdef __cplusplus
extern "C" {
#endif

/* Mirrors the library's error taxonomy one-to-one. */
typedef enum relmod_status {
  RELMOD_OK = 0,
  RELMOD_INVALID_ARGUMENT = 1,
  RELMOD_DEGENERATE_WEIGHT = 2,
  RELMOD_NOT_TYPICAL = 3,
  RELMOD_NOT_IN_ALCOVE = 4,
  RELMOD_CRITICAL_GRADING = 5,
  RELMOD_NOT_IN_LAMBDA_Z = 6,
  RELMOD_ILL_FORMED_DIAGRAM = 7,
  RELMOD_NOT_SIMPLE = 8,
  RELMOD_DEGENERATE_DELTA = 9,
  RELMOD_INTERNAL = 10
} relmod_status;

typedef struct relmod_ctx relmod_ctx;

/* Creates an evaluation context for sl(m|n) at the primitive ell-th root
 * of unity (ell odd, ell >= m + n - 1, m != n). ideal selects the
 * modified-dimension normalization: "pert" (default when NULL or empty)
 * or "proj". tol <= 0 selects the library default. On failure returns the
 * status and leaves *out untouched; the message is available through
 * relmod_global_last_error(). */
relmod_status relmod_ctx_new(int m, int n, int ell, const char* ideal,
                             double tol, relmod_ctx** out);

void relmod_ctx_free(relmod_ctx* ctx);

/* Message of the most recent failed call on this context ("" if none). */
const char* relmod_last_error(const relmod_ctx* ctx);

/* Message of the most recent relmod_ctx_new failure on this thread. */
const char* relmod_global_last_error(void);

/* Executes one JSON request {"op": "...", ...} against the context.
 * Operations: typical, alcove, mdim, twist, sprime, hopf, fuse, delta,
 * kirby, module, braid, eval, fprime, cgp, verify.
 * Writes a JSON response to *response (free with relmod_string_free);
 * the response is written for failures too whenever allocation permits. */
relmod_status relmod_request(relmod_ctx* ctx, const char* request,
                             char** response);

/* Runs the acceptance suite without a context. options_json may select
 * {"m", "n", "ell", "seed", "tol"}; pass "{}" for the defaults. The full
 * report is written to *report_json (free with relmod_string_free). */
relmod_status relmod_verify(const char* options_json, char** report_json);

void relmod_string_free(char* s);

/* Stable name of a status code, e.g. "NotTypical". */
const char* relmod_status_name(relmod_status s);

#ifdef __cplusplus
}
#endif

#endif /* RELMOD_H */
