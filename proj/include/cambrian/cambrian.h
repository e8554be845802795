/* C interface to the Cambrian framework library.
 *
 * Usage: create a context from an exchange-matrix JSON string
 * ({"n": 3, "B": [[0,1,1],[-3,0,0],[-1,0,0]]}), call command functions, free
 * every returned string with camb_string_free, destroy the context.
 * All functions return CAMB_OK (0) or an error code; the message of the most
 * recent failure on a context is available via camb_last_error. */

#ifndef CAMBRIAN_H
#define CAMBRIAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct camb_ctx camb_ctx;

enum camb_code {
  CAMB_OK = 0,
  CAMB_INVALID_ARGUMENT,
  CAMB_PARSE_ERROR,
  CAMB_NOT_SKEW_SYMMETRIZABLE,
  CAMB_NOT_SYMMETRIZABLE,
  CAMB_NOT_ACYCLIC,
  CAMB_NOT_AFFINE,
  CAMB_NOT_SORTABLE,
  CAMB_NON_LAURENT_RESULT,
  CAMB_NOT_EQUIVALENT,
  CAMB_DEPENDENT_ROOTS,
  CAMB_SINGULAR_LABELS,
  CAMB_INFINITE_PARABOLIC,
  CAMB_NO_BOUNDED_JOIN,
  CAMB_SEARCH_EXHAUSTED,
  CAMB_RESOURCE_LIMIT,
  CAMB_CHART_POLE,
  CAMB_NOT_FOUND,
  CAMB_INTERNAL
};

/* NULL on failure; then camb_create_error() holds the message. */
camb_ctx* camb_ctx_create(const char* matrix_json);
void camb_ctx_destroy(camb_ctx* ctx);
const char* camb_create_error(void);
const char* camb_last_error(const camb_ctx* ctx);

void camb_string_free(char* s);

/* Each command writes a malloc'd NUL-terminated string to *out. */
int camb_classify(camb_ctx* ctx, char** out);
int camb_sortables(camb_ctx* ctx, long long max_len, char** out);

/* format: "json" (fan + graph) or "dot". */
int camb_dcamb(camb_ctx* ctx, long long max_len, const char* format,
               char** out);

/* Aggregated verification report (JSON).  *failed is set to 0/1. */
int camb_verify(camb_ctx* ctx, long long max_len, int depth, char** out,
                int* failed);

int camb_exchange_graph(camb_ctx* ctx, int depth, long long node_cap,
                        char** out);
int camb_green(camb_ctx* ctx, long long max_len, char** out);

/* chart: "V1", "V-1", "V0" or "sphere"; output is CSV. */
int camb_project(camb_ctx* ctx, long long max_len, const char* chart,
                 char** out);

#ifdef __cplusplus
}
#endif

#endif /* CAMBRIAN_H */
