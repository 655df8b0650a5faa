/* C interface to the tropglue engine. All results are JSON text with exact
   rationals as "p/q" strings; a result stays valid until the next call on the
   same context. A context must not be used from two threads at once. */
#ifndef TROPGLUE_H
#define TROPGLUE_H

#include <stdint.h>

#if defined(_WIN32)
#define TG_API __declspec(dllexport)
#elif defined(__GNUC__)
#define TG_API __attribute__((visibility("default")))
#else
#define TG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct tg_context tg_context;

typedef enum tg_status {
  TG_OK = 0,
  TG_ERR_ARGUMENT = 1,          /* null pointer, degree < 1, ... */
  TG_ERR_INVALID_INPUT = 2,     /* malformed file or curve data */
  TG_ERR_OUT_OF_DOMAIN = 3,
  TG_ERR_INVALID_CONTACT = 4,
  TG_ERR_DISCONNECTED = 5,
  TG_ERR_GENERICITY = 6,
  TG_ERR_UNSUPPORTED_VERTEX = 7,
  TG_ERR_MISSING_INVARIANT = 8,
  TG_ERR_NOT_RIGID = 9,
  TG_ERR_UNBALANCED = 10,
  TG_ERR_IO = 11,
  TG_ERR_INTERNAL = 12
} tg_status;

TG_API tg_context* tg_context_create(void);
TG_API void tg_context_destroy(tg_context* ctx);

TG_API const char* tg_status_name(tg_status status);
/* Message of the last failed call, "" after a success. */
TG_API const char* tg_last_error(const tg_context* ctx);
/* Output of the last successful call. */
TG_API const char* tg_result(const tg_context* ctx);

/* Worker threads for enumeration; 0 means 1. */
TG_API tg_status tg_set_threads(tg_context* ctx, unsigned threads);

/* Signed determinant ux*vy - uy*vx; TG_ERR_ARGUMENT on int64 overflow. */
TG_API tg_status tg_wedge(int64_t ux, int64_t uy, int64_t vx, int64_t vy, int64_t* out);

/* {"degree", "value"} */
TG_API tg_status tg_kontsevich(tg_context* ctx, int degree);

/* Counts degree-d rational curves through 3d-1 points generated from seed,
   moving to fresh seeds (at most max_attempts) while the configuration is not
   generic. Result: {"degree", "seed", "rejected_seeds", "points", "count", "curves"}. */
TG_API tg_status tg_count(tg_context* ctx, int degree, uint64_t seed, int max_attempts);

/* Evaluates curve documents against an invariant table (table may be NULL).
   Result: {"curves": [{"name", "value", "aut", "contribution", "diagnostic"}], "total"}. */
TG_API tg_status tg_evaluate_text(tg_context* ctx, const char* curves_json, const char* table_json);
TG_API tg_status tg_evaluate_files(tg_context* ctx, const char* curves_path, const char* table_path);

/* The SVG document is the result; the file variant writes nothing on failure. */
TG_API tg_status tg_render_text(tg_context* ctx, const char* curve_json);
TG_API tg_status tg_render_file(tg_context* ctx, const char* curve_path, const char* out_path);

/* Runs the property suite. data_dir holds cp2-corner/ and twisted/; table_path
   (may be NULL) replaces the corner table. Result: {"checks": [...], "failed"}. */
TG_API tg_status tg_check(tg_context* ctx, const char* data_dir, const char* table_path, int stretch,
                          int* failed);

#ifdef __cplusplus
}
#endif

#endif
