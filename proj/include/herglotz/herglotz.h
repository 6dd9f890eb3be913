#ifndef HERGLOTZ_HERGLOTZ_H
#define HERGLOTZ_HERGLOTZ_H

/* C interface to the herglotz numerics library.
 *
 * All functions are reentrant. A context only carries the last error
 * message; use one context per thread. Strings returned by the library are
 * owned by it and stay valid until the next call on the same context (for
 * hz_context_last_error) or for the life of the process (everything else).
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HERGLOTZ_BUILDING_LIBRARY)
#    define HZ_API __declspec(dllexport)
#  else
#    define HZ_API __declspec(dllimport)
#  endif
#else
#  define HZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hz_context hz_context;

typedef enum hz_status {
  HZ_OK = 0,
  HZ_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad index, non-finite input */
  HZ_ERR_UNKNOWN_FUNCTION = 2,
  HZ_ERR_UNKNOWN_IDENTITY = 3,
  HZ_ERR_DOMAIN = 4,
  HZ_ERR_POLE = 5,
  HZ_ERR_BUDGET = 6,
  HZ_ERR_RANGE = 7,
  HZ_ERR_POLE_TOO_CLOSE = 8,
  HZ_ERR_TRUNCATION = 9,
  HZ_ERR_INTERNAL = 10
} hz_status;

typedef struct hz_value {
  double value;
  double error_estimate;
} hz_value;

typedef struct hz_report {
  double param;   /* grid parameter */
  double partner; /* 1/param for modular relations, else param */
  double lhs;
  double lhs_error;
  double rhs;
  double rhs_error;
  double residual;
  double tolerance;
  int pass;
} hz_report;

HZ_API const char* hz_version(void);
HZ_API const char* hz_status_string(hz_status status);

HZ_API hz_status hz_context_create(hz_context** out);
HZ_API void hz_context_destroy(hz_context* ctx);
/* Empty string when the last call succeeded. */
HZ_API const char* hz_context_last_error(const hz_context* ctx);

HZ_API size_t hz_function_count(void);
HZ_API const char* hz_function_name(size_t index); /* NULL when out of range */
HZ_API hz_status hz_function_default_tol(const char* name, double* tol);

/* tol <= 0 selects the function's default tolerance. */
HZ_API hz_status hz_eval(hz_context* ctx, const char* name, double x, double tol, hz_value* out);

HZ_API size_t hz_identity_count(void);
HZ_API const char* hz_identity_name(size_t index); /* NULL when out of range */
/* The grid pointer stays valid for the life of the process. */
HZ_API hz_status hz_identity_defaults(const char* name, const double** grid, size_t* count, double* tol);

/* tol <= 0 selects the identity's default tolerance. */
HZ_API hz_status hz_verify(hz_context* ctx, const char* name, double param, double tol, hz_report* out);

#ifdef __cplusplus
}
#endif

#endif /* HERGLOTZ_HERGLOTZ_H */
