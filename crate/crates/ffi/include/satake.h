#ifndef SATAKE_H
#define SATAKE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SatakeStatus {
  SATAKE_STATUS_OK = 0,
  SATAKE_STATUS_INVALID_INPUT = 1,
  SATAKE_STATUS_STRUCTURAL = 2,
  // A verification ran and at least one check failed; the report is still written.
  SATAKE_STATUS_VERIFICATION_FAILED = 3,
  SATAKE_STATUS_NULL_POINTER = 4,
  SATAKE_STATUS_INVALID_UTF8 = 5,
  SATAKE_STATUS_PANIC = 6,
} SatakeStatus;

typedef enum SatakeLabel {
  SATAKE_LABEL_NOT_COMPATIBLE = 0,
  SATAKE_LABEL_NOT_GSAT = 1,
  SATAKE_LABEL_SAT = 2,
  SATAKE_LABEL_WEAK_SAT = 3,
  SATAKE_LABEL_NONWEAK_GSAT = 4,
} SatakeLabel;

// A Chevalley basis realization of a semisimple Lie algebra.
typedef struct SatakeAlgebra SatakeAlgebra;

// A compatible decoration `(X, tau)` of the algebra it was created from.
typedef struct SatakeDecoration SatakeDecoration;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. Valid until the next call.
const char *satake_last_error_message(void);

// # Safety
// `s` must come from this library or be null.
void satake_string_free(char *s);

// Builds the algebra for a type string such as `"B3"` or `"A1xA1"`.
//
// # Safety
// `type_string` must be a valid C string; `out` must be writable.
enum SatakeStatus satake_algebra_new(const char *type_string, struct SatakeAlgebra **out);

// # Safety
// `alg` must come from `satake_algebra_new` or be null.
void satake_algebra_free(struct SatakeAlgebra *alg);

// Dimension of the algebra; 0 for a null handle.
//
// # Safety
// `alg` must be a live handle or null.
size_t satake_algebra_dim(const struct SatakeAlgebra *alg);

// # Safety
// `alg` must be a live handle or null.
size_t satake_algebra_rank(const struct SatakeAlgebra *alg);

// Validates `(X, tau)`. `x` is a 1-based list like `"2,3"` (empty or null
// for no nodes); `tau` is `"id"`, `"w0"` or pairs `"1:3,3:1"` (null means `"id"`).
//
// # Safety
// String arguments must be valid C strings or null; `out` must be writable.
enum SatakeStatus satake_decoration_new(const struct SatakeAlgebra *alg,
                                        const char *x,
                                        const char *tau,
                                        struct SatakeDecoration **out);

// # Safety
// `dec` must come from `satake_decoration_new` or be null.
void satake_decoration_free(struct SatakeDecoration *dec);

// # Safety
// Handles must be live; `out` must be writable.
enum SatakeStatus satake_classify(const struct SatakeAlgebra *alg,
                                  const struct SatakeDecoration *dec,
                                  enum SatakeLabel *out);

// JSON list of all compatible decorations of `type_string` with labels.
//
// # Safety
// `type_string` must be a valid C string; `out` must be writable.
enum SatakeStatus satake_enumerate_json(const char *type_string, char **out);

// Builds `k` for `gamma` (comma-separated rationals over the nodes outside
// `X`; null means all ones) and writes its dimensions and standard basis.
//
// # Safety
// Handles must be live; `gamma` a valid C string or null; `out` writable.
enum SatakeStatus satake_build_k_json(const struct SatakeAlgebra *alg,
                                      const struct SatakeDecoration *dec,
                                      const char *gamma,
                                      bool allow_zero_gamma,
                                      char **out);

// The four equivalent conditions and their witness.
//
// # Safety
// Handles must be live; `gamma` a valid C string or null; `out` writable.
enum SatakeStatus satake_theorem_json(const struct SatakeAlgebra *alg,
                                      const struct SatakeDecoration *dec,
                                      const char *gamma,
                                      char **out);

// Full verification battery over every decoration of `type_string`. On
// `SATAKE_STATUS_VERIFICATION_FAILED` the report is still written to `out`.
//
// # Safety
// `type_string` must be a valid C string; `out` must be writable.
enum SatakeStatus satake_verify_json(const char *type_string, uint64_t seed, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SATAKE_H */
