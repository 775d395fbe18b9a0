#ifndef FROBENIUSLAB_H
#define FROBENIUSLAB_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * An algebra loaded from input text, kept together with that text so that
 * certificates can bind to the exact input digest.
 */
typedef struct FrobAlgebra FrobAlgebra;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse an algebra description from a NUL-terminated string. Returns NULL
 * on failure; see `frob_last_error`.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string or NULL.
 */
struct FrobAlgebra *frob_algebra_from_str(const char *text);

/**
 * Load an algebra description from a file path. Returns NULL on failure.
 *
 * # Safety
 * `path` must be a valid NUL-terminated string or NULL.
 */
struct FrobAlgebra *frob_algebra_from_file(const char *path);

/**
 * Release an algebra handle. NULL is ignored.
 *
 * # Safety
 * `a` must have come from `frob_algebra_from_str` or
 * `frob_algebra_from_file` and must not be used afterwards.
 */
void frob_algebra_free(struct FrobAlgebra *a);

/**
 * The dimension of the algebra, or -1 for a NULL handle.
 *
 * # Safety
 * `a` must be a live handle or NULL.
 */
int frob_algebra_dim(const struct FrobAlgebra *a);

/**
 * Classify the algebra and return the certificate as JSON. Returns NULL on
 * failure. The result is deterministic in `seed`.
 *
 * # Safety
 * `a` must be a live handle or NULL.
 */
char *frob_classify_json(const struct FrobAlgebra *a, uint64_t seed, uint64_t trials);

/**
 * Build the comultiplication and return the certificate (including the
 * delta and m tensors) as JSON. `normalize` is an optional basis label at
 * which the leading coefficient is scaled to 1; pass NULL for the default
 * scan order. Returns NULL on failure, in particular when the algebra is
 * not gendo-Frobenius.
 *
 * # Safety
 * `a` must be a live handle or NULL; `normalize` a valid string or NULL.
 */
char *frob_comult_json(const struct FrobAlgebra *a,
                       uint64_t seed,
                       uint64_t trials,
                       const char *normalize);

/**
 * Re-validate a certificate against the input text it claims to describe.
 * Returns 0 when every witness checks out, otherwise a nonzero code.
 *
 * # Safety
 * Both arguments must be valid NUL-terminated strings or NULL.
 */
int frob_verify_json(const char *cert_json, const char *text);

/**
 * Release a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must have been returned by this library and not freed before.
 */
void frob_string_free(char *s);

/**
 * The last error message on this thread, or NULL if the last call
 * succeeded. The pointer stays valid until the next library call on the
 * same thread; do not free it.
 */
const char *frob_last_error(void);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* FROBENIUSLAB_H */
