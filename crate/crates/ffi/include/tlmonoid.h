#ifndef TLMONOID_H
#define TLMONOID_H

/* Generated by cbindgen. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum TlFormat {
  TL_FORMAT_ASCII = 0,
  TL_FORMAT_SVG = 1,
} TlFormat;

typedef enum TlStatus {
  TL_STATUS_OK = 0,
  TL_STATUS_NULL_POINTER = 1,
  TL_STATUS_INVALID_UTF8 = 2,
  TL_STATUS_PARSE = 3,
  TL_STATUS_INDEX_RANGE = 4,
  TL_STATUS_THEORY = 5,
  TL_STATUS_TYPE = 6,
  TL_STATUS_DIMENSION = 7,
  TL_STATUS_LIMIT = 8,
  TL_STATUS_FRIEZE = 9,
  TL_STATUS_NO_COLLAPSE = 10,
  TL_STATUS_INVALID = 11,
  TL_STATUS_PANIC = 12,
} TlStatus;

typedef enum TlTheory {
  TL_THEORY_L = 0,
  TL_THEORY_K = 1,
  TL_THEORY_J = 2,
  TL_THEORY_KN = 3,
  TL_THEORY_JN = 4,
} TlTheory;

/**
 * An exact rational matrix.
 */
typedef struct TlMatrix TlMatrix;

/**
 * A parsed term together with its theory.
 */
typedef struct TlTerm TlTerm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer is
 * valid until the next library call on the same thread.
 */
const char *tl_last_error(void);

/**
 * Library version as a static string.
 */
const char *tl_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void tl_string_free(char *s);

/**
 * Parses `text` in the given theory; `n` is the strand count for `Kn`/`Jn`
 * and ignored otherwise.
 *
 * # Safety
 * `text` must be a valid C string and `out` a valid pointer.
 */
enum TlStatus tl_term_parse(const char *text,
                            enum TlTheory theory_kind,
                            size_t n,
                            struct TlTerm **out);

/**
 * # Safety
 * `t` must be null or a handle from [`tl_term_parse`], not freed before.
 */
void tl_term_free(struct TlTerm *t);

/**
 * # Safety
 * `t` must be a live term handle and `out` a valid pointer.
 */
enum TlStatus tl_term_to_string(const struct TlTerm *t, char **out);

/**
 * Normal form of a term in its own theory, as text.
 *
 * # Safety
 * `t` must be a live term handle and `out` a valid pointer.
 */
enum TlStatus tl_normalize(const struct TlTerm *t, char **out);

/**
 * Equality of two terms in the theory of the first.
 *
 * # Safety
 * `a`, `b` must be live term handles and `out` a valid pointer.
 */
enum TlStatus tl_eq(const struct TlTerm *a, const struct TlTerm *b, bool *out);

/**
 * Draws the frieze of a term.
 *
 * # Safety
 * `t` must be a live term handle and `out` a valid pointer.
 */
enum TlStatus tl_render(const struct TlTerm *t, enum TlFormat format, char **out);

/**
 * Number of circle-free Jones normal forms of `K_n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum TlStatus tl_count_jones(size_t n, size_t *out);

/**
 * The `p^n × p^n` matrix of a word of `K_n`.
 *
 * # Safety
 * `t` must be a live term handle and `out` a valid pointer.
 */
enum TlStatus tl_matrix_rep(size_t p, size_t n, const struct TlTerm *t, struct TlMatrix **out);

/**
 * # Safety
 * `m` must be null or a handle from this library, not freed before.
 */
void tl_matrix_free(struct TlMatrix *m);

/**
 * # Safety
 * `m` must be a live matrix handle; `rows` and `cols` valid pointers.
 */
enum TlStatus tl_matrix_shape(const struct TlMatrix *m, size_t *rows, size_t *cols);

/**
 * Entry `(i, j)`, zero-based, as text such as `3` or `-1/2`.
 *
 * # Safety
 * `m` must be a live matrix handle and `out` a valid pointer.
 */
enum TlStatus tl_matrix_entry(const struct TlMatrix *m, size_t i, size_t j, char **out);

/**
 * # Safety
 * `m` must be a live matrix handle and `out` a valid pointer.
 */
enum TlStatus tl_matrix_to_string(const struct TlMatrix *m, char **out);

/**
 * Linear independence of the matrices of the Jones normal forms of `K_n`.
 *
 * # Safety
 * `independent` and `rank` must be valid pointers.
 */
enum TlStatus tl_independence_check(size_t p, size_t n, bool *independent, size_t *rank);

/**
 * Checks the braid relations; `alpha` is a rational such as `"1"` or
 * `"-2/3"`, `branch` is `'+'` or `'-'`. `report` may be null.
 *
 * # Safety
 * `alpha` must be a valid C string, `all_hold` a valid pointer and
 * `report` null or a valid pointer.
 */
enum TlStatus tl_braid_check(size_t p,
                             size_t n,
                             const char *alpha,
                             char branch,
                             bool *all_hold,
                             char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TLMONOID_H */
