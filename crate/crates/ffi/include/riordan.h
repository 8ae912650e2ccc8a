/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef RIORDAN_H
#define RIORDAN_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of an FFI call.
typedef enum RiordanStatus {
  RIORDAN_STATUS_OK = 0,
  RIORDAN_STATUS_NULL_POINTER = 1,
  RIORDAN_STATUS_INVALID_ARGUMENT = 2,
  RIORDAN_STATUS_PARSE_ERROR = 3,
  RIORDAN_STATUS_OUT_OF_RANGE = 4,
  // The entry is symbolic, fractional or too large for the requested type.
  RIORDAN_STATUS_NOT_REPRESENTABLE = 5,
  // Comparison against reference data failed.
  RIORDAN_STATUS_MISMATCH = 6,
  RIORDAN_STATUS_MATH_ERROR = 7,
  RIORDAN_STATUS_PANIC = 8,
} RiordanStatus;

typedef enum RiordanFlavor {
  RIORDAN_FLAVOR_ORDINARY = 0,
  RIORDAN_FLAVOR_EXPONENTIAL = 1,
} RiordanFlavor;

typedef enum RiordanWhich {
  RIORDAN_WHICH_H = 0,
  RIORDAN_WHICH_F = 1,
  RIORDAN_WHICH_GAMMA = 2,
} RiordanWhich;

typedef enum RiordanPolytope {
  RIORDAN_POLYTOPE_SIMPLEX = 0,
  RIORDAN_POLYTOPE_HYPERCUBE = 1,
  RIORDAN_POLYTOPE_ASSOCIAHEDRON = 2,
  RIORDAN_POLYTOPE_PERMUTAHEDRON = 3,
} RiordanPolytope;

// Opaque Jacobi continued fraction.
typedef struct RiordanJFraction RiordanJFraction;

// Opaque lower-triangular matrix with polynomial entries.
typedef struct RiordanMatrix RiordanMatrix;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or NULL. The pointer is
// valid until the next call into the library from the same thread.
const char *riordan_last_error(void);

// Library version as a static NUL-terminated string.
const char *riordan_version(void);

// Builds `size` rows of the γ-, h- or f-matrix of the ordinary family
// `(1/(1-x), x(1+rx)/(1-x))` or the exponential family `[e^x, x(1+rx/2)]`.
// With `symbolic_r` set, `r` is ignored and entries are polynomials in `r`.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum RiordanStatus riordan_family_matrix(enum RiordanFlavor flavor,
                                         bool symbolic_r,
                                         int64_t r,
                                         enum RiordanWhich which,
                                         size_t size,
                                         struct RiordanMatrix **out);

// Builds `size` rows of a named polytope's γ-, h- or f-matrix.
//
// # Safety
// `out` must be a valid pointer to writable storage for one handle.
enum RiordanStatus riordan_polytope_matrix(enum RiordanPolytope polytope,
                                           enum RiordanWhich which,
                                           size_t size,
                                           struct RiordanMatrix **out);

// Number of rows.
//
// # Safety
// `m` must be a live handle or NULL; `out` must be writable.
enum RiordanStatus riordan_matrix_size(const struct RiordanMatrix *m, size_t *out);

// Entry `(n, k)` in canonical text form, e.g. `3*r^2 + 24*r + 16`.
// Release the string with [`riordan_string_free`].
//
// # Safety
// `m` must be a live handle; `out` must be writable.
enum RiordanStatus riordan_matrix_entry_string(const struct RiordanMatrix *m,
                                               size_t n,
                                               size_t k,
                                               char **out);

// Entry `(n, k)` as a 64-bit integer; fails with `NotRepresentable` for
// symbolic, fractional or oversized entries.
//
// # Safety
// `m` must be a live handle; `out` must be writable.
enum RiordanStatus riordan_matrix_entry_i64(const struct RiordanMatrix *m,
                                            size_t n,
                                            size_t k,
                                            int64_t *out);

// New matrix with every row reversed.
//
// # Safety
// `m` must be a live handle; `out` must be writable.
enum RiordanStatus riordan_matrix_reversed(const struct RiordanMatrix *m,
                                           struct RiordanMatrix **out);

// Substitutes an integer for `r` in every entry.
//
// # Safety
// `m` must be a live handle; `out` must be writable.
enum RiordanStatus riordan_matrix_eval_r(const struct RiordanMatrix *m,
                                         int64_t r,
                                         struct RiordanMatrix **out);

// Compares the matrix with an embedded OEIS triangle such as `"A001263"`.
// Returns `Ok` on agreement and `Mismatch` otherwise.
//
// # Safety
// `m` must be a live handle; `anumber` a NUL-terminated string.
enum RiordanStatus riordan_matrix_check_oeis(const struct RiordanMatrix *m, const char *anumber);

// Releases a matrix. NULL is ignored.
//
// # Safety
// `m` must be NULL or a handle not yet freed.
void riordan_matrix_free(struct RiordanMatrix *m);

// Parses `J(alpha_i; beta_i)` from polynomials in `i`, `r` and `y`, e.g.
// `alpha = "2*y+1"`, `beta = "i*r*y*(y+1)"`.
//
// # Safety
// `alpha` and `beta` must be NUL-terminated strings; `out` writable.
enum RiordanStatus riordan_jfraction_parse(const char *alpha,
                                           const char *beta,
                                           struct RiordanJFraction **out);

// The first `size` rows of the expansion: row `n` holds the
// `y`-coefficients of `[x^n]`.
//
// # Safety
// `j` must be a live handle; `out` writable.
enum RiordanStatus riordan_jfraction_rows(const struct RiordanJFraction *j,
                                          size_t size,
                                          struct RiordanMatrix **out);

// Applies `alpha_i -> (i+1) alpha_i`, `beta_i -> i(i+1) beta_i`.
//
// # Safety
// `j` must be a live handle; `out` writable.
enum RiordanStatus riordan_jfraction_transfer(const struct RiordanJFraction *j,
                                              struct RiordanJFraction **out);

// Whether two fractions have identical level coefficients.
//
// # Safety
// Both handles must be live; `out` writable.
enum RiordanStatus riordan_jfraction_equal(const struct RiordanJFraction *a,
                                           const struct RiordanJFraction *b,
                                           bool *out);

// Text form, e.g. `J(alpha_i = 2*y + 1; beta_i = y^2 + y)`.
//
// # Safety
// `j` must be a live handle; `out` writable.
enum RiordanStatus riordan_jfraction_to_string(const struct RiordanJFraction *j, char **out);

// Releases a J-fraction. NULL is ignored.
//
// # Safety
// `j` must be NULL or a handle not yet freed.
void riordan_jfraction_free(struct RiordanJFraction *j);

// Releases a string returned by this library. NULL is ignored.
//
// # Safety
// `s` must be NULL or a string from this library not yet freed.
void riordan_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIORDAN_H */
