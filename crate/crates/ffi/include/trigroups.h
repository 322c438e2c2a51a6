#ifndef TRIGROUPS_H
#define TRIGROUPS_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Encodes an infinite order.
 */
#define TG_INFINITY 0

#define TG_OK 0

#define TG_ERR_NULL -1

#define TG_ERR_INVALID_ORDER -2

#define TG_ERR_NOT_HYPERBOLIC -3

#define TG_ERR_INVARIANT -4

/**
 * A result does not fit the C type, or an argument is out of range.
 */
#define TG_ERR_OUT_OF_RANGE -5

#define TG_ERR_PANIC -255

#define TG_MODE_PAPER 0

#define TG_MODE_SAFE 1

#define TG_MULT_AUTO 0

#define TG_MULT_BRUTE 1

#define TG_MULT_CLOSED 2

#define TG_METHOD_BRUTE_FORCE 0

#define TG_METHOD_CLOSED_FORM 1

#define TG_METHOD_RESIDUE_LIFT 2

#define TG_FOUND_DIRECT_SCAN 0

#define TG_FOUND_DIVISOR_FILTER 1

#define TG_FOUND_NONCOMPACT_LOOP 2

/**
 * Result of [`tg_enumerate`]; release with [`tg_enumeration_free`].
 */
typedef struct TgEnumeration TgEnumeration;

typedef struct TgAdim {
  uint64_t adim;
  uint64_t m;
  uint64_t phi2m;
  uint64_t h;
  uint64_t classes;
  uint64_t hyperbolic_ks;
  uint64_t spherical_ks;
} TgAdim;

typedef struct TgMultiplicity {
  uint64_t h;
  uint64_t h1;
  uint64_t h2;
  uint8_t t;
  uint8_t u;
  /**
   * One of the `TG_METHOD_*` constants.
   */
  int32_t method;
  /**
   * 1 or 0 when the closed form was cross-checked, -1 otherwise.
   */
  int32_t agreement;
} TgMultiplicity;

/**
 * Sorted so that `a <= b <= c`, with [`TG_INFINITY`] last.
 */
typedef struct TgRecord {
  uint64_t a;
  uint64_t b;
  uint64_t c;
  uint64_t adim;
  bool compact;
  /**
   * One of the `TG_FOUND_*` constants.
   */
  int32_t found_via;
} TgRecord;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Arithmetic dimension of `(a, b, c)` together with its intermediate counts.
 *
 * # Safety
 * `out` must be null or point to writable storage for a `TgAdim`.
 */
int32_t tg_adim(uint64_t a, uint64_t b, uint64_t c, struct TgAdim *out);

/**
 * `#H` and friends; `mode` is one of the `TG_MULT_*` constants.
 *
 * # Safety
 * `out` must be null or point to writable storage for a `TgMultiplicity`.
 */
int32_t tg_multiplicity(uint64_t a,
                        uint64_t b,
                        uint64_t c,
                        int32_t mode,
                        struct TgMultiplicity *out);

/**
 * Sign of the curvature of the `k`-th conjugate: -1, 0 or 1.
 * `k` must be a unit modulo `2m`.
 *
 * # Safety
 * `out` must be null or point to a writable `int32_t`.
 */
int32_t tg_curvature_sign(uint64_t a, uint64_t b, uint64_t c, uint64_t k, int32_t *out);

/**
 * Every triple of arithmetic dimension `r`. `mode` is `TG_MODE_PAPER` or
 * `TG_MODE_SAFE`; `threads = 0` uses every core.
 *
 * # Safety
 * `out` must be null or point to writable storage for a pointer.
 */
int32_t tg_enumerate(uint64_t r, int32_t mode, uint32_t threads, struct TgEnumeration **out);

/**
 * Number of records; 0 for a null handle.
 *
 * # Safety
 * `e` must be null or a live handle from [`tg_enumerate`].
 */
uintptr_t tg_enumeration_len(const struct TgEnumeration *e);

/**
 * Copies record `i` into `out`.
 *
 * # Safety
 * `e` must be null or a live handle; `out` must be null or writable.
 */
int32_t tg_enumeration_get(const struct TgEnumeration *e, uintptr_t i, struct TgRecord *out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `e` must be null or a handle from [`tg_enumerate`] not yet freed.
 */
void tg_enumeration_free(struct TgEnumeration *e);

/**
 * Message for the last failed call on this thread; empty if none. The
 * pointer stays valid until the next failing call on the same thread.
 */
const char *tg_error_message(void);

/**
 * Library version as a static string.
 */
const char *tg_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIGROUPS_H */
