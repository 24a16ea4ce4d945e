/* C interface to the kbalance generating-function library. */

#ifndef KBALANCE_H
#define KBALANCE_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result of every fallible call.
 */
typedef enum KbStatus {
  KbStatusOk = 0,
  KbStatusInvalidArgument = 1,
  KbStatusBudgetExceeded = 2,
  KbStatusVerifyFailed = 3,
  KbStatusNullPointer = 4,
  KbStatusInternal = 5,
} KbStatus;

/**
 * Terminal-height condition for `kb_count_paths`.
 */
typedef enum KbTerminal {
  KbTerminalGround = 0,
  KbTerminalTop = 1,
  KbTerminalAny = 2,
} KbTerminal;

/**
 * Opaque handle to a reduced rational function.
 */
typedef struct KbGf KbGf;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Builds the generating function of `family` (one of `f`, `g`, `F`,
 * `G`, `Fbar`, `Gbar`, `H`, `Hbar`, `R`, `bad`, `good`) at index `k`.
 *
 * # Safety
 * `family` must be a valid C string and `out` a valid pointer.
 */
enum KbStatus kb_gf_new(const char *family, int64_t k, struct KbGf **out);

/**
 * Releases a handle obtained from [`kb_gf_new`]. NULL is a no-op.
 *
 * # Safety
 * `gf` must be NULL or a pointer returned by `kb_gf_new` that has not
 * been freed yet.
 */
void kb_gf_free(struct KbGf *gf);

/**
 * Numerator coefficients, ascending powers, space-separated decimals.
 * Returns NULL on a NULL handle; free with [`kb_string_free`].
 *
 * # Safety
 * `gf` must be NULL or a live handle from `kb_gf_new`.
 */
char *kb_gf_numerator(const struct KbGf *gf);

/**
 * Denominator coefficients; see [`kb_gf_numerator`].
 *
 * # Safety
 * `gf` must be NULL or a live handle from `kb_gf_new`.
 */
char *kb_gf_denominator(const struct KbGf *gf);

/**
 * First `terms` power-series coefficients of the handle, written as a
 * space-separated decimal string.
 *
 * # Safety
 * `gf` must be a live handle and `out` a valid pointer.
 */
enum KbStatus kb_gf_series(const struct KbGf *gf, uintptr_t terms, char **out);

/**
 * Coefficients of a combinatorial Chebyshev polynomial. `kind` is the
 * ASCII character `T` or `U`; `k >= 0` for T, `k >= -1` for U.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum KbStatus kb_cheb(char kind, int64_t k, char **out);

/**
 * Number of k-balanced binary strings of length `n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum KbStatus kb_count_strings(int64_t k, uint32_t n, uint64_t budget, uint64_t *out);

/**
 * Number of length-`n` walks from `v_0` on `C_k` that visit all nodes
 * (`cover` true) or miss at least one (false).
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum KbStatus kb_count_walks(int64_t k, uint32_t n, bool cover, uint64_t budget, uint64_t *out);

/**
 * Number of u/d paths of the given size bounded by `lower <= 0` and
 * `upper >= 0` with the stated terminal condition. For
 * `KB_TERMINAL_TOP` the size convention is `steps - upper`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum KbStatus kb_count_paths(int64_t lower,
                             int64_t upper,
                             enum KbTerminal terminal,
                             uint32_t size,
                             uint64_t budget,
                             uint64_t *out);

/**
 * Number of `n`-step paths of vertical extent at most `k`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum KbStatus kb_count_extent_paths(int64_t k, uint32_t n, uint64_t budget, uint64_t *out);

/**
 * Encodes a walk on `C_k` (node indices, `len` of them, starting at 0)
 * into its transition bit string, e.g. `"11011"`.
 *
 * # Safety
 * `nodes` must point to `len` readable elements; `out` must be valid.
 */
enum KbStatus kb_encode_walk(int64_t k, const uint32_t *nodes, uintptr_t len, char **out);

/**
 * Decodes a bit string (`'0'`/`'1'` characters) into the node sequence
 * of the walk it generates on `C_k`, space-separated.
 *
 * # Safety
 * `bits` must be a valid C string; `out` must be valid.
 */
enum KbStatus kb_decode_walk(int64_t k, const char *bits, char **out);

/**
 * Runs a verification suite (`cheb`, `tables`, `transfer`,
 * `reconcile`, `oracle`, or `all`). Returns `KB_STATUS_OK` when every
 * check passes and `KB_STATUS_VERIFY_FAILED` otherwise. If `report`
 * is non-NULL it receives the full PASS/FAIL listing in both cases.
 *
 * # Safety
 * `suite` must be a valid C string; `report` may be NULL.
 */
enum KbStatus kb_verify(const char *suite, int64_t kmax, uint32_t nmax, char **report);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library that has not
 * been freed yet.
 */
void kb_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* KBALANCE_H */
