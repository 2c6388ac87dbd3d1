#ifndef PMATCH_H
#define PMATCH_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define PM_ALGO_EXACT_NAIVE 0

#define PM_ALGO_EXACT_KMP 1

#define PM_ALGO_PM_NAIVE 2

#define PM_ALGO_PM_AUTO 3

/**
 * Status codes returned by fallible calls.
 */
typedef enum PmStatus {
  PM_STATUS_OK = 0,
  PM_STATUS_INVALID_ARGUMENT = 1,
  PM_STATUS_NULL_POINTER = 2,
  PM_STATUS_FORMAT = 3,
  PM_STATUS_IO = 4,
  PM_STATUS_INTERNAL = 5,
  PM_STATUS_PANIC = 6,
} PmStatus;

/**
 * Opaque search result handle.
 */
typedef struct PmOutcome PmOutcome;

/**
 * Opaque pattern handle.
 */
typedef struct PmPattern PmPattern;

/**
 * Opaque text handle.
 */
typedef struct PmText PmText;

/**
 * One symbol code.
 */
typedef uint16_t PmSymbol;

/**
 * Counters of one search call.
 */
typedef struct PmStats {
  uint64_t symbol_comparisons;
  uint64_t aux_lookups;
  uint64_t elapsed_ns;
} PmStats;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *pm_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *pm_version(void);

/**
 * Copies `len` symbols into a new text over `0..sigma`.
 *
 * # Safety
 * `symbols` must point to `len` readable values (it may be null when
 * `len` is 0); `out` must be writable.
 */
enum PmStatus pm_text_new(const PmSymbol *symbols, size_t len, uint32_t sigma, struct PmText **out);

/**
 * Reads a text in the PMTX binary format.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum PmStatus pm_text_load(const char *path, struct PmText **out);

/**
 * Writes a text in the PMTX binary format.
 *
 * # Safety
 * `text` must be a live handle and `path` a NUL-terminated string.
 */
enum PmStatus pm_text_save(const struct PmText *text, const char *path);

/**
 * Number of symbols; 0 for a null handle.
 *
 * # Safety
 * `text` must be null or a live handle.
 */
size_t pm_text_len(const struct PmText *text);

/**
 * Alphabet size; 0 for a null handle.
 *
 * # Safety
 * `text` must be null or a live handle.
 */
uint32_t pm_text_sigma(const struct PmText *text);

/**
 * Borrowed pointer to the symbols, valid while the handle lives.
 *
 * # Safety
 * `text` must be null or a live handle.
 */
const PmSymbol *pm_text_symbols(const struct PmText *text);

/**
 * # Safety
 * `text` must be null or a handle not freed before.
 */
void pm_text_free(struct PmText *text);

/**
 * Copies `len >= 1` symbols into a new pattern over `0..sigma`.
 *
 * # Safety
 * `symbols` must point to `len` readable values; `out` must be writable.
 */
enum PmStatus pm_pattern_new(const PmSymbol *symbols,
                             size_t len,
                             uint32_t sigma,
                             struct PmPattern **out);

/**
 * Reads a pattern in the PMTX binary format.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` must be writable.
 */
enum PmStatus pm_pattern_load(const char *path, struct PmPattern **out);

/**
 * # Safety
 * `pattern` must be null or a live handle.
 */
size_t pm_pattern_len(const struct PmPattern *pattern);

/**
 * # Safety
 * `pattern` must be null or a handle not freed before.
 */
void pm_pattern_free(struct PmPattern *pattern);

/**
 * Searches `text` for `pattern` with one of the `PM_ALGO_*` algorithms.
 *
 * # Safety
 * `text` and `pattern` must be live handles; `out` must be writable.
 */
enum PmStatus pm_search(uint32_t algo,
                        const struct PmText *text,
                        const struct PmPattern *pattern,
                        struct PmOutcome **out);

/**
 * Number of occurrences; 0 for a null handle.
 *
 * # Safety
 * `outcome` must be null or a live handle.
 */
size_t pm_outcome_count(const struct PmOutcome *outcome);

/**
 * Borrowed pointer to the 0-based start positions in increasing order,
 * valid while the handle lives.
 *
 * # Safety
 * `outcome` must be null or a live handle.
 */
const size_t *pm_outcome_occurrences(const struct PmOutcome *outcome);

/**
 * # Safety
 * `outcome` must be a live handle and `stats` writable.
 */
enum PmStatus pm_outcome_stats(const struct PmOutcome *outcome, struct PmStats *stats);

/**
 * # Safety
 * `outcome` must be null or a handle not freed before.
 */
void pm_outcome_free(struct PmOutcome *outcome);

/**
 * Writes the prev-encoding (1-based entries) of `len >= 1` symbols into
 * `out`, which must hold `len` values.
 *
 * # Safety
 * `symbols` must point to `len` readable values and `out` to `len`
 * writable ones.
 */
enum PmStatus pm_prev_encode(const PmSymbol *symbols, size_t len, uint32_t *out);

/**
 * Sets `*out` to whether the two `len`-symbol strings parameterize-match.
 *
 * # Safety
 * `a` and `b` must each point to `len` readable values; `out` must be
 * writable.
 */
enum PmStatus pm_p_equivalent(const PmSymbol *a, const PmSymbol *b, size_t len, bool *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PMATCH_H */
