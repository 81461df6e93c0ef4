/* C interface to the boxpat enumeration engine.
 *
 * Conventions:
 *  - Fallible functions return a status code matching the boxpat CLI exit
 *    codes: 0 ok, 1 verification mismatch, 2 parse error, 3 bound exceeded,
 *    4 precondition violation.
 *  - On failure, boxpat_last_error() returns a thread-local message valid
 *    until the next failing call on the same thread.
 *  - Strings returned through char ** out-parameters are NUL-terminated,
 *    owned by the caller, and must be released with boxpat_string_free().
 */

#ifndef BOXPAT_H
#define BOXPAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    BOXPAT_OK = 0,
    BOXPAT_EVERIFY = 1,
    BOXPAT_EPARSE = 2,
    BOXPAT_EBOUND = 3,
    BOXPAT_EPRECOND = 4,
};

/* Thread-local message for the last failing call; empty string if none. */
const char *boxpat_last_error(void);

/* Release any string returned by this library. Accepts NULL. */
void boxpat_string_free(char *s);

/* --- statistics ---------------------------------------------------------
 * stat is one of: "bond", "box1", "kbox:k", "rect:a,b", "kbond:k".
 * Objects use the text formats of the CLI: permutations and words as
 * concatenated digits or comma-separated integers; signed permutations as
 * comma-separated entries with a leading '-' or trailing '\'' marking a bar.
 */
int32_t boxpat_perm_stat(const char *perm, const char *stat, uint64_t *out);
int32_t boxpat_word_stat(uint32_t alphabet, const char *word, const char *stat,
                         uint64_t *out);
int32_t boxpat_sperm_bad_pairs(const char *sperm, uint64_t *out);

/* --- transfer-system series --------------------------------------------
 * system is "kbond", "rect1k" (both use k), or "box2" (k ignored).
 * order is the t-degree to expand to, at most 64.
 */
typedef struct BoxpatSeries BoxpatSeries;

int32_t boxpat_series_new(const char *system, uint32_t ell, uint32_t k,
                          size_t order, BoxpatSeries **out);
void boxpat_series_free(BoxpatSeries *s);
size_t boxpat_series_order(const BoxpatSeries *s);

/* Decimal string for the coefficient of x^x_power t^t_order. */
int32_t boxpat_series_coeff(const BoxpatSeries *s, size_t t_order,
                            size_t x_power, char **out);

/* Whole series as JSON: [{"t_order": n, "coeffs": ["c0", ...]}, ...]. */
int32_t boxpat_series_json(const BoxpatSeries *s, char **out);

/* Closed form ("kbond" or "rect1k") as JSON {"num": {...}, "den": {...}},
 * coefficients keyed "a,b" for x^a t^b. */
int32_t boxpat_gf_json(const char *system, uint32_t ell, uint32_t k,
                       char **out);

/* --- verification -------------------------------------------------------
 * target: "hardin-3", "hardin-4", "hardin-5", "mathar", "barker", "riordan",
 * "flajolet", "maxbox", "fibonacci", or "all". Writes the text report and
 * returns BOXPAT_OK on pass, BOXPAT_EVERIFY on mismatch.
 */
int32_t boxpat_verify(const char *target, char **report_out);

/* --- LEGO walls (bricks 2, 3, 4) ---------------------------------------
 * Wall text format: rows bottom to top, one per line, bricks separated by
 * '+', e.g. "2+2+3".
 */
int32_t boxpat_lego_count(uint32_t width, size_t height, char **out);
int32_t boxpat_lego_encode(const char *word, char **wall_out);
int32_t boxpat_lego_decode(uint32_t width, const char *wall, char **word_out);

#ifdef __cplusplus
}
#endif

#endif /* BOXPAT_H */
