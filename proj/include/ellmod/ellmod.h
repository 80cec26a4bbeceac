/*
 * ellmod — exact moduli tables for principal bundles on elliptic fibrations.
 *
 * C interface to the toolkit: opaque handles, integer status codes, and
 * JSON/Markdown reports returned as heap strings.  Every string output must
 * be released with ellmod_string_free(); every handle with its _free().
 *
 * Status codes mirror the CLI exit codes:
 *   0 ok, 1 input error, 2 internal invariant violation, 3 selftest failure.
 * On failure, ellmod_last_error() returns a thread-local message.
 */

#ifndef ELLMOD_H
#define ELLMOD_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#ifndef ELLMOD_API
#define ELLMOD_API __attribute__((visibility("default")))
#endif

typedef enum ellmod_status {
  ELLMOD_OK = 0,
  ELLMOD_ERR_INPUT = 1,
  ELLMOD_ERR_INTERNAL = 2,
  ELLMOD_ERR_SELFTEST = 3
} ellmod_status;

ELLMOD_API const char* ellmod_version(void);
ELLMOD_API const char* ellmod_last_error(void);
ELLMOD_API void ellmod_string_free(char* s);

/* ---- root systems ------------------------------------------------------ */

typedef struct ellmod_rootsys ellmod_rootsys;

/* series is one of 'A'..'G'; rank must be admissible for the series */
ELLMOD_API ellmod_status ellmod_rootsys_create(char series, int rank, ellmod_rootsys** out);
ELLMOD_API void ellmod_rootsys_free(ellmod_rootsys* rs);

ELLMOD_API ellmod_status ellmod_rootsys_root_count(const ellmod_rootsys* rs, int64_t* out);
ELLMOD_API ellmod_status ellmod_rootsys_cartan_det(const ellmod_rootsys* rs, int64_t* out);

/* buf receives rank+1 entries; written reports how many were filled */
ELLMOD_API ellmod_status ellmod_rootsys_wps_weights(const ellmod_rootsys* rs, int64_t* buf,
                                                    int buflen, int* written);
ELLMOD_API ellmod_status ellmod_rootsys_invariant_degrees(const ellmod_rootsys* rs, int64_t* buf,
                                                          int buflen, int* written);

/* ---- elliptic curves --------------------------------------------------- */

typedef struct ellmod_curve ellmod_curve;

/* field: "q" for rationals or "p:<prime>"; b2, b3: rational literals */
ELLMOD_API ellmod_status ellmod_curve_create(const char* field, const char* b2, const char* b3,
                                             ellmod_curve** out);
ELLMOD_API void ellmod_curve_free(ellmod_curve* c);

/* number of 2-torsion points rational over the base field (1, 2, or 4) */
ELLMOD_API ellmod_status ellmod_curve_two_torsion_count(const ellmod_curve* c, int* out);

/* group order by exhaustive scan; finite fields with p <= 10^4 only */
ELLMOD_API ellmod_status ellmod_curve_point_count(const ellmod_curve* c, int64_t* out);

/* ---- report commands ---------------------------------------------------
 * format is "json" or "md"; *out receives a NUL-terminated report. */

ELLMOD_API ellmod_status ellmod_cmd_wps_table(const char* types, int max_rank, const char* format,
                                              char** out);

ELLMOD_API ellmod_status ellmod_cmd_strata(const char* type, const char* field, const char* curve,
                                           const char* points, const char* format, char** out);

ELLMOD_API ellmod_status ellmod_cmd_abel_jacobi(const char* field, const char* curve,
                                                const char* points, const char* format,
                                                char** out);

/* coeffs_json may be NULL (seeded instance) or a JSON object
 * {"b2": [...], "b3": [...], "a": {"1": [...], "x": [...], ...}} */
ELLMOD_API ellmod_status ellmod_cmd_spectral_report(int n, int k, uint64_t seed,
                                                    const char* coeffs_json, int selfcheck,
                                                    const char* format, char** out);

/* runs the acceptance suite; returns ELLMOD_OK only if every criterion and
 * the byte-determinism rerun pass; *out always receives the JSON summary */
ELLMOD_API ellmod_status ellmod_cmd_selftest(uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ELLMOD_H */
