/*
 * Copyright (c) 2026 drnc contributors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to the drnc computer algebra kernel: Groebner bases, minimal
 * free resolutions, Betti tables and Hilbert data over polynomial rings,
 * double rational normal curve constructions and their verification suites,
 * and symmetric-power plethysm decompositions.
 *
 * Conventions:
 *   - every object is an opaque handle, freed by the matching *_free call;
 *   - every function returns a drnc_status; results come back via out
 *     parameters, valid only when the call returns DRNC_OK;
 *   - strings returned through char** are heap-allocated and must be
 *     released with drnc_string_free;
 *   - characteristic 0 selects exact rationals, otherwise an odd prime
 *     word-sized characteristic selects F_p (32003 is the usual choice).
 */
#ifndef DRNC_H
#define DRNC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DRNC_API __declspec(dllexport)
#else
#define DRNC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum drnc_status {
    DRNC_OK = 0,
    DRNC_ERR_INVALID_ARGUMENT = 1,
    DRNC_ERR_PARSE = 2,
    DRNC_ERR_RING_MISMATCH = 3,
    DRNC_ERR_INHOMOGENEOUS = 4,
    DRNC_ERR_GUARD = 5,
    DRNC_ERR_TRUNCATED = 6,
    DRNC_ERR_VERIFY_FAILED = 7,
    DRNC_ERR_INTERNAL = 8
} drnc_status;

typedef struct drnc_ideal drnc_ideal;
typedef struct drnc_resolution drnc_resolution;
typedef struct drnc_betti drnc_betti;
typedef struct drnc_hilbert_data drnc_hilbert_data;
typedef struct drnc_decomp drnc_decomp;

/* Options shared by most entry points. order is "grevlex" or "lex";
 * characteristic 0 means rationals. */
typedef struct drnc_options {
    uint32_t characteristic;
    const char* order;
} drnc_options;

DRNC_API drnc_options drnc_default_options(void);

/* Message for the last error raised on this thread. */
DRNC_API const char* drnc_last_error(void);
DRNC_API void drnc_string_free(char* s);

/* ------------------------------------------------------------------ */
/* Ideals                                                              */

/* Parses `vars:` header plus one polynomial per line. strict_graded
 * rejects inhomogeneous polynomials. */
DRNC_API drnc_status drnc_ideal_parse(const char* text, const drnc_options* opts,
                                      int strict_graded, drnc_ideal** out);
DRNC_API drnc_status drnc_ideal_text(const drnc_ideal* ideal, char** out);
DRNC_API drnc_status drnc_ideal_size(const drnc_ideal* ideal, size_t* out);
DRNC_API void drnc_ideal_free(drnc_ideal* ideal);

/* Constructions. */
DRNC_API drnc_status drnc_rnc_ideal(uint32_t d, const drnc_options* opts, drnc_ideal** out);
DRNC_API drnc_status drnc_double_curve_ideal(uint32_t d, const drnc_options* opts,
                                             const int64_t* basis_matrix /* d*d row-major or NULL */,
                                             drnc_ideal** out);
DRNC_API drnc_status drnc_veronese_ideal(uint32_t n, uint32_t d, const drnc_options* opts,
                                         drnc_ideal** out);
DRNC_API drnc_status drnc_linear_embed(const drnc_ideal* ideal, uint32_t m, drnc_ideal** out);

/* ------------------------------------------------------------------ */
/* Resolutions, Betti tables, Hilbert data                             */

/* max_length < 0 leaves the length unconstrained. */
DRNC_API drnc_status drnc_min_resolution(const drnc_ideal* ideal, int max_length,
                                         drnc_resolution** out);
DRNC_API drnc_status drnc_resolution_length(const drnc_resolution* res, size_t* out);
DRNC_API drnc_status drnc_resolution_truncated(const drnc_resolution* res, int* out);
DRNC_API drnc_status drnc_resolution_betti(const drnc_resolution* res, drnc_betti** out);
DRNC_API void drnc_resolution_free(drnc_resolution* res);

DRNC_API drnc_status drnc_betti_entry(const drnc_betti* b, int i, int j, int64_t* out);
DRNC_API drnc_status drnc_betti_text(const drnc_betti* b, char** out);
DRNC_API drnc_status drnc_betti_json(const drnc_betti* b, char** out);
DRNC_API void drnc_betti_free(drnc_betti* b);

DRNC_API drnc_status drnc_hilbert(const drnc_ideal* ideal, drnc_hilbert_data** out);
/* "4*t + 1" style rendering of the Hilbert polynomial. */
DRNC_API drnc_status drnc_hilbert_polynomial_text(const drnc_hilbert_data* h, char** out);
DRNC_API drnc_status drnc_hilbert_numerator_text(const drnc_hilbert_data* h, char** out);
DRNC_API void drnc_hilbert_free(drnc_hilbert_data* h);

/* ------------------------------------------------------------------ */
/* Verification suites (exit-style: *pass is 1 or 0, report is text)   */

DRNC_API drnc_status drnc_verify_double(uint32_t d, const drnc_options* opts, char** report,
                                        int* pass);
DRNC_API drnc_status drnc_verify_rnc(uint32_t dmin, uint32_t dmax, const drnc_options* opts,
                                     char** report, int* pass);
DRNC_API drnc_status drnc_verify_lemma1(const drnc_options* opts, char** report, int* pass);
DRNC_API drnc_status drnc_verify_castelnuovo(uint64_t seed, const drnc_options* opts, char** report,
                                             int* pass);

/* ------------------------------------------------------------------ */
/* Plethysm                                                            */

/* dim 2: S^t(S^d);  dim 3: d in {2,3};  dim 4: d = 2. */
DRNC_API drnc_status drnc_plethysm(uint32_t dim_v, uint32_t t, uint32_t d, drnc_decomp** out);
/* Character oracle route for the same decomposition (guarded at 10^6). */
DRNC_API drnc_status drnc_plethysm_oracle(uint32_t dim_v, uint32_t t, uint32_t d,
                                          drnc_decomp** out);
DRNC_API drnc_status drnc_plethysm_verify(uint32_t dim_v, uint32_t t, uint32_t d, char** report,
                                          int* pass);
DRNC_API drnc_status drnc_decomp_text(const drnc_decomp* d, char** out);
DRNC_API drnc_status drnc_decomp_json(const drnc_decomp* d, char** out);
DRNC_API drnc_status drnc_decomp_equal(const drnc_decomp* a, const drnc_decomp* b, int* out);
DRNC_API void drnc_decomp_free(drnc_decomp* d);

#ifdef __cplusplus
}
#endif

#endif /* DRNC_H */
