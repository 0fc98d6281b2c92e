/* weylcone -- exact combinatorics, limit-theorem diagnostics and Monte Carlo
 * geometry for Weyl random cones of types A and B.
 *
 * C API: opaque handles, integer status codes, UTF-8 strings. All functions
 * are thread-safe on distinct handles; handles are immutable once created.
 * String outputs follow the needed-size protocol: pass a buffer and its
 * capacity; *needed receives the full length (excluding NUL) and
 * WC_ERR_BUFFER_TOO_SMALL is returned when the capacity is insufficient.
 */
#ifndef WEYLCONE_H
#define WEYLCONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define WC_API __declspec(dllexport)
#else
#  define WC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wc_status {
    WC_OK = 0,
    WC_ERR_INVALID_ARGUMENT = 1,
    WC_ERR_OUT_OF_RANGE = 2,
    WC_ERR_NUMERIC = 3,
    WC_ERR_GUARD = 4,
    WC_ERR_BUFFER_TOO_SMALL = 5,
    WC_ERR_INTERNAL = 6
} wc_status;

typedef enum wc_cone_type { WC_TYPE_A = 0, WC_TYPE_B = 1 } wc_cone_type;
typedef enum wc_cone_side { WC_CONE_WEYL = 0, WC_CONE_DUAL = 1 } wc_cone_side;
typedef enum wc_functional_kind {
    WC_FUNC_INTRINSIC_VOLUMES = 0,
    WC_FUNC_QUERMASSINTEGRALS = 1,
    WC_FUNC_FACE_NUMBERS = 2
} wc_functional_kind;
typedef enum wc_distribution { WC_DIST_GAUSSIAN = 0, WC_DIST_SPHERE = 1 } wc_distribution;

WC_API const char* wc_version(void);
/* Message for the most recent failing call on this thread. */
WC_API const char* wc_last_error(void);
WC_API const char* wc_status_name(wc_status s);

/* ---- exact combinatorics ------------------------------------------------ */

typedef struct wc_stirling_table wc_stirling_table;

WC_API wc_status wc_stirling_table_create(wc_cone_type type, int32_t max_n,
                                          wc_stirling_table** out);
WC_API void wc_stirling_table_destroy(wc_stirling_table* t);
WC_API int32_t wc_stirling_table_max_n(const wc_stirling_table* t);
/* Decimal representation of the (n,k) entry (0 for k outside {0..n}). */
WC_API wc_status wc_stirling_entry(const wc_stirling_table* t, int32_t n, int32_t k, char* buf,
                                   size_t cap, size_t* needed);
/* Decimal chamber count D(n,d); requires 1 <= d <= n <= max_n. */
WC_API wc_status wc_chamber_count(const wc_stirling_table* t, int32_t n, int32_t d, char* buf,
                                  size_t cap, size_t* needed);
/* Even- and odd-index row sums (n >= 2). */
WC_API wc_status wc_parity_sums(const wc_stirling_table* t, int32_t n, char* even_buf,
                                size_t even_cap, size_t* even_needed, char* odd_buf,
                                size_t odd_cap, size_t* odd_needed);

/* ---- law of S_n --------------------------------------------------------- */

typedef struct wc_pmf wc_pmf;

WC_API wc_status wc_pmf_create(wc_cone_type type, int32_t n, wc_pmf** out);
WC_API void wc_pmf_destroy(wc_pmf* p);
WC_API int32_t wc_pmf_length(const wc_pmf* p); /* n + 1 */
WC_API wc_status wc_pmf_probs(const wc_pmf* p, double* out, size_t cap);
WC_API wc_status wc_pmf_odd_tail(const wc_pmf* p, int32_t m, double* out);
WC_API wc_status wc_pmf_moments(wc_cone_type type, int32_t n, double* mean, double* variance);
WC_API wc_status wc_mgf_ratio(wc_cone_type type, int32_t n, double z, double* out);
WC_API wc_status wc_psi_limit(wc_cone_type type, double z, double* out);
WC_API wc_status wc_clt_kolmogorov(wc_cone_type type, int32_t n, double* out);
WC_API wc_status wc_normal_cdf(double x, double* out);
WC_API wc_status wc_asymptotic_point(wc_cone_type type, int32_t n, double z, int32_t ell,
                                     double* out);
WC_API wc_status wc_asymptotic_odd_tail(wc_cone_type type, int32_t n, double z, double* out);

/* ---- exact expected functionals ----------------------------------------- */

typedef struct wc_functionals wc_functionals;

WC_API wc_status wc_functionals_create(wc_cone_type type, int32_t n, int32_t d, wc_cone_side side,
                                       wc_functional_kind kind, wc_functionals** out);
WC_API void wc_functionals_destroy(wc_functionals* f);
WC_API int32_t wc_functionals_count(const wc_functionals* f);
WC_API int32_t wc_functionals_k_first(const wc_functionals* f);
/* Exact value as a "p/q" string. */
WC_API wc_status wc_functionals_value(const wc_functionals* f, int32_t index, char* buf,
                                      size_t cap, size_t* needed);
WC_API wc_status wc_functionals_value_double(const wc_functionals* f, int32_t index, double* out);
/* Expected statistical dimension, exact string plus double. */
WC_API wc_status wc_stat_dim(wc_cone_type type, int32_t n, int32_t d, char* buf, size_t cap,
                             size_t* needed, double* value);

/* ---- limit-theorem sweeps ----------------------------------------------- */

typedef struct wc_sweep wc_sweep;

typedef struct wc_sweep_row {
    int64_t n;
    int64_t d;
    int64_t k;           /* -1 when the regime has no k */
    double realized_x;
    double realized_y;
    double realized_c;
    double realized_alpha;
    int32_t clamped;
    double finite_value;
    double predicted_limit;
    double gap;
    int32_t gap_is_relative;
    int32_t ok;          /* 0: see wc_sweep_row_message */
} wc_sweep_row;

/* theorem: one of "4.1", "4.2", "5.1", "5.3", "5.4", "5.5", "6.1".
 * params: comma-separated key=value pairs, e.g. "x=2,alpha=0.5",
 * "x=0.5,c=0.8", "x=2,y=4", "x=2,k=2", "c=0" (critical window),
 * plus "mode=sublinear|linear|nearn|critical" for theorem 4.1. */
WC_API wc_status wc_sweep_create(const char* theorem, wc_cone_type type, const char* params,
                                 const int64_t* n_list, size_t n_count, wc_sweep** out);
WC_API void wc_sweep_destroy(wc_sweep* s);
WC_API size_t wc_sweep_row_count(const wc_sweep* s);
WC_API wc_status wc_sweep_get_row(const wc_sweep* s, size_t index, wc_sweep_row* out);
WC_API wc_status wc_sweep_row_message(const wc_sweep* s, size_t index, char* buf, size_t cap,
                                      size_t* needed);

/* ---- Monte Carlo simulation --------------------------------------------- */

typedef struct wc_mc_estimate {
    int32_t k;                 /* functional index; -1 when not indexed */
    double mean;
    double std_error;
    int64_t samples;           /* independent top-level samples */
    double accepted_fraction;  /* NaN when not applicable */
    uint64_t seed;
    double exact_value;        /* NaN when no exact reference exists */
    int32_t has_exact;
} wc_mc_estimate;

/* functional: "iv" (writes d+1 rows), "faces", "quermass", "statdim" (one row
 * each; statdim writes a second row with the squared-norm cross-check when
 * cap >= 2). side selects the cone for "quermass" (WC_CONE_WEYL: uniform
 * chamber; WC_CONE_DUAL: conditioned positive hull). */
WC_API wc_status wc_simulate(wc_cone_type type, int32_t n, int32_t d, const char* functional,
                             int32_t k, wc_cone_side side, int64_t samples, uint64_t seed,
                             int32_t threads, wc_distribution dist, wc_mc_estimate* out,
                             size_t cap, size_t* written);

/* ---- tessellation ------------------------------------------------------- */

/* Enumerated chamber count of one sampled arrangement. */
WC_API wc_status wc_tessellate_count(wc_cone_type type, int32_t n, int32_t d, uint64_t seed,
                                     wc_distribution dist, int64_t* chambers);
/* Per-seed enumeration vs the exact formula; all_match = 1 when every seed
 * reproduces D(n,d). counts may be NULL. */
WC_API wc_status wc_tessellate_verify(wc_cone_type type, int32_t n, int32_t d,
                                      const uint64_t* seeds, size_t n_seeds,
                                      wc_distribution dist, int32_t* all_match, int64_t* counts);
/* Sign matrix of the enumerated chambers, one +/- row per chamber. */
WC_API wc_status wc_tessellate_signs(wc_cone_type type, int32_t n, int32_t d, uint64_t seed,
                                     wc_distribution dist, char* buf, size_t cap, size_t* needed);
/* Average f_k over all chambers of one sampled arrangement (d <= 3). */
WC_API wc_status wc_tessellate_face_average(wc_cone_type type, int32_t n, int32_t d, int32_t k,
                                            uint64_t seed, wc_distribution dist, double* average,
                                            int64_t* chambers);

/* ---- acceptance suite --------------------------------------------------- */

typedef struct wc_verify wc_verify;

WC_API wc_status wc_verify_run(uint64_t seed, int32_t threads, int32_t verbose, wc_verify** out);
WC_API void wc_verify_destroy(wc_verify* v);
WC_API size_t wc_verify_count(const wc_verify* v);
WC_API wc_status wc_verify_item(const wc_verify* v, size_t index, int32_t* id, int32_t* passed,
                                double* seconds, char* name_buf, size_t name_cap,
                                size_t* name_needed, char* detail_buf, size_t detail_cap,
                                size_t* detail_needed);
WC_API int32_t wc_verify_all_passed(const wc_verify* v);

#ifdef __cplusplus
}
#endif

#endif /* WEYLCONE_H */
