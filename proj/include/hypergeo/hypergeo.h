/*
 * hypergeo C API.
 *
 * Exact hypergeometric probabilities, the Chvatal-Hoeffding tail bounds and a
 * grid verifier, exposed through opaque handles and status codes. Every
 * function returns HG_OK on success; on failure hg_last_error() describes the
 * problem for the calling thread. Handles are immutable after creation and
 * may be shared between threads for reading. Strings returned through a
 * char** out-parameter are owned by the caller and released with
 * hg_string_free().
 *
 * Notation: population N, whites M (balls that count), draws n, white count
 * i among the draws, tail threshold k.
 */
#ifndef HYPERGEO_H
#define HYPERGEO_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HG_BUILDING_LIBRARY)
#    define HG_API __declspec(dllexport)
#  else
#    define HG_API __declspec(dllimport)
#  endif
#else
#  define HG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hg_status {
    HG_OK = 0,
    HG_ERR_NULL_ARGUMENT = 1, /* a required pointer was NULL */
    HG_ERR_DOMAIN = 2,        /* parameters outside their domain */
    HG_ERR_DEGENERATE = 3,    /* quantity undefined, e.g. deviation with n = 0 */
    HG_ERR_PARSE = 4,         /* malformed number */
    HG_ERR_IO = 5,            /* file could not be written */
    HG_ERR_INTERNAL = 6
} hg_status;

typedef enum hg_side { HG_SIDE_UPPER = 0, HG_SIDE_LOWER = 1 } hg_side;

typedef enum hg_form { HG_FORM_HOEFFDING = 0, HG_FORM_RELAXED = 1 } hg_form;

typedef enum hg_format { HG_FORMAT_TEXT = 0, HG_FORMAT_JSON = 1, HG_FORMAT_CSV = 2 } hg_format;

typedef enum hg_symmetry {
    HG_SYMMETRY_COLOR_FLIP = 0, /* (N, M, n, i) -> (N, N-M, n, n-i) */
    HG_SYMMETRY_DRAWN_SWAP = 1, /* (N, M, n, i) -> (N, M, N-n, M-i) */
    HG_SYMMETRY_ROLE_SWAP = 2   /* (N, M, n, i) -> (N, n, M, i) */
} hg_symmetry;

typedef struct hg_params hg_params;
typedef struct hg_rational hg_rational;
typedef struct hg_report hg_report;

typedef struct hg_point {
    uint64_t population;
    uint64_t whites;
    uint64_t draws;
    int64_t i;
} hg_point;

typedef struct hg_bound {
    double value; /* in [0, 1] */
    int vacuous;  /* nonzero when the deviation was negative and value is 1 */
} hg_bound;

typedef struct hg_tail_estimate {
    double point_estimate;
    double std_error;
    uint64_t replicates;
    uint64_t hits;
} hg_tail_estimate;

/* Empty (NULL, 0) lists mean "all valid values". */
typedef struct hg_grid_spec {
    uint64_t population_min;
    uint64_t population_max;
    const uint64_t* whites;
    size_t whites_count;
    const uint64_t* draws;
    size_t draws_count;
    const int64_t* thresholds;
    size_t thresholds_count;
    hg_side side;
    unsigned threads; /* 0 = hardware concurrency */
} hg_grid_spec;

typedef struct hg_report_summary {
    uint64_t rows;
    uint64_t violations;
    uint64_t vacuous;
    double max_slack_hoeffding;
    double min_slack_hoeffding;
    double max_slack_relaxed;
} hg_report_summary;

HG_API const char* hg_version(void);
HG_API const char* hg_status_string(hg_status status);
/* Message for the last failure on this thread; "" if none. */
HG_API const char* hg_last_error(void);
HG_API void hg_string_free(char* text);
/* Shortest round-trip decimal form, locale independent. */
HG_API hg_status hg_format_double(double value, char** out);

/* --- parameters --------------------------------------------------------- */
HG_API hg_status hg_params_create(uint64_t population, uint64_t whites, uint64_t draws, hg_params** out);
HG_API void hg_params_destroy(hg_params* params);
HG_API hg_status hg_params_get(const hg_params* params, uint64_t* population, uint64_t* whites, uint64_t* draws);
HG_API hg_status hg_support(const hg_params* params, int64_t* lo, int64_t* hi);

/* --- exact rationals ---------------------------------------------------- */
/* Accepts "a", "a/b" and decimals such as "0.1" (converted exactly). */
HG_API hg_status hg_rational_parse(const char* text, hg_rational** out);
HG_API void hg_rational_destroy(hg_rational* value);
/* "a" or "a/b" in lowest terms. */
HG_API hg_status hg_rational_to_string(const hg_rational* value, char** out);
HG_API hg_status hg_rational_to_double(const hg_rational* value, double* out);
/* Natural log; -inf for zero, HG_ERR_DOMAIN for negative values. */
HG_API hg_status hg_rational_log(const hg_rational* value, double* out);
HG_API hg_status hg_rational_compare(const hg_rational* a, const hg_rational* b, int* out);

/* --- distribution ------------------------------------------------------- */
HG_API hg_status hg_pmf(const hg_params* params, int64_t i, hg_rational** out);
/* Log-space pmf; -inf outside the support. */
HG_API hg_status hg_pmf_log(const hg_params* params, int64_t i, double* out);
HG_API hg_status hg_mean(const hg_params* params, hg_rational** out);
HG_API hg_status hg_variance(const hg_params* params, hg_rational** out);
/* Upper: Pr[i >= threshold]. Lower: Pr[i <= threshold]. */
HG_API hg_status hg_tail(const hg_params* params, hg_side side, int64_t threshold, hg_rational** out);
HG_API hg_status hg_tail_log(const hg_params* params, hg_side side, int64_t threshold, double* out);

/* --- symmetries --------------------------------------------------------- */
HG_API hg_status hg_symmetry_apply(hg_symmetry symmetry, const hg_point* in, hg_point* out);

/* --- bounds ------------------------------------------------------------- */
/* Upper: t = k/n - M/N. Lower: t = (nM/N - k)/n. HG_ERR_DEGENERATE if n = 0. */
HG_API hg_status hg_deviation_from_threshold(const hg_params* params, hg_side side, int64_t threshold,
                                             hg_rational** t);
/* Upper: ceil((p+t)n). Lower: floor((p-t)n). */
HG_API hg_status hg_threshold_from_deviation(const hg_params* params, hg_side side, const hg_rational* t,
                                             int64_t* threshold);
HG_API hg_status hg_deviation_bound(const hg_params* params, hg_side side, hg_form form, const hg_rational* t,
                                    hg_bound* out);
HG_API hg_status hg_hoeffding_bound(const hg_rational* p, const hg_rational* t, uint64_t n, hg_bound* out);
HG_API hg_status hg_relaxed_bound(const hg_rational* t, uint64_t n, hg_bound* out);

/* --- Monte Carlo -------------------------------------------------------- */
HG_API hg_status hg_estimate_upper_tail(const hg_params* params, int64_t k, uint64_t seed, uint64_t replicates,
                                        unsigned threads, hg_tail_estimate* out);

/* --- grid verification -------------------------------------------------- */
HG_API hg_status hg_grid_verify(const hg_grid_spec* spec, hg_report** out);
HG_API void hg_report_destroy(hg_report* report);
HG_API hg_status hg_report_summary_get(const hg_report* report, hg_report_summary* out);
HG_API hg_status hg_report_render(const hg_report* report, hg_format format, char** out);
HG_API hg_status hg_report_write(const hg_report* report, hg_format format, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* HYPERGEO_H */
