/*
 * ylat: exact rank generating functions of intervals in Young's lattice.
 *
 * C interface to the shared library.  Every function returns a ylat_status;
 * results come back through out-parameters.  Handles are opaque and owned by
 * the caller, who releases them with the matching *_free function.  Strings
 * returned through char** are heap-allocated and released with
 * ylat_string_free.
 *
 * On any status other than YLAT_OK, ylat_last_error() returns a description
 * of the failure for the calling thread.
 *
 * Thread safety: every function may be called concurrently from any number
 * of threads.  Internal memo tables are shared process-wide and guarded by
 * reader/writer locks; handles themselves are immutable after creation.
 *
 * Partitions are passed as comma-separated decimal parts ("5,5,4,2,2"); the
 * empty string (or NULL) is the empty partition.
 */
#ifndef YLAT_H
#define YLAT_H

#include <stddef.h>

#if defined(YLAT_BUILDING_LIBRARY)
#  define YLAT_API __attribute__((visibility("default")))
#else
#  define YLAT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ylat_status {
  YLAT_OK = 0,
  YLAT_ERR_INVALID_ARGUMENT = 1, /* unparsable input or parameter out of range */
  YLAT_ERR_PRECONDITION = 2,     /* e.g. mu not contained in lambda */
  YLAT_ERR_ARITHMETIC = 3,       /* exactness check failed: a library bug */
  YLAT_ERR_INTERNAL = 4
} ylat_status;

typedef struct ylat_poly ylat_poly;         /* polynomial in y */
typedef struct ylat_rational ylat_rational; /* exact fraction */
typedef struct ylat_series ylat_series;     /* truncated series in x_1..x_k */
typedef struct ylat_table ylat_table;       /* convergence table */
typedef struct ylat_report ylat_report;     /* outcome of a verification sweep */

YLAT_API const char *ylat_version(void);
YLAT_API const char *ylat_last_error(void);
YLAT_API const char *ylat_status_name(ylat_status status);
YLAT_API void ylat_string_free(char *s);

/* ---- partitions --------------------------------------------------------- */

/* *out = 1 if mu <= lambda in containment order, else 0. */
YLAT_API ylat_status ylat_contains(const char *mu, const char *lambda, int *out);
/* Canonical form of a partition string (zero parts stripped). */
YLAT_API ylat_status ylat_partition_normalize(const char *text, char **out);

/* ---- rank polynomials --------------------------------------------------- */

/* P_{mu,lambda}(y). */
YLAT_API ylat_status ylat_rankpoly(const char *mu, const char *lambda, ylat_poly **out);
/* [n+k choose k]_y */
YLAT_API ylat_status ylat_gaussian(int n, int k, ylat_poly **out);
/* P_lambda(y^2) */
YLAT_API ylat_status ylat_poincare(const char *lambda, ylat_poly **out);
/* #[mu, lambda] as a decimal string. */
YLAT_API ylat_status ylat_interval_count(const char *mu, const char *lambda, char **out);

/* -1 for the zero polynomial. */
YLAT_API long ylat_poly_degree(const ylat_poly *p);
/* Coefficient of y^i as a decimal string. */
YLAT_API ylat_status ylat_poly_coeff(const ylat_poly *p, size_t i, char **out);
/* "1 + y + 2*y^2 + y^3" */
YLAT_API ylat_status ylat_poly_to_text(const ylat_poly *p, char **out);
/* ["1","1","2","1"] */
YLAT_API ylat_status ylat_poly_to_json(const ylat_poly *p, char **out);
YLAT_API ylat_status ylat_poly_from_json(const char *json, ylat_poly **out);
YLAT_API int ylat_poly_equal(const ylat_poly *a, const ylat_poly *b);
YLAT_API void ylat_poly_free(ylat_poly *p);

/* ---- series ------------------------------------------------------------- */

YLAT_API ylat_status ylat_qk_direct(size_t k, long trunc, ylat_series **out);
YLAT_API ylat_status ylat_qk_recursive(size_t k, long trunc, ylat_series **out);
/* Q_k * D_k truncated; *max_degree receives the highest nonzero degree. */
YLAT_API ylat_status ylat_dk_product(size_t k, long trunc, ylat_series **out, long *max_degree);
/* C^m_{k,n} for n = 0..trunc as a JSON array of decimal strings. */
YLAT_API ylat_status ylat_qk_xm_json(size_t k, int m, long trunc, char **out);

YLAT_API size_t ylat_series_nvars(const ylat_series *s);
YLAT_API long ylat_series_trunc(const ylat_series *s);
YLAT_API size_t ylat_series_term_count(const ylat_series *s);
/* [{"exponents":[..],"coeff":[..]}, ...] in graded lex order. */
YLAT_API ylat_status ylat_series_to_json(const ylat_series *s, char **out);
YLAT_API ylat_status ylat_series_from_json(const char *json, size_t nvars, long trunc, ylat_series **out);
/* Equality after truncating both to the smaller order. */
YLAT_API int ylat_series_equal(const ylat_series *a, const ylat_series *b);
YLAT_API void ylat_series_free(ylat_series *s);

/* ---- counts and constants ----------------------------------------------- */

YLAT_API ylat_status ylat_c_kn(size_t k, long n, char **out);
YLAT_API ylat_status ylat_C_kn(size_t k, long n, int m, char **out);
YLAT_API ylat_status ylat_A_kn(size_t k, long n, ylat_rational **out);
YLAT_API ylat_status ylat_A_le_kn(size_t k, long n, ylat_rational **out);
YLAT_API ylat_status ylat_b_recursive(size_t k, int m, ylat_rational **out);
YLAT_API ylat_status ylat_b_direct(size_t k, int m, ylat_rational **out);
YLAT_API ylat_status ylat_gk(size_t k, ylat_rational **out);

/* "num/den", or "num" for integers. */
YLAT_API ylat_status ylat_rational_to_string(const ylat_rational *q, char **out);
YLAT_API ylat_status ylat_rational_numerator(const ylat_rational *q, char **out);
YLAT_API ylat_status ylat_rational_denominator(const ylat_rational *q, char **out);
/* Display-only decimal rendering. */
YLAT_API ylat_status ylat_rational_to_decimal(const ylat_rational *q, char **out);
YLAT_API ylat_status ylat_rational_parse(const char *text, ylat_rational **out);
YLAT_API int ylat_rational_equal(const ylat_rational *a, const ylat_rational *b);
YLAT_API void ylat_rational_free(ylat_rational *q);

/* Rows n = n_start, n_start+step, ..., <= n_end (rows with c_{k,n} = 0 are skipped). */
YLAT_API ylat_status ylat_convergence_table(size_t k, long n_start, long n_end, long step, ylat_table **out);
YLAT_API size_t ylat_table_rows(const ylat_table *t);
/* Exact ratio A_{k,n} / (G_k n^k) of row i. */
YLAT_API ylat_status ylat_table_ratio(const ylat_table *t, size_t row, ylat_rational **out);
/* header n,c,C,A_num,A_den,ratio_decimal */
YLAT_API ylat_status ylat_table_to_csv(const ylat_table *t, char **out);
YLAT_API ylat_status ylat_table_to_json(const ylat_table *t, char **out);
YLAT_API void ylat_table_free(ylat_table *t);

/* ---- verification ------------------------------------------------------- */

typedef struct ylat_verify_params {
  long k;       /* recursion, xm, denominator; max k for decomposition */
  long m;       /* xm; max m for decomposition */
  long trunc;   /* recursion, xm, denominator */
  long max_sum; /* bkm */
  long max_n;   /* gaussian */
  long max_k;   /* gaussian */
  long max_rank; /* lemmas */
} ylat_verify_params;

/* Defaults: k=2, m=0, trunc=8, max_sum=8, max_n=6, max_k=6, max_rank=8. */
YLAT_API void ylat_verify_params_init(ylat_verify_params *params);

/*
 * Targets: "recursion", "xm", "denominator", "decomposition", "bkm",
 * "gaussian", "lemmas".  An unknown target is YLAT_ERR_INVALID_ARGUMENT.
 * A sweep that finds a counterexample still returns YLAT_OK; inspect the
 * report.
 */
YLAT_API ylat_status ylat_verify(const char *target, const ylat_verify_params *params, ylat_report **out);
YLAT_API int ylat_report_ok(const ylat_report *r);
YLAT_API size_t ylat_report_checks(const ylat_report *r);
YLAT_API const char *ylat_report_summary(const ylat_report *r);
/* Empty string when the sweep succeeded. */
YLAT_API const char *ylat_report_counterexample(const ylat_report *r);
YLAT_API void ylat_report_free(ylat_report *r);

#ifdef __cplusplus
}
#endif

#endif /* YLAT_H */
