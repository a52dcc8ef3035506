/*
 * multiwave C API: opaque handles + status codes over the spectral multipoint
 * wave solver. All functions return mw_status unless noted; on failure the
 * thread-local message from mw_last_error() describes the problem.
 */
#ifndef MULTIWAVE_CAPI_H
#define MULTIWAVE_CAPI_H

#include <stddef.h>
#include <stdint.h>

#if defined(__cplusplus)
extern "C" {
#endif

typedef enum mw_status {
    MW_OK = 0,
    MW_ERR_CONFIG = 1,    /* configuration / validation problems */
    MW_ERR_NUMERICAL = 2, /* singular modes, nonconvergence, blow-up */
    MW_ERR_INVALID = 3,   /* bad arguments to an API call */
    MW_ERR_IO = 4,
    MW_ERR_INTERNAL = 5
} mw_status;

const char* mw_version(void);
/* Message for the most recent failure on this thread ("" if none). */
const char* mw_last_error(void);

/* ---- scenarios -------------------------------------------------------- */

typedef struct mw_run_options {
    const char* out_dir;  /* NULL: use the config's output dir */
    uint64_t seed;        /* used only when has_seed != 0 */
    int has_seed;
    int threads;          /* <= 0: single-threaded */
    int verify;           /* nonzero: run the residual verifier after solves */
} mw_run_options;

/* Executes a scenario config file; kind may be NULL to use the config's own
 * scenario kind, or one of: solve-linear solve-nlw check-admissible
 * verify-dispersive verify-strichartz oracle-compare. */
mw_status mw_run_scenario(const char* config_path, const char* kind, const mw_run_options* options);
mw_status mw_run_scenario_text(const char* config_text, const char* kind,
                               const mw_run_options* options);

/* ---- operator algebra -------------------------------------------------- */

typedef struct mw_operator mw_operator;

/* hdim x hdim complex Hermitian matrix, row-major, split re/im (im may be
 * NULL for a real matrix). Fails with MW_ERR_CONFIG when the matrix is not
 * Hermitian positive definite. */
mw_status mw_operator_create(int hdim, const double* re, const double* im, mw_operator** out);
/* -(a u')' + c u on (0,1), Dirichlet ends; constant coefficients. */
mw_status mw_operator_create_sturm_liouville(double a, double c, int points, mw_operator** out);
void mw_operator_destroy(mw_operator* op);

int mw_operator_dim(const mw_operator* op);
double mw_operator_positivity_margin(const mw_operator* op);
mw_status mw_operator_eigenvalues(const mw_operator* op, double* out /* len hdim */);
/* A^theta, row-major re/im buffers of length hdim*hdim. */
mw_status mw_operator_fractional_power(const mw_operator* op, double theta, double* out_re,
                                       double* out_im);

/* ---- exponent algebra (rationals as num/den; den == 0 means infinity) -- */

typedef struct mw_rational {
    int64_t num;
    int64_t den;
} mw_rational;

typedef struct mw_admissibility {
    int admissible;
    int sharp;
    int endpoint;
    int excluded_triple;
} mw_admissibility;

mw_status mw_classify_pair(int n, mw_rational q, mw_rational r, mw_admissibility* out);
mw_status mw_beta_exponent(int n, mw_rational r, mw_rational rt, mw_rational* out);
mw_status mw_gap_check(int n, mw_rational gamma, mw_rational q, mw_rational r, mw_rational qt,
                       mw_rational rt, int* first_holds, int* second_holds,
                       mw_rational* residual_first, mw_rational* residual_second);
/* gamma, k0, q0, r0 of the local-existence exponent set for n >= 4;
 * r0_in_range reports whether r0 >= 2 (it never is; the flag is emitted so
 * callers can surface the contradiction). */
mw_status mw_local_existence_constants(int n, mw_rational* gamma, mw_rational* k0, mw_rational* q0,
                                mw_rational* r0, int* r0_in_range);

/* ---- fields + MWF1 snapshots ------------------------------------------ */

typedef struct mw_field mw_field;

mw_status mw_field_create(int ndim, const int* points, const double* box, int hdim,
                          mw_field** out);
void mw_field_destroy(mw_field* f);
size_t mw_field_value_count(const mw_field* f); /* spatial points * hdim */
int mw_field_hdim(const mw_field* f);
/* values interleaved (re, im), length 2 * value_count */
mw_status mw_field_set_values(mw_field* f, const double* interleaved, size_t count);
mw_status mw_field_get_values(const mw_field* f, double* interleaved, size_t count);
mw_status mw_field_save(const mw_field* f, const char* path);
/* Box lengths are not stored in MWF1; supply them on load (ndim entries). */
mw_status mw_field_load(const char* path, const double* box, int ndim, mw_field** out);

/* ---- linear multipoint solve ------------------------------------------ */

typedef struct mw_trajectory mw_trajectory;

typedef struct mw_solve_stats {
    size_t mode_count;
    double min_abs_det;
    double max_inv_det_norm;
    double pde_residual;     /* filled when verify != 0 */
    double cond_u_residual;
    double cond_ut_residual;
    double energy_drift;
} mw_solve_stats;

/* Solves u_tt - Lap u + A u = 0 (no source through this entry point) with
 * multipoint conditions alpha/beta/lambda (m entries each; alpha/beta
 * interleaved re,im of length 2m). Samples `time_steps`+1 snapshots on
 * [0, horizon]. */
mw_status mw_solve_linear(const mw_field* phi, const mw_field* psi, const mw_operator* op,
                          const double* alpha, const double* beta, const double* lambda,
                          int m, double horizon, int time_steps, int threads, int verify,
                          mw_trajectory** out, mw_solve_stats* stats);

void mw_trajectory_destroy(mw_trajectory* t);
size_t mw_trajectory_samples(const mw_trajectory* t);
double mw_trajectory_time(const mw_trajectory* t, size_t i);
/* Physical-space snapshot of u (deriv == 0) or u_t (deriv != 0). */
mw_status mw_trajectory_snapshot(const mw_trajectory* t, size_t i, int deriv, mw_field** out);

#if defined(__cplusplus)
}
#endif

#endif /* MULTIWAVE_CAPI_H */
