#ifndef DKPOSC_H
#define DKPOSC_H

/* C surface of the oscillator spectrum library. All functions return a
 * status code; every out-parameter is written only on DKPOSC_OK. Handles
 * are opaque and must be released with the matching destroy call. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dkposc_status {
  DKPOSC_OK = 0,
  DKPOSC_INVALID_PARAMETER = 1,
  DKPOSC_NO_ROOT = 2,
  DKPOSC_NUMERIC_FAILURE = 3,
  DKPOSC_ORACLE_DISAGREEMENT = 4,
  DKPOSC_BAD_HANDLE = 5,
  DKPOSC_BAD_FIELD = 6
} dkposc_status;

/* Parameter set plus quantum numbers. */
typedef struct dkposc_model dkposc_model;
/* Result of a solve: the real roots of the quantization condition. */
typedef struct dkposc_solution dkposc_solution;

/* Defaults: M=1, omega=1, Omega=0, alpha=1, A=0, B=0, k=0, phi=0, n=0, m=0. */
dkposc_model* dkposc_model_create(void);
void dkposc_model_destroy(dkposc_model* m);

/* field is one of: M, omega, Omega, alpha, A, B, k, phi.
 * Values are validated lazily at solve/eval time. */
dkposc_status dkposc_model_set(dkposc_model* m, const char* field,
                               double value);
dkposc_status dkposc_model_get(const dkposc_model* m, const char* field,
                               double* out);
dkposc_status dkposc_model_set_quantum(dkposc_model* m, int n, int mq);

dkposc_status dkposc_solve(const dkposc_model* m, dkposc_solution** out);
void dkposc_solution_destroy(dkposc_solution* s);
/* Number of roots found, or -1 on a bad handle. */
int dkposc_solution_count(const dkposc_solution* s);
/* branch is +1/-1; flagged is 1 for a tangency candidate. Any out pointer
 * may be NULL to skip that value. */
dkposc_status dkposc_solution_root(const dkposc_solution* s, int index,
                                   double* E, double* residual, int* branch,
                                   int* flagged);

/* Normalized radial function, its derivative and the charge density at r.
 * E should be a root; any out pointer may be NULL. */
dkposc_status dkposc_wavefunction_eval(const dkposc_model* m, double E,
                                       double r, double* phi1, double* dphi1,
                                       double* jt);

/* Value of the quantization function g(E). */
dkposc_status dkposc_quantization_residual(const dkposc_model* m, double E,
                                           double* out);

/* Finite-difference cross-check of a closed-form energy; points <= 0
 * selects the default grid size. */
dkposc_status dkposc_oracle_energy(const dkposc_model* m, double E_reference,
                                   int points, double* E_out);

/* Radius that contains the support of the mode at energy E; useful as a
 * default plotting range. */
dkposc_status dkposc_wavefunction_extent(const dkposc_model* m, double E,
                                         double* r_max);

/* Runs the self-check battery (full=0 is the quick tier). Returns DKPOSC_OK
 * even when checks fail; *passed is 1 only if every check passed. *report
 * receives a heap JSON document; release it with dkposc_string_free. */
dkposc_status dkposc_verify(int full, unsigned long long seed, int* passed,
                            char** report);
void dkposc_string_free(char* s);

/* Message for the most recent failure on this thread; never NULL. */
const char* dkposc_last_error(void);

const char* dkposc_version(void);

#ifdef __cplusplus
}
#endif

#endif /* DKPOSC_H */
