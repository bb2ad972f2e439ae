/* C API for the sphere-plate classical Casimir library.
 *
 * All entry points return a casimir_status; outputs go through pointers.
 * Options travel in an opaque handle so the ABI can grow without breaking
 * callers.  The library is thread-safe as long as each options handle is
 * used by one thread at a time.
 */
#ifndef CASIMIR_H
#define CASIMIR_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum casimir_status {
  CASIMIR_OK = 0,
  CASIMIR_ERR_DOMAIN = 1,       /* invalid argument (x <= 0, bad l_max, ...) */
  CASIMIR_ERR_CONVERGENCE = 2,  /* tolerance not reached */
  CASIMIR_ERR_CAP = 3,          /* truncation/iteration cap hit */
  CASIMIR_ERR_NUMERICAL = 4,    /* determinant sign, residual, overflow */
  CASIMIR_ERR_INVALID_HANDLE = 5
} casimir_status;

typedef enum casimir_model {
  CASIMIR_MODEL_DIRICHLET = 0,
  CASIMIR_MODEL_DRUDE = 1,
  CASIMIR_MODEL_NEUMANN = 2,
  CASIMIR_MODEL_PERFECT = 3
} casimir_model;

typedef struct casimir_options casimir_options;

casimir_options* casimir_options_new(void);
void casimir_options_free(casimir_options* opt);
casimir_status casimir_options_set_rel_tol(casimir_options* opt, double rel_tol);
casimir_status casimir_options_set_jobs(casimir_options* opt, int jobs);
/* l_max > 0 forces a fixed truncation; 0 restores adaptivity. */
casimir_status casimir_options_set_l_max(casimir_options* opt, int l_max);

typedef struct casimir_report {
  double x;
  double z;
  double mu1;
  double phi_d;
  double phi_dr;
  double phi_n;
  double phi_p;
  double phi_p_grounded;
  double delta_phi;
  double delta_phi_short;
  double beta_d;
  double beta_dr;
  double beta_n;
  double beta_p;
  int l_max_used;
  int m_max_used;
  double rel_tol;
  double wall_time_ms;
} casimir_report;

/* Full evaluation at aspect ratio x = d/R; opt may be NULL for defaults. */
casimir_status casimir_evaluate(double x, const casimir_options* opt,
                                casimir_report* out);

/* delta Phi = Phi^(N) - Phi^(D) from the bispherical solver.  l_max_used
 * and m_max_used may be NULL. */
casimir_status casimir_delta_phi(double x, const casimir_options* opt,
                                 double* out, int* l_max_used,
                                 int* m_max_used);

/* Short-distance channels. */
casimir_status casimir_delta_phi_short(double x, double* out);
casimir_status casimir_delta_phi_as(double x, double* out);
casimir_status casimir_leading_correction(double x, double* out);

/* Exact-series energies (D, Dr) and composed N/P channels; N and P run the
 * bispherical solver internally. */
casimir_status casimir_phi_exact(casimir_model model, double x,
                                 const casimir_options* opt, double* out);

/* zeta(3)/(8x) per scalar channel, doubled for the perfect conductor. */
casimir_status casimir_phi_pfa(casimir_model model, double x, double* out);

/* Short-distance expansions; D and Dr through mu^2, P leading-order only. */
casimir_status casimir_phi_short(casimir_model model, double x, double* out);

/* Static message for a status code; never NULL.  For the detailed message
 * of the most recent failure on the calling thread use
 * casimir_last_error_message. */
const char* casimir_strerror(casimir_status status);
const char* casimir_last_error_message(void);

#ifdef __cplusplus
}
#endif

#endif /* CASIMIR_H */
