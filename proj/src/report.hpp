#pragma once

#include "bispherical.hpp"
#include "core.hpp"

namespace casimir {

// Everything the CLI emits for one aspect ratio.  phi_n / phi_p /
// phi_p_grounded are composed from the same delta_phi evaluation, so the
// composition invariants hold exactly.
struct EnergyReport {
  double x = 0.0;
  double z = 0.0;
  double mu1 = 0.0;
  double phi_d = 0.0;            // exact series
  double phi_dr = 0.0;           // exact series
  double phi_n = 0.0;            // phi_d + delta_phi
  double phi_p = 0.0;            // phi_d + phi_dr + delta_phi
  double phi_p_grounded = 0.0;   // 2 phi_d + delta_phi
  double delta_phi = 0.0;        // bispherical
  double delta_phi_short = 0.0;  // asymptotic
  double beta_d = 0.0;
  double beta_dr = 0.0;
  double beta_n = 0.0;
  double beta_p = 0.0;
  int l_max_used = 0;
  int m_max_used = 0;
  double rel_tol = 0.0;
  double wall_time_ms = 0.0;
};

struct EvalOptions {
  double rel_tol = 1e-9;
  int jobs = 0;          // 0: hardware concurrency
  int forced_l_max = 0;  // > 0 disables the adaptive ladder
};

EnergyReport evaluate(double x, const EvalOptions& options = {});

// Method tag for a report field, one of "exact-series", "bispherical",
// "asymptotic", "composed".  Unknown fields map to "composed".
const char* method_tag(const char* field);

}  // namespace casimir
