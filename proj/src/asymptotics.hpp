#pragma once

#include "core.hpp"

namespace casimir::asymptotics {

// Fitted constants of the short-distance D / Dr expansions.
struct ShortDistanceConstants {
  static constexpr double gamma0p = 0.0874485;
  static constexpr double gamma1 = 1.270362;
  static constexpr double gamma2 = 1.35369;
};

struct QuadratureSpec {
  int panel_order = 32;
  double tail_cutoff_exponent = 40.0;  // stop once exp factor < e^-cutoff
  double abs_tol = 1e-11;
};

// Per-m short-distance integral
//   1/2 int_0^inf dl/sqrt(4 pi l)
//     { Li_{3/2}[l/(l+1) e^(-2xl - m^2/l)] - Li_{3/2}[e^(-2xl - m^2/l)] }
// Strictly negative for all m >= 1, x > 0.
double delta_phi_m_half(int m, double x, const QuadratureSpec& q = {});

// Small-distance estimate of delta Phi = Phi^(N) - Phi^(D): the exact m=0
// series difference plus 2 sum_{m>0} delta_phi_m_half.
double delta_phi_short(double x, const QuadratureSpec& q = {},
                       const core::SeriesTolerance& tol = {});

// x->0 envelope  1/4 int_0^inf dl [Li_2(l/(l+1) e^-2xl) - Li_2(e^-2xl)].
double delta_phi_as(double x, const QuadratureSpec& q = {});

// Leading term of delta_phi_as: -ln^2(x)/16.
double leading_correction(double x);

// Short-distance expansions in mu = -ln Z, through the mu^2 term.
double phi_dirichlet_short(double x);
double phi_drude_short(double x);

// Leading-order only: zeta(3)/(4x) - ln^2(x)/16.
double phi_perfect_short(double x);

// Additive deviation from PFA, Phi = (zeta(3)/8)(1/x + beta) per scalar
// channel; N and P composed from delta_phi.
double beta(core::Model model, double x, double delta_phi, double phi_exact_d,
            double phi_exact_dr);

}  // namespace casimir::asymptotics
