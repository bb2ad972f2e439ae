#pragma once

#include "core.hpp"
#include "linalg.hpp"

namespace casimir::spherical {

// Slow-converging spherical-multipole formulation, kept as an independent
// cross-check of the bispherical solver.  Needs l_max ~ 1/x instead of
// 1/sqrt(x); intended for x >= 0.05.

enum class BoundaryCondition { dirichlet, neumann };

struct SphericalBlock {
  BoundaryCondition bc = BoundaryCondition::dirichlet;
  int m = 0;
  int l_max = 0;
  linalg::Matrix entries;  // rows/cols l, l' = m .. l_max

  SphericalBlock(BoundaryCondition bc_, int m_, int l_max_)
      : bc(bc_), m(m_), l_max(l_max_), entries(l_max_ - m_ + 1) {}
};

// M^(D|m)_{ll'} = (l+l')!/[(l+m)!(l'-m)!] (1/(2(1+x)))^(l+l'+1); the N
// matrix carries an extra l/(l+1).  Entries are assembled in log space;
// throws NumericalError when a log-entry overflows double range.
SphericalBlock spherical_matrix(BoundaryCondition bc, int m, double x,
                                int l_max);

// Phi_m = -1/2 ln det(1 - M), after a power-iteration spectral-radius
// precheck on M.
double phi_block_spherical(const SphericalBlock& block);

// delta Phi = 2 sum'_m [Phi_m^(N) - Phi_m^(D)] at fixed truncation.
double delta_phi_spherical(double x, int l_max);

}  // namespace casimir::spherical
