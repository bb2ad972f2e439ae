#pragma once

#include <vector>

#include "core.hpp"
#include "linalg.hpp"

namespace casimir::bispherical {

// Truncated sphere T-matrix block B^(m), rows l = m .. l_max:
//   diag[l] = (2l+1) cosh(mu1) + sinh(mu1)
//   sub  couples (l, l-1) with -(l-m), super couples (l, l+1) with -(l+m+1).
// Strictly diagonally dominant since cosh(mu1) > 1.
struct TridiagonalBlock {
  int m = 0;
  int l_max = 0;
  std::vector<double> diag;
  std::vector<double> sub;    // size-1 entries, sub[i] couples row i to i-1
  std::vector<double> super;  // super[i] couples row i to i+1

  int size() const { return static_cast<int>(diag.size()); }
};

struct BlockResult {
  int m = 0;
  double contribution = 0.0;  // -Tr log[1 + V delta_T], unweighted
  int l_max_used = 0;
  int logdet_sign = 0;
  double solver_residual = 0.0;
};

struct TruncationPolicy {
  int l_max_initial = 0;       // 0: auto, ceil(10/mu1)
  int l_max_factor = 2;        // ladder growth under adaptivity
  int forced_l_max = 0;        // > 0 disables adaptivity
  double rel_tol = 1e-9;
  int l_max_cap = 40000;
  int m_cap = 40000;
  int jobs = 0;                // 0: hardware concurrency
};

struct ConvergencePoint {
  int l_max;
  double value;
};

struct ConvergenceReport {
  double x = 0.0;
  std::vector<ConvergencePoint> history;
  bool converged = false;
  double achieved_tol = 0.0;
};

struct DeltaPhiResult {
  double value = 0.0;
  int l_max_used = 0;
  int m_max_used = 0;
  ConvergenceReport report;
};

TridiagonalBlock build_block(int m, const core::Geometry& geom, int l_max);

// delta_T = -2 sinh(mu1) B^-1 by per-column tridiagonal sweeps (no
// pivoting, justified by diagonal dominance).  Row-major size() x size().
// Throws NumericalError when the max-norm residual exceeds 1e-10.
linalg::Matrix solve_delta_T(const TridiagonalBlock& block,
                             const core::Geometry& geom);

// V^(m)_ll = 1/(1 - e^(mu1 (2l+1))), in (-1, 0) for all l >= 0.
double v_diagonal(const core::Geometry& geom, int l);

// -ln det[1 + V delta_T] for one azimuthal block, LU with partial
// pivoting; a non-positive determinant aborts with diagnostics.
BlockResult block_contribution(int m, const core::Geometry& geom, int l_max);

// delta Phi = Phi^(N) - Phi^(D) = 1/2 c_0 + sum_{m>=1} c_m.  The m = 0
// contribution is the closed form ln(1-Z); m >= 1 blocks are evaluated at
// a common l_max, doubled until the total is stable to rel_tol.
DeltaPhiResult delta_phi_numeric(double x, const TruncationPolicy& policy = {});

double phi_neumann(double x, const TruncationPolicy& policy = {});
double phi_perfect(double x, const TruncationPolicy& policy = {},
                   bool grounded = false);

}  // namespace casimir::bispherical
