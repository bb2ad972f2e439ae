#include "spherical.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "errors.hpp"
#include "specfun.hpp"

namespace casimir::spherical {

SphericalBlock spherical_matrix(BoundaryCondition bc, int m, double x,
                                int l_max) {
  if (m < 0) throw DomainError("spherical_matrix: m must be non-negative");
  if (l_max < m) throw DomainError("spherical_matrix: l_max must be >= m");
  if (!(x > 0.0)) throw DomainError("spherical_matrix: x must be positive");

  SphericalBlock block(bc, m, l_max);
  const int n = l_max - m + 1;
  const double log_scale = std::log(2.0 * (1.0 + x));
  for (int i = 0; i < n; ++i) {
    const int l = m + i;
    for (int j = 0; j < n; ++j) {
      const int lp = m + j;
      double log_entry = specfun::log_factorial(l + lp) -
                         specfun::log_factorial(l + m) -
                         specfun::log_factorial(lp - m) -
                         (l + lp + 1) * log_scale;
      if (log_entry > 700.0) {
        throw NumericalError(
            "spherical_matrix: entry overflow at l=" + std::to_string(l) +
            ", l'=" + std::to_string(lp) + "; l_max too large for x=" +
            std::to_string(x));
      }
      double entry = std::exp(log_entry);
      if (bc == BoundaryCondition::neumann) {
        entry *= static_cast<double>(l) / (l + 1.0);
      }
      block.entries(i, j) = entry;
    }
  }
  return block;
}

namespace {

// Largest-eigenvalue estimate by 50 power-iteration steps; M has
// non-negative entries, so plain iteration converges to the Perron root.
double spectral_radius_estimate(const linalg::Matrix& m) {
  const int n = m.n;
  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  double lambda = 0.0;
  for (int step = 0; step < 50; ++step) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
      w[i] = s;
    }
    double norm = 0.0;
    for (double wi : w) norm += wi * wi;
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    lambda = norm;
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  return lambda;
}

}  // namespace

double phi_block_spherical(const SphericalBlock& block) {
  const double radius = spectral_radius_estimate(block.entries);
  if (!(radius < 1.0)) {
    throw NumericalError(
        "phi_block_spherical: spectral radius estimate " +
        std::to_string(radius) + " >= 1, ln det(1-M) undefined");
  }
  const int n = block.entries.n;
  linalg::Matrix a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a(i, j) = (i == j ? 1.0 : 0.0) - block.entries(i, j);
    }
  }
  const linalg::LogDet det = linalg::lu_log_det(a);
  if (det.sign != 1) {
    throw NumericalError("phi_block_spherical: det(1-M) <= 0");
  }
  return -0.5 * det.value;
}

double delta_phi_spherical(double x, int l_max) {
  double total = 0.0;
  for (int m = 0; m <= l_max; ++m) {
    const double phi_n = phi_block_spherical(
        spherical_matrix(BoundaryCondition::neumann, m, x, l_max));
    const double phi_d = phi_block_spherical(
        spherical_matrix(BoundaryCondition::dirichlet, m, x, l_max));
    const double w = (m == 0) ? 1.0 : 2.0;
    total += w * (phi_n - phi_d);
    if (m > 0 && std::abs(w * (phi_n - phi_d)) < 1e-14 * std::abs(total)) {
      break;
    }
  }
  return total;
}

}  // namespace casimir::spherical
