#include "core.hpp"

#include <cmath>

#include "errors.hpp"
#include "specfun.hpp"

namespace casimir::core {

Geometry geometry_from_aspect_ratio(double x) {
  if (!(x > 0.0)) {
    throw DomainError("geometry: aspect ratio must be positive");
  }
  double mu1;
  if (x < 1e-8) {
    // acosh(1+x) loses digits through -ln Z at tiny x; the next omitted
    // series term (3x^2/160) is below 1e-17 relative here.
    mu1 = std::sqrt(2.0 * x) * (1.0 - x / 12.0);
  } else {
    mu1 = std::log1p(x + std::sqrt(x * (2.0 + x)));
  }
  return Geometry{x, std::exp(-mu1), mu1};
}

namespace {

struct KahanSum {
  double sum = 0.0;
  double comp = 0.0;
  void add(double term) {
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// -1/2 sum_{l>=l0} w(l) ln(1 - Z^(2l+1)) with w = 2l+1 or 1.
double log_series(const Geometry& geom, const SeriesTolerance& tol,
                  std::int64_t l0, int exponent_offset, bool weighted) {
  const double z = geom.z;
  const double tail_scale = 1.0 / (1.0 - z);
  KahanSum acc;
  for (std::int64_t l = l0;; ++l) {
    if (l - l0 >= tol.max_terms) {
      throw CapExceededError("energy series exceeded max_terms");
    }
    const double zp = std::exp(-geom.mu1 * static_cast<double>(2 * l + 1 + exponent_offset));
    const double w = weighted ? static_cast<double>(2 * l + 1) : 1.0;
    acc.add(w * std::log1p(-zp));
    if (w * zp * tail_scale < tol.rel_tol * std::abs(acc.sum)) break;
  }
  return -0.5 * acc.sum;
}

}  // namespace

double phi_dirichlet(const Geometry& geom, const SeriesTolerance& tol) {
  return log_series(geom, tol, 0, 0, true);
}

double phi0_dirichlet(const Geometry& geom, const SeriesTolerance& tol) {
  return log_series(geom, tol, 0, 0, false);
}

double phi0_neumann(const Geometry& geom, const SeriesTolerance& tol) {
  return log_series(geom, tol, 0, 2, false);
}

double phi_drude(const Geometry& geom, const SeriesTolerance& tol) {
  const double z = geom.z;
  const double tail_scale = 1.0 / (1.0 - z);
  KahanSum acc;    // l >= 1 weighted series
  KahanSum inner;  // monopole-removal series inside the logarithm
  for (std::int64_t l = 1;; ++l) {
    if (l >= tol.max_terms) {
      throw CapExceededError("phi_drude series exceeded max_terms");
    }
    const double zp = std::exp(-geom.mu1 * static_cast<double>(2 * l + 1));
    const double w = static_cast<double>(2 * l + 1);
    acc.add(w * std::log1p(-zp));
    inner.add(zp * (-std::expm1(-geom.mu1 * static_cast<double>(2 * l))) /
              (1.0 - zp));
    if (w * zp * tail_scale < tol.rel_tol * std::abs(acc.sum)) break;
  }
  const double monopole = std::log1p(-(1.0 - z * z) * inner.sum);
  return -0.5 * (acc.sum + monopole);
}

double phi_pfa(Model model, double x) {
  if (!(x > 0.0)) throw DomainError("phi_pfa: aspect ratio must be positive");
  const double scalar = specfun::zeta3() / (8.0 * x);
  return model == Model::perfect ? 2.0 * scalar : scalar;
}

}  // namespace casimir::core
