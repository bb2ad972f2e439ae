#include "asymptotics.hpp"

#include <cmath>

#include "errors.hpp"
#include "quadrature.hpp"
#include "specfun.hpp"

namespace casimir::asymptotics {

namespace {

constexpr double kPi = 3.141592653589793238462643;

using specfun::PolylogOrder;

// Li_2(a y) - Li_2(y) for a = l/(l+1) close to 1, where the direct
// difference of two ~O(1) polylog values cancels to roundoff.  Using
// Li_2'(t) = -ln(1-t)/t and the substitution t = 1 - e^u,
//   Li_2(a y) - Li_2(y) = int_{ln(1-y)}^{ln(1-a y)} u e^u / (1 - e^u) du,
// a single-signed smooth integrand with no cancellation.  y = e^-w.
double li2_difference_large_l(double l, double w) {
  const double y = std::exp(-w);
  const double one_minus_y = -std::expm1(-w);
  const double uy = std::log(one_minus_y);
  // The integration interval [uy, ua] is narrow for large l; forming ua
  // and uy separately would put ~eps*|uy| of rounding noise into the
  // interval *length*, which the result is proportional to.  Compute the
  // length once via log1p and map the interval to [0, 1]; rounding in uy
  // then only shifts the interval rigidly, a second-order effect.
  const double width = std::log1p(y / ((l + 1.0) * one_minus_y));
  auto g = [uy, width](double s) {
    const double u = uy + width * s;
    if (u == 0.0) return -1.0;  // limit of -u e^u / expm1(u)
    // 1 - e^u via expm1: u approaches 0- at large w and the naive form
    // cancels.
    return -u * std::exp(u) / std::expm1(u);
  };
  // g is single-signed and smooth, so a midpoint sample sets a sensible
  // relative tolerance; a fixed absolute one would act as noise on the
  // outer integrand once multiplied by the huge outer panel widths.
  const double tol = 1e-14 * std::abs(g(0.5)) + 1e-300;
  return width * quadrature::integrate(g, 0.0, 1.0, tol, 32);
}

}  // namespace

double delta_phi_m_half(int m, double x, const QuadratureSpec& q) {
  if (m < 1) throw DomainError("delta_phi_m_half: m must be >= 1");
  if (!(x > 0.0)) throw DomainError("delta_phi_m_half: x must be positive");
  const double md = static_cast<double>(m);
  const double cut = q.tail_cutoff_exponent;
  // Substitution l = u^2 removes the 1/sqrt(l) endpoint singularity:
  //   integral = 1/(2 sqrt(pi)) int_0^inf du { Li - Li }(l = u^2).
  auto integrand = [md, x](double u) {
    if (u <= 0.0) return 0.0;
    const double l = u * u;
    const double w = 2.0 * x * l + md * md / l;
    if (w > 700.0) return 0.0;
    const double e = std::exp(-w);
    // The l/(l+1) factor stays whole inside the polylog argument; its
    // Taylor expansion makes the l-integral infrared divergent.
    return specfun::polylog(PolylogOrder::three_halves, l / (l + 1.0) * e) -
           specfun::polylog(PolylogOrder::three_halves, e);
  };
  const double u_hi = std::sqrt(0.5 * cut / x);  // e^(-2xl) below cutoff
  auto done = [u_hi](double b) { return b >= u_hi; };
  const double w0 = std::max(md / std::sqrt(cut), 1e-3);
  const double value = quadrature::integrate_semi_infinite(
      integrand, 0.0, w0, done, q.abs_tol * 2.0 * std::sqrt(kPi),
      q.panel_order);
  return value / (2.0 * std::sqrt(kPi));
}

double delta_phi_short(double x, const QuadratureSpec& q,
                       const core::SeriesTolerance& tol) {
  const core::Geometry geom = core::geometry_from_aspect_ratio(x);
  const double m0 = core::phi0_neumann(geom, tol) - core::phi0_dirichlet(geom, tol);
  double sum = m0;
  int quiet = 0;
  for (int m = 1; m < 100000; ++m) {
    const double c = 2.0 * delta_phi_m_half(m, x, q);
    sum += c;
    // Terms only decay like e^(-2m sqrt(2x)) asymptotically, so one
    // negligible term is not yet a stopping signal.
    if (std::abs(c) < tol.rel_tol * std::abs(sum)) {
      if (++quiet >= 3) return sum;
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("delta_phi_short: azimuthal sum did not converge");
}

double delta_phi_as(double x, const QuadratureSpec& q) {
  if (!(x > 0.0)) throw DomainError("delta_phi_as: x must be positive");
  auto integrand = [x](double l) {
    if (l <= 0.0) return 0.0;
    const double w = 2.0 * x * l;
    if (w > 700.0) return 0.0;
    if (l > 999.0) return li2_difference_large_l(l, w);
    const double e = std::exp(-w);
    return specfun::polylog(PolylogOrder::two, l / (l + 1.0) * e) -
           specfun::polylog(PolylogOrder::two, e);
  };
  const double l_hi = 0.5 * q.tail_cutoff_exponent / x;
  auto done = [l_hi](double b) { return b >= l_hi; };
  return 0.25 * quadrature::integrate_semi_infinite(integrand, 0.0, 1.0, done,
                                                    4.0 * q.abs_tol,
                                                    q.panel_order);
}

double leading_correction(double x) {
  if (!(x > 0.0)) throw DomainError("leading_correction: x must be positive");
  const double lx = std::log(x);
  return -lx * lx / 16.0;
}

double phi_dirichlet_short(double x) {
  const double mu = core::geometry_from_aspect_ratio(x).mu1;
  return specfun::zeta3() / (4.0 * mu * mu) - std::log(mu) / 24.0 -
         1.0 / 16.0 + ShortDistanceConstants::gamma0p +
         7.0 / 5760.0 * mu * mu;
}

double phi_drude_short(double x) {
  const double mu = core::geometry_from_aspect_ratio(x).mu1;
  const double lmu = std::log(mu);
  const double g1 = ShortDistanceConstants::gamma1;
  if (ShortDistanceConstants::gamma1 - lmu <= 0.0) {
    throw DomainError("phi_drude_short: expansion invalid, ln(mu) >= gamma1");
  }
  return phi_dirichlet_short(x) - 0.5 * std::log(g1 - lmu) -
         (lmu - ShortDistanceConstants::gamma2) / (lmu - g1) * mu * mu / 12.0;
}

double phi_perfect_short(double x) {
  if (!(x > 0.0)) throw DomainError("phi_perfect_short: x must be positive");
  const double lx = std::log(x);
  return specfun::zeta3() / (4.0 * x) - lx * lx / 16.0;
}

double beta(core::Model model, double x, double delta_phi, double phi_exact_d,
            double phi_exact_dr) {
  const double inv_x = 1.0 / x;
  const double beta_d = 8.0 * phi_exact_d / specfun::zeta3() - inv_x;
  switch (model) {
    case core::Model::dirichlet:
      return beta_d;
    case core::Model::drude:
      return 8.0 * phi_exact_dr / specfun::zeta3() - inv_x;
    case core::Model::neumann:
      return beta_d + 8.0 * delta_phi / specfun::zeta3();
    case core::Model::perfect: {
      const double beta_dr = 8.0 * phi_exact_dr / specfun::zeta3() - inv_x;
      return 0.5 * (beta_dr + beta_d + 8.0 * delta_phi / specfun::zeta3());
    }
  }
  throw DomainError("beta: unknown model");
}

}  // namespace casimir::asymptotics
