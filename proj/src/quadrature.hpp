#pragma once

#include <functional>
#include <vector>

namespace casimir::quadrature {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Nodes/weights by Newton iteration on the Legendre polynomial.
const GaussLegendreRule& gauss_legendre(int order);

// Adaptive panel integration on [a,b]: a panel is accepted when the
// whole-panel rule and its two-half refinement agree to abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int order);

// Semi-infinite integral starting from `a` with panels of doubling width
// (first panel [a, a+w0]); panels are added until `done(b)` says the
// integrand is negligible past b.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, double w0,
                               const std::function<bool(double)>& done,
                               double abs_tol, int order);

}  // namespace casimir::quadrature
