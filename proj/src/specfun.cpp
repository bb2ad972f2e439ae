#include "specfun.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "errors.hpp"

namespace casimir::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643;

// Switch point between the defining series and the small-eps expansion
// of Li_{3/2}(e^-eps).  The series converges too slowly beyond this.
constexpr double kSeriesLimit32 = 0.95122942450071400910;  // e^(-0.05)

// zeta(3/2 - k), k = 0..27.  Coefficients of the expansion
//   Li_{3/2}(e^-eps) = -2 sqrt(pi*eps) + sum_k zeta(3/2-k) (-eps)^k / k!
// The alternating growth of zeta at negative arguments is beaten by the
// 1/k! for eps < 2*pi; at eps <= 0.052 the k=27 term is far below 1e-30.
constexpr std::array<double, 28> kZeta32Table = {
    2.6123753486854883433,     -1.4603545088095868129,
    -0.20788622497735456602,   -0.02548520188983303595,
    0.0085169287778503305424,  0.0044410113354794319585,
    -0.0030916692472158338448, -0.002671458019899224599,
    0.0027467679395368687584,  0.0032690395726002200217,
    -0.0044160328730048898084, -0.0066721722964666407568,
    0.011146122473942814136,   0.020396978715942792056,
    -0.04057496748119457841,   -0.087175255906217251469,
    0.20117404938422688243,    0.49627121991205760787,
    -1.3032292507051139539,    -3.6297592997745741279,
    10.687327069021993641,     33.168325785694607879,
    -108.2174750587760554,     -370.30187837547859954,
    1326.0458117490156281,     4959.5983150430436114,
    -19338.941988374620291,    -78486.148569217686891};

// Kahan-compensated direct summation of sum z^k / k^s.
double polylog_series(double s, double z, double rel_tol) {
  double sum = 0.0, comp = 0.0;
  double zk = 1.0;
  for (int k = 1; k < 100000; ++k) {
    zk *= z;
    const double term = zk / std::pow(static_cast<double>(k), s);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (term < rel_tol * sum) return sum;
  }
  throw ConvergenceError("polylog series did not converge");
}

double li_three_halves(double z) {
  if (z <= kSeriesLimit32) return polylog_series(1.5, z, 1e-17);
  const double eps = -std::log(z);
  double sum = -2.0 * std::sqrt(kPi * eps);
  double ek = 1.0;  // (-eps)^k / k!
  for (std::size_t k = 0; k < kZeta32Table.size(); ++k) {
    sum += kZeta32Table[k] * ek;
    ek *= -eps / static_cast<double>(k + 1);
  }
  return sum;
}

double li_two(double z) {
  // Euler reflection maps z > 1/2 onto a fast-converging series argument.
  if (z > 0.5) {
    const double w = 1.0 - z;
    if (w == 0.0) return kPi * kPi / 6.0;
    return kPi * kPi / 6.0 - std::log(z) * std::log(w) -
           polylog_series(2.0, w, 1e-17);
  }
  if (z == 0.0) return 0.0;
  return polylog_series(2.0, z, 1e-17);
}

}  // namespace

double polylog(PolylogOrder s, double z) {
  if (z < 0.0 || z >= 1.0) {
    // z = 1 belongs to Li_2 only as the limit pi^2/6; the integrands that
    // drive this routine always stay strictly inside [0,1).
    throw DomainError("polylog: argument must be in [0,1)");
  }
  return s == PolylogOrder::three_halves ? li_three_halves(z) : li_two(z);
}

namespace {

constexpr int kExactLimit = 256;

const std::vector<double>& exact_log_factorials() {
  static const std::vector<double> table = [] {
    std::vector<double> t(kExactLimit + 1);
    double sum = 0.0, comp = 0.0;
    t[0] = 0.0;
    for (int n = 1; n <= kExactLimit; ++n) {
      const double y = std::log(static_cast<double>(n)) - comp;
      const double s = sum + y;
      comp = (s - sum) - y;
      sum = s;
      t[n] = sum;
    }
    return t;
  }();
  return table;
}

// Stirling series; at n > 256 the first omitted term is below 1e-26.
double log_factorial_asymptotic(double n) {
  const double inv = 1.0 / n;
  const double inv2 = inv * inv;
  const double series =
      inv / 12.0 * (1.0 - inv2 / 30.0 * (1.0 - 2.0 * inv2 / 7.0 *
                                                   (1.0 - 3.0 * inv2 / 4.0)));
  return (n + 0.5) * std::log(n) - n + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial: n must be non-negative");
  if (n <= kExactLimit) return exact_log_factorials()[n];
  return log_factorial_asymptotic(static_cast<double>(n));
}

}  // namespace casimir::specfun
