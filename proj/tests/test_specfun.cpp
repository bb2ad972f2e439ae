#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "errors.hpp"
#include "specfun.hpp"

using casimir::specfun::PolylogOrder;
using casimir::specfun::log_factorial;
using casimir::specfun::polylog;

namespace {

constexpr double kPi = 3.141592653589793238462643;

// Brute-force reference: the defining series with compensated summation,
// one million terms.  Usable as an oracle for z <= 0.999.
double polylog_brute(double s, double z) {
  double sum = 0.0, comp = 0.0;
  double zk = 1.0;
  for (int k = 1; k <= 1000000; ++k) {
    zk *= z;
    const double term = zk / std::pow(static_cast<double>(k), s);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

TEST_CASE("dilogarithm closed-form values") {
  CHECK(polylog(PolylogOrder::two, 0.0) == 0.0);
  // Li_2(1/2) = pi^2/12 - ln^2(2)/2
  const double half = kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0);
  CHECK(polylog(PolylogOrder::two, 0.5) == doctest::Approx(half).epsilon(1e-14));
  // z -> 1- approaches zeta(2)
  CHECK(polylog(PolylogOrder::two, 1.0 - 1e-14) ==
        doctest::Approx(kPi * kPi / 6.0).epsilon(1e-6));
}

TEST_CASE("polylog values against high-precision references") {
  struct Ref {
    PolylogOrder s;
    double z;
    double value;
  };
  const Ref refs[] = {
      {PolylogOrder::three_halves, 0.3, 0.33831109554480628354},
      {PolylogOrder::three_halves, 0.95, 1.8841573334116293255},
      {PolylogOrder::three_halves, 0.99, 2.2716600770079992803},
      {PolylogOrder::three_halves, 0.999999, 2.6088319004525849499},
      {PolylogOrder::two, 0.25, 0.26765263908273260692},
      {PolylogOrder::two, 0.75, 0.97846939293030610374},
      {PolylogOrder::two, 0.9999, 1.6439129842561454972},
  };
  for (const Ref& r : refs) {
    CHECK(polylog(r.s, r.z) == doctest::Approx(r.value).epsilon(1e-12));
  }
}

TEST_CASE("polylog agrees with the brute-force series") {
  for (double z : {0.01, 0.2, 0.5, 0.9, 0.95, 0.99, 0.999}) {
    CHECK(polylog(PolylogOrder::three_halves, z) ==
          doctest::Approx(polylog_brute(1.5, z)).epsilon(1e-9));
    CHECK(polylog(PolylogOrder::two, z) ==
          doctest::Approx(polylog_brute(2.0, z)).epsilon(1e-9));
  }
}

TEST_CASE("polylog is strictly increasing in z") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.0, 0.9999999);
  for (int i = 0; i < 200; ++i) {
    double z1 = dist(rng);
    double z2 = dist(rng);
    if (z1 == z2) continue;
    if (z1 > z2) std::swap(z1, z2);
    CHECK(polylog(PolylogOrder::three_halves, z1) <
          polylog(PolylogOrder::three_halves, z2));
    CHECK(polylog(PolylogOrder::two, z1) < polylog(PolylogOrder::two, z2));
  }
}

TEST_CASE("Euler reflection for the dilogarithm") {
  for (double z : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
    const double lhs =
        polylog(PolylogOrder::two, z) + polylog(PolylogOrder::two, 1.0 - z);
    const double rhs = kPi * kPi / 6.0 - std::log(z) * std::log(1.0 - z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("polylog domain errors") {
  CHECK_THROWS_AS(polylog(PolylogOrder::two, -0.1), casimir::DomainError);
  CHECK_THROWS_AS(polylog(PolylogOrder::two, 1.0), casimir::DomainError);
  CHECK_THROWS_AS(polylog(PolylogOrder::three_halves, 1.5),
                  casimir::DomainError);
}

TEST_CASE("log_factorial small and large values") {
  CHECK(log_factorial(0) == 0.0);
  CHECK(log_factorial(1) == 0.0);
  CHECK(log_factorial(10) ==
        doctest::Approx(15.104412573075515295).epsilon(1e-14));
  CHECK(log_factorial(10000) ==
        doctest::Approx(82108.92783681435345).epsilon(1e-14));
  CHECK(log_factorial(100000) ==
        doctest::Approx(1051299.221899121865).epsilon(1e-14));
}

TEST_CASE("log_factorial recurrence and seam") {
  for (int n : {1, 2, 17, 128, 255, 256, 257, 300, 1000}) {
    CHECK(std::exp(log_factorial(n) - log_factorial(n - 1)) ==
          doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
  }
  // At large n the difference of two ~1e6-sized logs leaves ~8 digits.
  CHECK(std::exp(log_factorial(50000) - log_factorial(49999)) ==
        doctest::Approx(50000.0).epsilon(1e-8));
}

TEST_CASE("log_factorial rejects negative arguments") {
  CHECK_THROWS_AS(log_factorial(-1), casimir::DomainError);
}

TEST_CASE("zeta3 constant") {
  CHECK(casimir::specfun::zeta3() ==
        doctest::Approx(1.2020569031595942854).epsilon(1e-16));
}
