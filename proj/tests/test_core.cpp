#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "core.hpp"
#include "doctest.h"
#include "errors.hpp"
#include "specfun.hpp"

using namespace casimir;

TEST_CASE("geometry closed form") {
  const core::Geometry g = core::geometry_from_aspect_ratio(2e-3);
  CHECK(g.z == doctest::Approx(0.93872283192177450171).epsilon(1e-14));
  CHECK(g.mu1 == doctest::Approx(0.063235017018428640207).epsilon(1e-14));
  CHECK(g.z == doctest::Approx(std::exp(-g.mu1)).epsilon(1e-15));

  // Z -> 1 as x -> 0+, Z -> 0 as x -> infinity
  CHECK(core::geometry_from_aspect_ratio(1e-12).z == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(core::geometry_from_aspect_ratio(1e8).z < 1e-7);
}

TEST_CASE("geometry stable branch matches the closed form at the seam") {
  // Both branches are valid around x = 1e-8; they must agree to ~1e-14.
  for (double x : {3e-9, 1e-8, 3e-8}) {
    const double exact = std::log1p(x + std::sqrt(x * (2.0 + x)));
    const double series = std::sqrt(2.0 * x) * (1.0 - x / 12.0);
    CHECK(series == doctest::Approx(exact).epsilon(1e-13));
    const core::Geometry g = core::geometry_from_aspect_ratio(x);
    CHECK(g.mu1 == doctest::Approx(exact).epsilon(1e-13));
  }
}

TEST_CASE("geometry domain errors") {
  CHECK_THROWS_AS(core::geometry_from_aspect_ratio(0.0), DomainError);
  CHECK_THROWS_AS(core::geometry_from_aspect_ratio(-1.0), DomainError);
}

TEST_CASE("Z is strictly decreasing in x") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> expo(-6.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    double x1 = std::pow(10.0, expo(rng));
    double x2 = std::pow(10.0, expo(rng));
    if (x1 == x2) continue;
    if (x1 > x2) std::swap(x1, x2);
    CHECK(core::geometry_from_aspect_ratio(x1).z >
          core::geometry_from_aspect_ratio(x2).z);
  }
}

TEST_CASE("exact series reproduce high-precision references") {
  const core::Geometry g1 = core::geometry_from_aspect_ratio(2e-3);
  CHECK(core::phi_dirichlet(g1) ==
        doctest::Approx(75.293584837841466976).epsilon(1e-11));
  CHECK(core::phi_drude(g1) ==
        doctest::Approx(74.596205291466171448).epsilon(1e-11));
  CHECK(core::phi0_dirichlet(g1) ==
        doctest::Approx(6.3312868046828304495).epsilon(1e-11));
  CHECK(core::phi0_neumann(g1) ==
        doctest::Approx(4.9351128209626616812).epsilon(1e-11));

  const core::Geometry g2 = core::geometry_from_aspect_ratio(0.1);
  CHECK(core::phi_dirichlet(g2) ==
        doctest::Approx(1.5864287660806430495).epsilon(1e-12));
  CHECK(core::phi_drude(g2) ==
        doctest::Approx(1.2025134239564761541).epsilon(1e-12));
}

TEST_CASE("all energies positive and decreasing in x") {
  double prev_d = 1e300, prev_dr = 1e300, prev_0d = 1e300, prev_0n = 1e300;
  for (double lg = -4.0; lg <= 1.0; lg += 0.5) {
    const core::Geometry g = core::geometry_from_aspect_ratio(std::pow(10.0, lg));
    const double d = core::phi_dirichlet(g);
    const double dr = core::phi_drude(g);
    const double d0 = core::phi0_dirichlet(g);
    const double n0 = core::phi0_neumann(g);
    CHECK(d > 0.0);
    CHECK(dr > 0.0);
    CHECK(d0 > 0.0);
    CHECK(n0 > 0.0);
    CHECK(d < prev_d);
    CHECK(dr < prev_dr);
    CHECK(d0 < prev_0d);
    CHECK(n0 < prev_0n);
    // Monopole removal lowers the energy.
    CHECK(dr < d);
    prev_d = d;
    prev_dr = dr;
    prev_0d = d0;
    prev_0n = n0;
  }
}

TEST_CASE("m=0 Neumann/Dirichlet identity") {
  for (double x : {2e-3, 0.05, 0.1, 1.0, 10.0}) {
    const core::Geometry g = core::geometry_from_aspect_ratio(x);
    const double lhs = core::phi0_neumann(g) - core::phi0_dirichlet(g);
    const double rhs = 0.5 * std::log1p(-g.z);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("energies vanish at large separation") {
  const core::Geometry g = core::geometry_from_aspect_ratio(1e6);
  CHECK(core::phi_dirichlet(g) < 1e-6);
  CHECK(core::phi_drude(g) < 1e-6);
  CHECK(core::phi0_dirichlet(g) < 1e-6);
  CHECK(core::phi0_neumann(g) < 1e-6);
}

TEST_CASE("PFA values") {
  const double z3 = specfun::zeta3();
  CHECK(core::phi_pfa(core::Model::dirichlet, 1.0) ==
        doctest::Approx(z3 / 8.0).epsilon(1e-15));
  CHECK(core::phi_pfa(core::Model::perfect, 1.0) ==
        doctest::Approx(z3 / 4.0).epsilon(1e-15));
  CHECK(core::phi_pfa(core::Model::neumann, 2e-3) ==
        doctest::Approx(z3 / 0.016).epsilon(1e-15));
  CHECK(core::phi_pfa(core::Model::drude, 0.5) ==
        doctest::Approx(z3 / 4.0).epsilon(1e-15));
  CHECK_THROWS_AS(core::phi_pfa(core::Model::dirichlet, 0.0), DomainError);
}

TEST_CASE("PFA limit of the exact Dirichlet series") {
  const double x = 1e-6;
  const core::Geometry g = core::geometry_from_aspect_ratio(x);
  const double product = x * core::phi_dirichlet(g);
  CHECK(product == doctest::Approx(specfun::zeta3() / 8.0).epsilon(0.01));
}

TEST_CASE("series guard trips on absurd term limits") {
  const core::Geometry g = core::geometry_from_aspect_ratio(1e-6);
  core::SeriesTolerance tol;
  tol.max_terms = 10;
  CHECK_THROWS_AS(core::phi_dirichlet(g, tol), CapExceededError);
  CHECK_THROWS_AS(core::phi_drude(g, tol), CapExceededError);
}
