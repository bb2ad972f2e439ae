#pragma once

#include <cstdint>

namespace casimir::core {

// Scalar-field boundary conditions on the two surfaces; P is the
// electromagnetic perfect-conductor combination of a D/Dr and an N channel.
enum class Model { dirichlet, drude, neumann, perfect };

// Sphere-plate geometry, parameterized by the aspect ratio x = d/R.
// Z = 1/(1 + x + sqrt(x(2+x))) in (0,1) and mu1 = -ln Z > 0.
struct Geometry {
  double x;
  double z;
  double mu1;
};

struct SeriesTolerance {
  double rel_tol = 1e-12;
  std::int64_t max_terms = 10'000'000;
};

Geometry geometry_from_aspect_ratio(double x);

// Exact classical energies from the bispherical closed forms.
// All series are truncated by the geometric tail bound
// (2l+1) Z^(2l+1) / (1-Z) < rel_tol * |accumulated|.
double phi_dirichlet(const Geometry& geom, const SeriesTolerance& tol = {});
double phi_drude(const Geometry& geom, const SeriesTolerance& tol = {});
double phi0_dirichlet(const Geometry& geom, const SeriesTolerance& tol = {});
double phi0_neumann(const Geometry& geom, const SeriesTolerance& tol = {});

// Proximity-force limit: zeta(3)/(8x) per scalar channel, doubled for P.
double phi_pfa(Model model, double x);

}  // namespace casimir::core
