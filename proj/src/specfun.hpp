#pragma once

namespace casimir::specfun {

// Only the two polylogarithm orders used by the short-distance formulas.
enum class PolylogOrder { three_halves, two };

// Li_s(z) = sum_{k>=1} z^k / k^s for z in [0,1).
// Accurate (rel. error <= 1e-12) over the whole interval, including z -> 1-.
// Throws DomainError for z < 0 or z >= 1.
double polylog(PolylogOrder s, double z);

// ln(n!) for n >= 0, valid up to n >= 1e5 with rel. error <= 1e-14.
double log_factorial(int n);

// Apery's constant zeta(3).
constexpr double zeta3() { return 1.2020569031595942854; }

}  // namespace casimir::specfun
