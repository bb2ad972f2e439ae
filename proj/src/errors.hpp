#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// A series or quadrature failed to reach the requested tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A hard iteration/size guard was hit before convergence.
struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Determinant sign, solver residual or overflow checks failed.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace casimir
