#pragma once

#include <vector>

namespace casimir::linalg {

// Dense row-major square matrix, just enough for the determinant stage.
struct Matrix {
  int n = 0;
  std::vector<double> a;  // n*n, row-major

  explicit Matrix(int size) : n(size), a(static_cast<std::size_t>(size) * size) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct LogDet {
  double value;  // ln|det|
  int sign;      // +1 or -1 (0 for an exactly singular pivot)
};

// In-place LU with partial pivoting; returns ln|det| and the sign.
LogDet lu_log_det(Matrix& m);

}  // namespace casimir::linalg
