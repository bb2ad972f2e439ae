#include "linalg.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "errors.hpp"

namespace casimir::linalg {

LogDet lu_log_det(Matrix& m) {
  const int n = m.n;
  double log_abs = 0.0;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    double best = std::abs(m(k, k));
    for (int i = k + 1; i < n; ++i) {
      const double v = std::abs(m(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    const double pivot = m(k, k);
    log_abs += std::log(std::abs(pivot));
    if (pivot < 0.0) sign = -sign;
    const double inv = 1.0 / pivot;
    double* row_k = &m(k, 0);
    for (int i = k + 1; i < n; ++i) {
      double* row_i = &m(i, 0);
      const double factor = row_i[k] * inv;
      if (factor == 0.0) continue;
      row_i[k] = factor;
      for (int j = k + 1; j < n; ++j) row_i[j] -= factor * row_k[j];
    }
  }
  return {log_abs, sign};
}

}  // namespace casimir::linalg
