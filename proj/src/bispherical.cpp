#include "bispherical.hpp"

#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "errors.hpp"

namespace casimir::bispherical {

namespace {

constexpr double kResidualLimit = 1e-10;

int hardware_jobs(int requested) {
  if (requested > 0) return requested;
  const unsigned n = std::thread::hardware_concurrency();
  return n > 0 ? static_cast<int>(n) : 1;
}

}  // namespace

TridiagonalBlock build_block(int m, const core::Geometry& geom, int l_max) {
  if (m < 0) throw DomainError("build_block: m must be non-negative");
  // A single-row block (l_max == m) is legal and needed: at forced small
  // l_max the m = l_max block still contributes above 1e-5.
  if (l_max < m) throw DomainError("build_block: l_max must be >= m");
  TridiagonalBlock block;
  block.m = m;
  block.l_max = l_max;
  const int n = l_max - m + 1;
  block.diag.resize(n);
  block.sub.resize(n - 1);
  block.super.resize(n - 1);
  const double ch = std::cosh(geom.mu1);
  const double sh = std::sinh(geom.mu1);
  for (int i = 0; i < n; ++i) {
    const int l = m + i;
    block.diag[i] = (2.0 * l + 1.0) * ch + sh;
    if (i > 0) block.sub[i - 1] = -static_cast<double>(l - m);
    if (i < n - 1) block.super[i] = -static_cast<double>(l + m + 1);
  }
  return block;
}

linalg::Matrix solve_delta_T(const TridiagonalBlock& block,
                             const core::Geometry& geom) {
  const int n = block.size();
  const double rhs = -2.0 * std::sinh(geom.mu1);

  // Factor once: forward elimination of the sub-diagonal.
  std::vector<double> d(block.diag);
  std::vector<double> factor(n - 1);
  for (int i = 1; i < n; ++i) {
    factor[i - 1] = block.sub[i - 1] / d[i - 1];
    d[i] = block.diag[i] - factor[i - 1] * block.super[i - 1];
  }

  linalg::Matrix delta_t(n);
  std::vector<double> y(n);
  for (int col = 0; col < n; ++col) {
    for (int i = 0; i < n; ++i) y[i] = (i == col) ? rhs : 0.0;
    for (int i = 1; i < n; ++i) y[i] -= factor[i - 1] * y[i - 1];
    y[n - 1] /= d[n - 1];
    for (int i = n - 2; i >= 0; --i) {
      y[i] = (y[i] - block.super[i] * y[i + 1]) / d[i];
    }
    for (int i = 0; i < n; ++i) delta_t(i, col) = y[i];
  }

  // ||B dT - rhs I||_max / |rhs|
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double r = block.diag[i] * delta_t(i, j);
      if (i > 0) r += block.sub[i - 1] * delta_t(i - 1, j);
      if (i < n - 1) r += block.super[i] * delta_t(i + 1, j);
      r -= (i == j) ? rhs : 0.0;
      residual = std::max(residual, std::abs(r));
    }
  }
  residual /= std::abs(rhs);
  if (!(residual < kResidualLimit)) {
    throw NumericalError("solve_delta_T: residual " + std::to_string(residual) +
                         " exceeds " + std::to_string(kResidualLimit));
  }
  return delta_t;
}

double v_diagonal(const core::Geometry& geom, int l) {
  if (l < 0) throw DomainError("v_diagonal: l must be non-negative");
  return 1.0 / (-std::expm1(geom.mu1 * (2.0 * l + 1.0)));
}

BlockResult block_contribution(int m, const core::Geometry& geom, int l_max) {
  const TridiagonalBlock block = build_block(m, geom, l_max);
  const int n = block.size();

  linalg::Matrix a = solve_delta_T(block, geom);
  double residual = 0.0;
  {
    const double rhs = -2.0 * std::sinh(geom.mu1);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double r = block.diag[i] * a(i, j);
        if (i > 0) r += block.sub[i - 1] * a(i - 1, j);
        if (i < n - 1) r += block.super[i] * a(i + 1, j);
        r -= (i == j) ? rhs : 0.0;
        residual = std::max(residual, std::abs(r));
      }
    }
    residual /= std::abs(rhs);
  }

  // A = 1 + V dT, scaling row i of dT by V_(m+i).
  for (int i = 0; i < n; ++i) {
    const double v = v_diagonal(geom, m + i);
    double* row = &a(i, 0);
    for (int j = 0; j < n; ++j) row[j] *= v;
    row[i] += 1.0;
  }

  const linalg::LogDet det = linalg::lu_log_det(a);
  if (det.sign != 1) {
    throw NumericalError("block_contribution: det(1 + V dT) <= 0 at m=" +
                         std::to_string(m) + ", l_max=" + std::to_string(l_max) +
                         " (insufficient truncation?)");
  }

  BlockResult result;
  result.m = m;
  result.contribution = -det.value;
  result.l_max_used = l_max;
  result.logdet_sign = det.sign;
  result.solver_residual = residual;
  return result;
}

namespace {

// One full m-sweep at fixed l_max.  Blocks are computed by a worker pool
// in chunks; the accumulator consumes results in ascending m, so the
// total is bitwise independent of the worker count.
struct SweepResult {
  double value = 0.0;
  int m_max = 0;
  bool m_converged = false;
};

SweepResult sweep(const core::Geometry& geom, int l_max,
                  const TruncationPolicy& policy) {
  SweepResult out;
  double total = 0.5 * std::log1p(-geom.z);  // exact m = 0 contribution
  const int jobs = hardware_jobs(policy.jobs);
  const int m_stop = std::min(policy.m_cap, l_max);

  int quiet = 0;
  int next_m = 1;
  bool done = false;
  while (!done && next_m <= m_stop) {
    const int chunk_begin = next_m;
    const int chunk_end = std::min(m_stop, chunk_begin + 4 * jobs - 1);
    const int count = chunk_end - chunk_begin + 1;
    std::vector<double> chunk(count);
    std::atomic<int> cursor{0};
    auto worker = [&] {
      for (;;) {
        const int idx = cursor.fetch_add(1);
        if (idx >= count) return;
        chunk[idx] =
            block_contribution(chunk_begin + idx, geom, l_max).contribution;
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (int idx = 0; idx < count; ++idx) {
      total += chunk[idx];
      out.m_max = chunk_begin + idx;
      if (std::abs(chunk[idx]) < policy.rel_tol * std::abs(total)) {
        if (++quiet >= 3) {
          done = true;
          break;
        }
      } else {
        quiet = 0;
      }
    }
    next_m = chunk_end + 1;
  }
  if (!done && out.m_max >= policy.m_cap) {
    throw CapExceededError("delta_phi_numeric: azimuthal cap reached");
  }
  out.value = total;
  out.m_converged = done || out.m_max == l_max;
  return out;
}

}  // namespace

DeltaPhiResult delta_phi_numeric(double x, const TruncationPolicy& policy) {
  const core::Geometry geom = core::geometry_from_aspect_ratio(x);
  DeltaPhiResult result;
  result.report.x = x;

  if (policy.forced_l_max > 0) {
    const SweepResult s = sweep(geom, policy.forced_l_max, policy);
    result.value = s.value;
    result.l_max_used = policy.forced_l_max;
    result.m_max_used = s.m_max;
    result.report.history.push_back({policy.forced_l_max, s.value});
    result.report.converged = false;  // no ladder, nothing certified
    return result;
  }

  int l_max = policy.l_max_initial > 0
                  ? policy.l_max_initial
                  : static_cast<int>(std::ceil(10.0 / geom.mu1));
  l_max = std::max(l_max, 8);
  const int growth = std::max(policy.l_max_factor, 2);

  SweepResult prev = sweep(geom, l_max, policy);
  result.report.history.push_back({l_max, prev.value});
  while (true) {
    if (l_max > policy.l_max_cap) {
      throw CapExceededError("delta_phi_numeric: l_max cap reached at x=" +
                             std::to_string(x));
    }
    const int next = l_max * growth;
    if (next > policy.l_max_cap) {
      throw CapExceededError(
          "delta_phi_numeric: l_max cap would be exceeded; partial value " +
          std::to_string(prev.value) + " at l_max=" + std::to_string(l_max));
    }
    const SweepResult cur = sweep(geom, next, policy);
    result.report.history.push_back({next, cur.value});
    const double change = std::abs(cur.value - prev.value);
    if (change < policy.rel_tol * std::abs(cur.value)) {
      result.value = cur.value;
      result.l_max_used = next;
      result.m_max_used = cur.m_max;
      result.report.converged = true;
      result.report.achieved_tol = change / std::abs(cur.value);
      return result;
    }
    l_max = next;
    prev = cur;
  }
}

double phi_neumann(double x, const TruncationPolicy& policy) {
  const core::Geometry geom = core::geometry_from_aspect_ratio(x);
  return core::phi_dirichlet(geom) + delta_phi_numeric(x, policy).value;
}

double phi_perfect(double x, const TruncationPolicy& policy, bool grounded) {
  const core::Geometry geom = core::geometry_from_aspect_ratio(x);
  const double phi_d = core::phi_dirichlet(geom);
  const double delta = delta_phi_numeric(x, policy).value;
  if (grounded) return 2.0 * phi_d + delta;
  return phi_d + core::phi_drude(geom) + delta;
}

}  // namespace casimir::bispherical
