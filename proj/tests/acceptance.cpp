// Acceptance harness: one pass/fail line per criterion, nonzero exit if
// any criterion fails.  Expensive reference computations that cannot run
// here (deep truncation studies) were frozen once from over-converged runs
// of this same solver and independent high-precision summation; each frozen
// constant is annotated with how it was produced.

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "bispherical.hpp"
#include "core.hpp"
#include "specfun.hpp"
#include "spherical.hpp"

using namespace casimir;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("%s  criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int criterion, const std::function<std::pair<bool, std::string>()>& fn) {
  try {
    const auto [pass, detail] = fn();
    report(criterion, pass, detail);
  } catch (const std::exception& e) {
    report(criterion, false, std::string("exception: ") + e.what());
  }
}

std::string fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

// delta_phi at x = 1e-5, forced l_max = 2200, rel_tol 1e-9: truncation
// error ~ e^(-1.95 mu1 2200) ~ 2e-9 relative.  Frozen reference for the
// deep-small-x capability check.
constexpr double kDeltaPhiRef1e5 = -9.368674599432;

double minimal_l_max(double x, double reference, double rel_target) {
  int lo = 4;
  int hi = static_cast<int>(std::ceil(12.0 / core::geometry_from_aspect_ratio(x).mu1));
  auto good = [&](int l_max) {
    bispherical::TruncationPolicy p;
    p.forced_l_max = l_max;
    p.rel_tol = 1e-9;
    const double v = bispherical::delta_phi_numeric(x, p).value;
    return std::abs(v - reference) < rel_target * std::abs(reference);
  };
  while (lo < hi) {
    const int mid = (lo + hi) / 2;
    if (good(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return static_cast<double>(lo);
}

}  // namespace

int main() {
  double delta_phi_1e5 = 0.0;  // shared by criteria 3, 4, 9

  run(1, []() -> std::pair<bool, std::string> {
    const double expected[] = {-2.92435, -3.06243, -3.07725, -3.07737};
    const int l_maxes[] = {20, 40, 80, 120};
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      bispherical::TruncationPolicy p;
      p.forced_l_max = l_maxes[i];
      const double v = bispherical::delta_phi_numeric(2e-3, p).value;
      worst = std::max(worst, std::abs(v - expected[i]));
    }
    return {worst < 1e-5,
            fmt("truncation sequence at x=2e-3, worst |error| = %.2e (limit 1e-5)",
                worst)};
  });

  run(2, []() -> std::pair<bool, std::string> {
    const core::Geometry g = core::geometry_from_aspect_ratio(2e-3);
    const double phi_d = core::phi_dirichlet(g);
    const double phi_dr = core::phi_drude(g);
    bispherical::TruncationPolicy p;
    p.rel_tol = 1e-8;
    const double phi_p =
        phi_d + phi_dr + bispherical::delta_phi_numeric(2e-3, p).value;
    const bool ok = std::abs(phi_d - 75.2936) < 5e-4 &&
                    std::abs(phi_dr - 74.5962) < 5e-4 &&
                    std::abs(phi_p - 146.812) < 2e-3;
    return {ok, fmt("phi_D=%.4f (75.2936), phi_Dr=%.4f (74.5962), "
                    "phi_P=%.3f (146.812)",
                    phi_d, phi_dr, phi_p)};
  });

  run(3, [&]() -> std::pair<bool, std::string> {
    bispherical::TruncationPolicy p;
    p.rel_tol = 1e-8;
    const double num_2e3 = bispherical::delta_phi_numeric(2e-3, p).value;
    const double short_2e3 = asymptotics::delta_phi_short(2e-3);
    const double dev_2e3 = std::abs(short_2e3 - num_2e3) / std::abs(num_2e3);
    bool ok = std::abs(short_2e3 - (-3.068)) < 5e-4 && dev_2e3 < 0.003;

    double dev_max = 0.0;
    double dev_lo = 0.0, dev_hi = 0.0;
    for (double x : {1e-5, 1e-4, 1e-3, 1e-2, 0.1}) {
      double numeric;
      if (x == 1e-5) {
        if (delta_phi_1e5 == 0.0) {
          bispherical::TruncationPolicy deep;
          deep.forced_l_max = 1499;
          deep.rel_tol = 1e-9;
          delta_phi_1e5 = bispherical::delta_phi_numeric(1e-5, deep).value;
        }
        numeric = delta_phi_1e5;
      } else {
        numeric = bispherical::delta_phi_numeric(x, p).value;
      }
      const double dev =
          std::abs(asymptotics::delta_phi_short(x) - numeric) / std::abs(numeric);
      dev_max = std::max(dev_max, dev);
      if (x == 1e-5) dev_lo = dev;
      if (x == 0.1) dev_hi = dev;
    }
    ok = ok && dev_max <= 0.015 && std::abs(dev_lo - 0.0016) < 0.003 &&
         std::abs(dev_hi - 0.012) < 0.003;
    return {ok, fmt("deltaPhi^0(2e-3)=%.4f dev=%.3f%%; range dev max=%.2f%%, "
                    "endpoints %.2f%% / %.2f%%",
                    short_2e3, 100.0 * dev_2e3, 100.0 * dev_max,
                    100.0 * dev_lo, 100.0 * dev_hi)};
  });

  run(4, [&]() -> std::pair<bool, std::string> {
    if (delta_phi_1e5 == 0.0) {
      bispherical::TruncationPolicy deep;
      deep.forced_l_max = 1499;
      deep.rel_tol = 1e-9;
      delta_phi_1e5 = bispherical::delta_phi_numeric(1e-5, deep).value;
    }
    const double rel =
        std::abs(delta_phi_1e5 - kDeltaPhiRef1e5) / std::abs(kDeltaPhiRef1e5);
    return {rel < 1e-6,
            fmt("deltaPhi(1e-5)=%.9f with l_max=1499, rel error vs frozen "
                "deep reference = %.2e (limit 1e-6)",
                delta_phi_1e5, rel)};
  });

  run(5, []() -> std::pair<bool, std::string> {
    double worst = 0.0;
    for (double x : {1e-3, 1e-2, 0.1, 1.0}) {
      const core::Geometry g = core::geometry_from_aspect_ratio(x);
      const int l_max = static_cast<int>(std::ceil(25.0 / g.mu1));
      const double c0 = bispherical::block_contribution(0, g, l_max).contribution;
      worst = std::max(worst, std::abs(0.5 * c0 - 0.5 * std::log1p(-g.z)));
    }
    return {worst < 1e-9,
            fmt("m=0 block vs 1/2 ln(1-Z), worst |error| = %.2e (limit 1e-9)",
                worst)};
  });

  run(6, []() -> std::pair<bool, std::string> {
    bispherical::TruncationPolicy p;
    p.rel_tol = 1e-10;
    const double b1 = bispherical::delta_phi_numeric(0.1, p).value;
    const double s1 = spherical::delta_phi_spherical(0.1, 60);
    const double r1 = std::abs(s1 - b1) / std::abs(b1);
    const double b2 = bispherical::delta_phi_numeric(1.0, p).value;
    const double s2 = spherical::delta_phi_spherical(1.0, 40);
    const double r2 = std::abs(s2 - b2) / std::abs(b2);
    return {r1 < 1e-6 && r2 < 1e-6,
            fmt("cross-basis rel diff: %.2e at x=0.1, %.2e at x=1 (limit 1e-6)",
                r1, r2)};
  });

  run(7, []() -> std::pair<bool, std::string> {
    const double xs[] = {1e-4, 1e-3, 1e-2, 0.1};
    std::vector<double> log_inv_x, log_l;
    for (double x : xs) {
      bispherical::TruncationPolicy deep;
      deep.rel_tol = 1e-9;
      deep.forced_l_max = static_cast<int>(
          std::ceil(12.0 / core::geometry_from_aspect_ratio(x).mu1));
      const double ref = bispherical::delta_phi_numeric(x, deep).value;
      const double l_min = minimal_l_max(x, ref, 1e-6);
      log_inv_x.push_back(std::log(1.0 / x));
      log_l.push_back(std::log(l_min));
    }
    // least-squares slope of ln(l_min) against ln(1/x)
    const int n = static_cast<int>(log_l.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int i = 0; i < n; ++i) {
      sx += log_inv_x[i];
      sy += log_l[i];
      sxx += log_inv_x[i] * log_inv_x[i];
      sxy += log_inv_x[i] * log_l[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return {std::abs(slope - 0.5) <= 0.1,
            fmt("required l_max scaling exponent = %.3f (want 0.5 +/- 0.1)",
                slope)};
  });

  run(8, []() -> std::pair<bool, std::string> {
    // Frozen high-precision oracle for the x=1e-8 ratio, computed from the
    // s-sum representation of the Li_2 integral.
    constexpr double kRatioRef1e8 = 1.035437868;
    const double r4 = asymptotics::delta_phi_as(1e-4) /
                      asymptotics::leading_correction(1e-4);
    const double r6 = asymptotics::delta_phi_as(1e-6) /
                      asymptotics::leading_correction(1e-6);
    const double r8 = asymptotics::delta_phi_as(1e-8) /
                      asymptotics::leading_correction(1e-8);
    const bool monotone = r4 > r6 && r6 > r8 && r8 > 1.0;
    const bool calibrated = std::abs(r8 - kRatioRef1e8) < 1e-6;
    return {monotone && calibrated,
            fmt("ratios %.6f > %.6f > %.6f > 1, x=1e-8 ratio vs oracle "
                "|diff| = %.1e",
                r4, r6, r8, std::abs(r8 - kRatioRef1e8))};
  });

  run(9, [&]() -> std::pair<bool, std::string> {
    const double x = 1e-5;
    const core::Geometry g = core::geometry_from_aspect_ratio(x);
    const double phi_d = core::phi_dirichlet(g);
    if (delta_phi_1e5 == 0.0) {
      bispherical::TruncationPolicy deep;
      deep.forced_l_max = 1499;
      deep.rel_tol = 1e-9;
      delta_phi_1e5 = bispherical::delta_phi_numeric(x, deep).value;
    }
    const double phi_p = phi_d + core::phi_drude(g) + delta_phi_1e5;
    const double rel_d = std::abs(x * phi_d - specfun::zeta3() / 8.0) /
                         (specfun::zeta3() / 8.0);
    const double rel_p = std::abs(x * phi_p - specfun::zeta3() / 4.0) /
                         (specfun::zeta3() / 4.0);
    return {rel_d < 0.01 && rel_p < 0.01,
            fmt("PFA limits at x=1e-5: x*phi_D off by %.3f%%, x*phi_P off by "
                "%.3f%% (limit 1%%)",
                100.0 * rel_d, 100.0 * rel_p)};
  });

  if (g_failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
  } else {
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
