#include "quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "errors.hpp"

namespace casimir::quadrature {

namespace {

GaussLegendreRule build_rule(int order) {
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const double pi = 3.141592653589793238462643;
  for (int i = 0; i < (order + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

double panel(const GaussLegendreRule& rule,
             const std::function<double(double)>& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return half * sum;
}

double adaptive(const GaussLegendreRule& rule,
                const std::function<double(double)>& f, double a, double b,
                double whole, double abs_tol, int depth) {
  const double mid = 0.5 * (a + b);
  const double left = panel(rule, f, a, mid);
  const double right = panel(rule, f, mid, b);
  if (std::abs(left + right - whole) <= abs_tol) return left + right;
  if (depth >= 40) {
    throw ConvergenceError("adaptive quadrature: panel refinement stalled");
  }
  return adaptive(rule, f, a, mid, left, 0.5 * abs_tol, depth + 1) +
         adaptive(rule, f, mid, b, right, 0.5 * abs_tol, depth + 1);
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int order) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, build_rule(order)).first;
  return it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int order) {
  if (!(b > a)) return 0.0;
  const GaussLegendreRule& rule = gauss_legendre(order);
  return adaptive(rule, f, a, b, panel(rule, f, a, b), abs_tol, 0);
}

double integrate_semi_infinite(const std::function<double(double)>& f,
                               double a, double w0,
                               const std::function<bool(double)>& done,
                               double abs_tol, int order) {
  double total = 0.0;
  double lo = a;
  double w = w0;
  for (int k = 0; k < 256; ++k) {
    const double hi = lo + w;
    total += integrate(f, lo, hi, abs_tol / 64.0, order);
    if (done(hi)) return total;
    lo = hi;
    w *= 2.0;
  }
  throw ConvergenceError("semi-infinite quadrature: tail cutoff not reached");
}

}  // namespace casimir::quadrature
