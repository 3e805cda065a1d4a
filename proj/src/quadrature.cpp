#include "dwell/quadrature.hpp"

#include <cmath>

#include "dwell/error.hpp"

namespace dwell::quad {

namespace {

constexpr double kSeriesCutoff = 0.5;
constexpr int kSeriesTerms = 24;

void check_order(int k) {
  if (k != 0 && k != 1) throw InvalidArgument("moment order must be 0 or 1");
}

// sum_n sign^n x^(2n+odd) L^(2n+odd+k+1) / ((2n+odd)! (2n+odd+k+1))
double power_series(int k, double x, double L, bool odd, double sign) {
  double sum = 0.0;
  double term = odd ? x : 1.0;  // x^(2n+odd) / (2n+odd)!
  int m = odd ? 1 : 0;
  for (int n = 0; n < kSeriesTerms; ++n) {
    const int p = m + k + 1;
    sum += term * std::pow(L, p) / p;
    term *= sign * x * x / ((m + 1.0) * (m + 2.0));
    m += 2;
  }
  return sum;
}

struct Interval {
  double a, b, fa, fm, fb, whole;
};

double simpson_recurse(const std::function<double(double)>& f, const Interval& iv, double tol,
                       int depth) {
  const double m = 0.5 * (iv.a + iv.b);
  const double lm = 0.5 * (iv.a + m), rm = 0.5 * (m + iv.b);
  const double flm = f(lm), frm = f(rm);
  const double h = iv.b - iv.a;
  const double left = h / 12.0 * (iv.fa + 4.0 * flm + iv.fm);
  const double right = h / 12.0 * (iv.fm + 4.0 * frm + iv.fb);
  const double delta = left + right - iv.whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw QuadratureFailure("adaptive Simpson hit its recursion limit");
  return simpson_recurse(f, {iv.a, m, iv.fa, flm, iv.fm, left}, 0.5 * tol, depth - 1) +
         simpson_recurse(f, {m, iv.b, iv.fm, frm, iv.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double cos_moment(int k, double p, double L) {
  check_order(k);
  if (std::abs(p * L) < kSeriesCutoff) return power_series(k, p, L, false, -1.0);
  const double s = std::sin(p * L), c = std::cos(p * L);
  return k == 0 ? s / p : L * s / p + (c - 1.0) / (p * p);
}

double cosh_moment(int k, double g, double L) {
  check_order(k);
  if (std::abs(g * L) < kSeriesCutoff) return power_series(k, g, L, false, 1.0);
  const double s = std::sinh(g * L), c = std::cosh(g * L);
  return k == 0 ? s / g : L * s / g - (c - 1.0) / (g * g);
}

double sinh_moment(int k, double g, double L) {
  check_order(k);
  if (std::abs(g * L) < kSeriesCutoff) return power_series(k, g, L, true, 1.0);
  const double s = std::sinh(g * L), c = std::cosh(g * L);
  return k == 0 ? (c - 1.0) / g : L * c / g - s / (g * g);
}

double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol, int max_depth) {
  if (hi == lo) return 0.0;
  const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
  const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson_recurse(f, {lo, hi, fa, fm, fb, whole}, tol, max_depth);
}

double integrate_piecewise(const std::function<double(double)>& f,
                           std::span<const double> breakpoints, double tol) {
  if (breakpoints.size() < 2) return 0.0;
  const double span = breakpoints.back() - breakpoints.front();
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double lo = breakpoints[i], hi = breakpoints[i + 1];
    if (hi <= lo) continue;
    total += adaptive_simpson(f, lo, hi, tol * (hi - lo) / span);
  }
  return total;
}

}  // namespace dwell::quad
