#pragma once

#include <functional>
#include <span>

namespace dwell::quad {

// Closed-form moments on [0, L] for k in {0, 1}. Small |p L| switches to the
// Taylor series so nearly equal frequencies keep full relative accuracy.
double cos_moment(int k, double p, double L);   // int_0^L u^k cos(p u) du
double cosh_moment(int k, double g, double L);  // int_0^L u^k cosh(g u) du
double sinh_moment(int k, double g, double L);  // int_0^L u^k sinh(g u) du

/// Adaptive Simpson with Richardson correction. `tol` is absolute.
/// Throws QuadratureFailure when the recursion limit is hit before `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double lo, double hi,
                        double tol, int max_depth = 48);

/// Adaptive Simpson over consecutive intervals of `breakpoints` (sorted),
/// splitting the tolerance by interval length.
double integrate_piecewise(const std::function<double(double)>& f,
                           std::span<const double> breakpoints, double tol);

}  // namespace dwell::quad
