#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace dwell::testing {

using State2 = std::array<std::complex<double>, 2>;

// Classic fixed-step RK4 for y' = f(t, y) on two complex amplitudes.
template <class F>
State2 rk4(F&& f, State2 y, double t0, double t1, double h) {
  const int steps = static_cast<int>(std::ceil((t1 - t0) / h));
  const double dt = (t1 - t0) / steps;
  double t = t0;
  auto axpy = [](const State2& a, const State2& k, double s) {
    return State2{a[0] + s * k[0], a[1] + s * k[1]};
  };
  for (int i = 0; i < steps; ++i) {
    const State2 k1 = f(t, y);
    const State2 k2 = f(t + 0.5 * dt, axpy(y, k1, 0.5 * dt));
    const State2 k3 = f(t + 0.5 * dt, axpy(y, k2, 0.5 * dt));
    const State2 k4 = f(t + dt, axpy(y, k3, dt));
    for (int j = 0; j < 2; ++j) y[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    t += dt;
  }
  return y;
}

}  // namespace dwell::testing
