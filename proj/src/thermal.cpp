#include "dwell/thermal.hpp"

#include <cmath>
#include <numbers>

#include "dwell/error.hpp"

namespace dwell {

constexpr double kPi = std::numbers::pi;

double temperature_limit(double E2_minus_E1, const PhysicalConstants& pc) {
  if (!std::isfinite(E2_minus_E1)) throw NonFinite("E2 - E1");
  if (!(E2_minus_E1 > 0.0)) throw InvalidArgument("E2 - E1 must be positive");
  return pc.b_wien / (2.0 * kPi * pc.c) * E2_minus_E1 / pc.hbar;
}

double global_bound_T_B(double a, double m, const PhysicalConstants& pc) {
  if (!std::isfinite(a) || !std::isfinite(m)) throw NonFinite("a or m");
  if (!(a > 0.0) || !(m > 0.0)) throw InvalidArgument("a and m must be positive");
  return 5.0 * kPi * pc.hbar * pc.b_wien / (16.0 * m * pc.c * a * a);
}

double wien_peak_frequency(double T, const PhysicalConstants& pc) {
  if (!std::isfinite(T)) throw NonFinite("temperature");
  if (T < 0.0) throw InvalidArgument("temperature must be >= 0");
  return 2.0 * kPi * pc.c * T / pc.b_wien;
}

ThermalLimit thermal_limit(const SpectrumResult& spectrum, const WellSpec& well,
                           const PhysicalConstants& pc) {
  const EnergyLevel* e1 = spectrum.level(1);
  const EnergyLevel* e2 = spectrum.level(2);
  if (!e1 || !e2) throw InvalidArgument("thermal limit needs E1 and E2 below the barrier");
  const double gap = e2->energy - e1->energy;
  return {temperature_limit(gap, pc), gap, global_bound_T_B(well.a, well.m, pc)};
}

}  // namespace dwell
