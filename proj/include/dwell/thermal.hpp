#pragma once

#include "dwell/spectrum.hpp"
#include "dwell/units.hpp"

namespace dwell {

struct ThermalLimit {
  double T_max = 0.0;     // K
  double E_gap_12 = 0.0;  // E2 - E1 (J)
  double T_B = 0.0;       // K
};

/// T_max = (b_W / (2 pi c)) (E2 - E1) / hbar. Requires a positive gap.
double temperature_limit(double E2_minus_E1, const PhysicalConstants& pc = constants());

/// T_B = 5 pi hbar b_W / (16 m c a^2).
double global_bound_T_B(double a, double m, const PhysicalConstants& pc = constants());

/// omega' = 2 pi c T / b_W. Requires T >= 0.
double wien_peak_frequency(double T, const PhysicalConstants& pc = constants());

/// Both temperatures for a solved well. Throws InvalidArgument when E2 is above
/// the barrier.
ThermalLimit thermal_limit(const SpectrumResult& spectrum, const WellSpec& well,
                           const PhysicalConstants& pc = constants());

}  // namespace dwell
