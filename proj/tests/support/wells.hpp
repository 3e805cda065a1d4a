#pragma once

#include <array>

#include "dwell/units.hpp"

namespace dwell::testing {

inline constexpr double kTableK = 2e-24;
inline constexpr double kTableA = 1e-6;
inline constexpr std::array<double, 7> kTableB{100e-9,       116.65290e-9, 136.07900e-9,
                                               158.74011e-9, 185.17494e-9, 216.01195e-9,
                                               251.98421e-9};

inline WellSpec table_well(double b, const PhysicalConstants& pc = PhysicalConstants::codata()) {
  return {kTableA, b, kTableK, pc.m_e};
}

inline ScaledWell unit_well(double kappa, double lambda) { return {kappa, lambda, 1.0, 1.0}; }

}  // namespace dwell::testing
