#pragma once

#include <string_view>

namespace dwell {

/// Physical constants in SI. Two conventions exist and differ only in the
/// electron mass: `paper` uses m_e = 9.1e-31 kg, `codata` the CODATA 2018 value.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;   // J s
  double m_e = 9.1e-31;            // kg
  double c = 2.99792458e8;         // m/s
  double b_wien = 2.897771955e-3;  // m K

  static PhysicalConstants paper();
  static PhysicalConstants codata();
  /// Parses "paper" or "codata"; throws ConfigError otherwise.
  static PhysicalConstants from_name(std::string_view name);
};

/// Process-wide constants, selected once from DWELL_CONSTANTS (default paper).
const PhysicalConstants& constants();

/// The double square well: walls at +-(a+b), barrier of height k on [-b, b].
struct WellSpec {
  double a = 0.0;  // lateral well width (m)
  double b = 0.0;  // barrier half-width (m)
  double k = 0.0;  // barrier height (J)
  double m = 0.0;  // particle mass (kg)

  /// Throws InvalidArgument unless every field is finite and positive.
  void validate() const;
};

/// Dimensionless form of a well: energies in units of B, lengths in units of a.
/// The two unit fields carry what is needed to map results back to SI; a
/// purely dimensionless well leaves them at 1.
struct ScaledWell {
  double kappa = 0.0;   // k / B
  double lambda = 0.0;  // b / a
  double energy_unit = 1.0;  // B in J
  double length_unit = 1.0;  // a in m

  void validate() const;
};

/// B = pi^2 hbar^2 / (2 m a^2): the ground pair always lies in (B/4, B).
double barrier_bound(const WellSpec& spec, const PhysicalConstants& pc = constants());

ScaledWell to_dimensionless(const WellSpec& spec, const PhysicalConstants& pc = constants());
WellSpec from_dimensionless(const ScaledWell& well, const PhysicalConstants& pc = constants());

/// k >= 10 B, the regime where the lowest pair is well separated from the rest.
bool is_big_barrier(const ScaledWell& well);

}  // namespace dwell
