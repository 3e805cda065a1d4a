#pragma once

#include <complex>

#include "dwell/spectrum.hpp"
#include "dwell/units.hpp"

namespace dwell {

/// Real amplitudes of a below-barrier eigenfunction (1/sqrt(m)).
/// In the right well psi = right * sin(alpha (a + b - x)); in the barrier
/// psi = barrier * cosh(beta x) for even levels, barrier * sinh(beta x) for
/// odd ones; the left well mirrors the right one with the level's parity.
struct RegionAmplitudes {
  double left = 0.0;
  double barrier = 0.0;
  double right = 0.0;
};

/// Normalized analytic eigenfunction of the double square well. Zero outside
/// [-(a+b), a+b]; positive at x -> 0+ for every level.
class PiecewiseEigenfunction {
 public:
  /// Throws MatchFailure when the derivative mismatch at x = b exceeds 1e-9
  /// relative (a sign that `level` is not an eigenvalue of this well).
  PiecewiseEigenfunction(const ScaledWell& well, const EnergyLevel& level);

  const EnergyLevel& level() const { return level_; }
  Parity parity() const { return level_.parity; }

  double alpha() const { return alpha_ / a_; }  // sqrt(2 m E) / hbar (1/m)
  double beta() const { return beta_ / a_; }    // sqrt(2 m (k - E)) / hbar (1/m)
  double well_width() const { return a_; }
  double half_width() const { return a_ * lambda_; }
  double extent() const { return a_ * (1.0 + lambda_); }
  RegionAmplitudes amplitudes() const;
  double norm_constant() const { return amplitudes().right; }
  double matching_residual() const { return residual_; }

  double value(double x) const;       // 1/sqrt(m)
  double derivative(double x) const;  // 1/m^(3/2)

  // Same functions with x in units of a and psi in units of 1/sqrt(a).
  double scaled_value(double xs) const;
  double scaled_derivative(double xs) const;

  /// The same state with the opposite global sign.
  PiecewiseEigenfunction negated() const;

  /// Sign changes on a uniform grid of `samples` interior points.
  int count_nodes(int samples = 10000) const;

  /// int_0^{a+b} x^k f g dx in scaled units (k in {0, 1}), closed form.
  friend double scaled_half_integral(const PiecewiseEigenfunction& f,
                                     const PiecewiseEigenfunction& g, int k);

 private:
  PiecewiseEigenfunction() = default;
  double barrier_shape(double xs) const;
  double barrier_shape_slope(double xs) const;

  EnergyLevel level_;
  double a_ = 1.0;       // length unit (m)
  double lambda_ = 0.0;  // b / a
  double kappa_ = 0.0;
  double alpha_ = 0.0;   // pi sqrt(eps)
  double beta_ = 0.0;    // pi sqrt(kappa - eps)
  double amp_ = 0.0;     // right-well amplitude, scaled units
  double residual_ = 0.0;
};

PiecewiseEigenfunction build_eigenfunction(const WellSpec& well, const EnergyLevel& level,
                                           const PhysicalConstants& pc = constants());

/// <f|g> over the whole well (dimensionless).
double overlap(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g);

/// <f|x|g> (m), signed. Zero by parity when f and g share a parity.
double position_matrix_element(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g);

/// int_0^{a+b} f g dx (dimensionless).
double right_half_overlap(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g);

/// d = |<psi0|x|psi1>| (m). The closed form is cross-checked by adaptive
/// Simpson; QuadratureFailure if they disagree by more than 1e-10 relative.
/// Requires opposite parities.
double dipole_matrix_element(const PiecewiseEigenfunction& psi0,
                             const PiecewiseEigenfunction& psi1);

enum class Side { left, right };

/// psi_{L,R}(x, t) = (exp(-i E0 t/hbar) psi0(x) +- exp(-i E1 t/hbar) psi1(x)) / sqrt(2).
/// psi1's sign is fixed so that d = <psi0|x|psi1> > 0, hence <x>_L(0) = +d: with the
/// positive-at-0+ convention psi_L carries its weight at x > 0.
class LocalizedState {
 public:
  LocalizedState(PiecewiseEigenfunction psi0, PiecewiseEigenfunction psi1, Side side,
                 const PhysicalConstants& pc = constants());

  const PiecewiseEigenfunction& psi0() const { return psi0_; }
  const PiecewiseEigenfunction& psi1() const { return psi1_; }
  Side side() const { return side_; }
  LocalizedState mirrored() const;

  double omega() const;  // (E1 - E0) / hbar
  double Omega() const;  // (E0 + E1) / (2 hbar)
  double hbar() const { return hbar_; }

  std::complex<double> value(double x, double t) const;
  std::complex<double> derivative(double x, double t) const;

 private:
  std::complex<double> combine(double v0, double v1, double t) const;

  PiecewiseEigenfunction psi0_;
  PiecewiseEigenfunction psi1_;
  Side side_;
  double hbar_;
};

std::complex<double> localized_state_value(const LocalizedState& state, double x, double t);

}  // namespace dwell
