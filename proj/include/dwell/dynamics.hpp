#pragma once

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "dwell/basis.hpp"
#include "dwell/spectrum.hpp"
#include "dwell/units.hpp"
#include "dwell/wavefunction.hpp"

namespace dwell {

/// The two lowest levels of a well plus the dipole element d = |<psi0|x|psi1>|.
struct TwoLevelSystem {
  double E0 = 0.0;     // J
  double E1 = 0.0;     // J
  double d = 0.0;      // m
  double hbar = 0.0;   // J s

  double omega() const { return (E1 - E0) / hbar; }          // rad/s
  double Omega() const { return (E0 + E1) / (2.0 * hbar); }  // rad/s
  double E_prime() const { return 0.5 * (E0 + E1); }
  double period() const;  // 2 pi / omega
};

/// Throws InvalidArgument unless E1 > E0, d >= 0 and everything is finite.
/// When `B` is given also requires hbar*omega < (5/4) B.
TwoLevelSystem make_two_level_system(double E0, double E1, double d,
                                     const PhysicalConstants& pc = constants(),
                                     std::optional<double> B = std::nullopt);

/// Solves the well, builds psi0/psi1 and the dipole. Propagates DegenerateGap.
TwoLevelSystem two_level_system(const WellSpec& well, const PhysicalConstants& pc = constants());

struct TwoByTwoOperator {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  Basis basis = Basis::energy;

  /// The operator in `target`; O M O when the tags differ.
  TwoByTwoOperator in(Basis target) const;
};

struct HarmonicDrive {
  double amplitude = 0.0;    // A (J)
  double omega_prime = 0.0;  // rad/s

  void validate() const;
};

struct ProbabilityPair {
  double first = 0.0;
  double second = 0.0;
};

struct Amplitudes {
  std::complex<double> first;
  std::complex<double> second;
};

/// <x>(t) = +d cos(omega t) for psi_L, -d cos(omega t) for psi_R.
double x_expectation(const TwoLevelSystem& sys, Side side, double t);

struct PerturbationMatrices {
  TwoByTwoOperator H;        // diag(E0, E1)
  TwoByTwoOperator H_prime;  // E' Identity
  TwoByTwoOperator W;        // H' - H
  TwoByTwoOperator H_tilde;  // O H O
  TwoByTwoOperator W_tilde;  // O W O
};

PerturbationMatrices perturbation_matrices(const TwoLevelSystem& sys);

/// phi reduced to [0, pi).
double normalize_phase(double phi);

/// (P_L, P_R) with P_L = sin^2(omega t / 2 + phi).
ProbabilityPair flip_flop(const TwoLevelSystem& sys, double phi, double t);

/// Rabi frequencies for the energy-basis drive.
struct RabiFrequencies {
  double R0 = 0.0;
  double R1 = 0.0;
  double detuning = 0.0;  // Omega' = omega' - omega
};

RabiFrequencies rabi_frequencies(const TwoLevelSystem& sys, const HarmonicDrive& drive);

/// (P0, P1) from c0(0) = 1: P1 = (R1/R0)^2 sin^2(R0 t).
ProbabilityPair rabi_off_resonance(const TwoLevelSystem& sys, const HarmonicDrive& drive,
                                   double t);

/// (c0, c1) in the interaction picture:
///   i c0' = R1 exp(+i Omega' t) c1,  i c1' = R1 exp(-i Omega' t) c0.
Amplitudes rabi_amplitudes(const TwoLevelSystem& sys, const HarmonicDrive& drive, double t);

/// R0' = sqrt((A/hbar)^2 + (omega'/2)^2).
double rabi_LR_frequency(const TwoLevelSystem& sys, const HarmonicDrive& drive);

/// (P_L, P_R) from c_R(0) = 1: P_L = (R1/R0')^2 sin^2(R0' t).
ProbabilityPair rabi_LR(const TwoLevelSystem& sys, const HarmonicDrive& drive, double t);

/// (c_L, c_R) for i c_L' = R1 exp(+i omega' t) c_R, i c_R' = R1 exp(-i omega' t) c_L.
Amplitudes rabi_LR_amplitudes(const TwoLevelSystem& sys, const HarmonicDrive& drive, double t);

/// The second drive choice: (A/2) [[1, -1], [1, -1]] in the energy basis, which is
/// A [[0, 1], [0, 0]] in the localized one.
TwoByTwoOperator lr_coupling_matrix(double A);

/// First-order amplitude for V(t) = A exp(-i omega' t) + A* exp(+i omega' t):
///   c = A_mn (1 - exp(i(w_mn - w') t)) / (E_m - E_n - hbar w')
///     + A*_mn (1 - exp(i(w_mn + w') t)) / (E_m - E_n + hbar w')
/// Throws ResonantDenominator when |E_m - E_n -+ hbar w'| < 1e-12 (E_m + E_n).
std::complex<double> transition_amplitude(double E_n, double E_m, std::complex<double> A_mn,
                                          std::complex<double> A_star_mn, double omega_prime,
                                          double t, const PhysicalConstants& pc = constants());

}  // namespace dwell
