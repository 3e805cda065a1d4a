#include "dwell/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "dwell/error.hpp"

namespace dwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kResonanceTol = 1e-12;

bool finite(double x) { return std::isfinite(x); }

}  // namespace

double TwoLevelSystem::period() const { return 2.0 * kPi / omega(); }

TwoLevelSystem make_two_level_system(double E0, double E1, double d, const PhysicalConstants& pc,
                                     std::optional<double> B) {
  if (!finite(E0) || !finite(E1) || !finite(d)) throw NonFinite("two-level system input");
  if (!(E1 > E0)) throw InvalidArgument("two-level system needs E1 > E0");
  if (d < 0.0) throw InvalidArgument("dipole element must be non-negative");
  if (B && !(E1 - E0 < 1.25 * *B)) {
    throw InvalidArgument("hbar*omega must stay below 5B/4 for a two-level description");
  }
  return {E0, E1, d, pc.hbar};
}

TwoLevelSystem two_level_system(const WellSpec& well, const PhysicalConstants& pc) {
  const ScaledWell scaled = to_dimensionless(well, pc);
  const LevelPair pair = solve_pair(0, scaled);
  if (!pair.odd) throw InvalidArgument("E1 is above the barrier");
  gap01(SpectrumResult{{pair.even, *pair.odd}, scaled, {}}, pc);
  const PiecewiseEigenfunction psi0(scaled, pair.even);
  const PiecewiseEigenfunction psi1(scaled, *pair.odd);
  return make_two_level_system(pair.even.energy, pair.odd->energy,
                               dipole_matrix_element(psi0, psi1), pc, scaled.energy_unit);
}

TwoByTwoOperator TwoByTwoOperator::in(Basis target) const {
  if (target == basis) return *this;
  return {rotate(m), target};
}

void HarmonicDrive::validate() const {
  if (!finite(amplitude) || !finite(omega_prime)) throw NonFinite("drive parameters");
  if (amplitude < 0.0) throw InvalidArgument("drive amplitude must be >= 0");
  if (omega_prime < 0.0) throw InvalidArgument("drive frequency must be >= 0");
}

double x_expectation(const TwoLevelSystem& sys, Side side, double t) {
  const double s = side == Side::left ? 1.0 : -1.0;
  return s * sys.d * std::cos(sys.omega() * t);
}

PerturbationMatrices perturbation_matrices(const TwoLevelSystem& sys) {
  PerturbationMatrices p;
  p.H.m << sys.E0, 0.0, 0.0, sys.E1;
  p.H_prime.m = Eigen::Matrix2cd::Identity() * sys.E_prime();
  p.W.m = p.H_prime.m - p.H.m;
  p.H_tilde = p.H.in(Basis::localized);
  p.W_tilde = p.W.in(Basis::localized);
  return p;
}

double normalize_phase(double phi) {
  double r = std::fmod(phi, kPi);
  if (r < 0.0) r += kPi;
  if (r >= kPi) r = 0.0;
  return r;
}

ProbabilityPair flip_flop(const TwoLevelSystem& sys, double phi, double t) {
  const double s = std::sin(0.5 * sys.omega() * t + normalize_phase(phi));
  const double pl = s * s;
  return {pl, 1.0 - pl};
}

RabiFrequencies rabi_frequencies(const TwoLevelSystem& sys, const HarmonicDrive& drive) {
  drive.validate();
  const double R1 = drive.amplitude / sys.hbar;
  const double detuning = drive.omega_prime - sys.omega();
  return {std::hypot(R1, 0.5 * detuning), R1, detuning};
}

ProbabilityPair rabi_off_resonance(const TwoLevelSystem& sys, const HarmonicDrive& drive,
                                   double t) {
  const RabiFrequencies f = rabi_frequencies(sys, drive);
  if (f.R0 == 0.0) return {1.0, 0.0};
  const double s = std::sin(f.R0 * t);
  const double ratio = f.R1 / f.R0;
  const double p1 = ratio * ratio * s * s;
  return {1.0 - p1, p1};
}

Amplitudes rabi_amplitudes(const TwoLevelSystem& sys, const HarmonicDrive& drive, double t) {
  const RabiFrequencies f = rabi_frequencies(sys, drive);
  if (f.R0 == 0.0) return {1.0, 0.0};
  using namespace std::complex_literals;
  const double c = std::cos(f.R0 * t);
  const double s = std::sin(f.R0 * t);
  const std::complex<double> half_phase = std::polar(1.0, 0.5 * f.detuning * t);
  const std::complex<double> c0 = half_phase * (c - 1i * (f.detuning / (2.0 * f.R0)) * s);
  const std::complex<double> c1 = -1i * (f.R1 / f.R0) * std::conj(half_phase) * s;
  return {c0, c1};
}

double rabi_LR_frequency(const TwoLevelSystem& sys, const HarmonicDrive& drive) {
  drive.validate();
  return std::hypot(drive.amplitude / sys.hbar, 0.5 * drive.omega_prime);
}

ProbabilityPair rabi_LR(const TwoLevelSystem& sys, const HarmonicDrive& drive, double t) {
  const double R0 = rabi_LR_frequency(sys, drive);
  if (R0 == 0.0) return {0.0, 1.0};
  const double ratio = drive.amplitude / sys.hbar / R0;
  const double s = std::sin(R0 * t);
  const double pl = ratio * ratio * s * s;
  return {pl, 1.0 - pl};
}

Amplitudes rabi_LR_amplitudes(const TwoLevelSystem& sys, const HarmonicDrive& drive, double t) {
  const double R0 = rabi_LR_frequency(sys, drive);
  if (R0 == 0.0) return {0.0, 1.0};
  using namespace std::complex_literals;
  const double R1 = drive.amplitude / sys.hbar;
  const double w = drive.omega_prime;
  const double c = std::cos(R0 * t);
  const double s = std::sin(R0 * t);
  const std::complex<double> half_phase = std::polar(1.0, 0.5 * w * t);
  const std::complex<double> cL = -1i * (R1 / R0) * half_phase * s;
  const std::complex<double> cR = std::conj(half_phase) * (c + 1i * (w / (2.0 * R0)) * s);
  return {cL, cR};
}

TwoByTwoOperator lr_coupling_matrix(double A) {
  TwoByTwoOperator op;
  op.m << 0.5 * A, -0.5 * A, 0.5 * A, -0.5 * A;
  op.basis = Basis::energy;
  return op;
}

std::complex<double> transition_amplitude(double E_n, double E_m, std::complex<double> A_mn,
                                          std::complex<double> A_star_mn, double omega_prime,
                                          double t, const PhysicalConstants& pc) {
  const double hw = pc.hbar * omega_prime;
  const double minus = E_m - E_n - hw;
  const double plus = E_m - E_n + hw;
  const double scale = kResonanceTol * std::abs(E_m + E_n);
  if (std::abs(minus) < scale || std::abs(plus) < scale) {
    throw ResonantDenominator("drive is resonant with the m <- n transition");
  }
  const double w_mn = (E_m - E_n) / pc.hbar;
  // 1 - exp(i theta) = -2i sin(theta/2) exp(i theta/2), exact at theta = 0.
  auto one_minus_exp = [](double theta) {
    using namespace std::complex_literals;
    return -2.0i * std::sin(0.5 * theta) * std::polar(1.0, 0.5 * theta);
  };
  return A_mn * one_minus_exp((w_mn - omega_prime) * t) / minus +
         A_star_mn * one_minus_exp((w_mn + omega_prime) * t) / plus;
}

}  // namespace dwell
