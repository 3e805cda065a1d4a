#pragma once

#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dwell/basis.hpp"

namespace dwell {

/// Coefficients c[j][k] of a system (rows: psi+, psi-) times environment
/// (columns: phi_alpha, phi_beta) state.
struct CompositeState {
  Eigen::Matrix2cd c = Eigen::Matrix2cd::Zero();

  /// Throws InvalidArgument unless sum |c|^2 = 1 within 1e-12.
  static CompositeState make(const Eigen::Matrix2cd& coeffs);
};

struct DensityMatrix {
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  Basis basis = Basis::energy;

  double trace() const;
  double purity() const;  // Tr(rho^2)
  /// Throws InvalidArgument if rho is not Hermitian, unit-trace and PSD (1e-12).
  void validate() const;
};

/// A Hermitian 2x2 observable with its basis tag.
struct Observable {
  Eigen::Matrix2cd f = Eigen::Matrix2cd::Zero();
  Basis basis = Basis::energy;
};

enum class Purity { pure, mixed, ambiguous };

std::string_view to_string(Purity p);

/// pure when |det c| < 1e-12, ambiguous when it lies in [1e-12, 1e-9].
Purity classify(const CompositeState& state);
bool is_pure(const CompositeState& state);

/// rho = c c^dagger in the energy basis.
DensityMatrix reduce(const CompositeState& state);

/// Tr(f rho). Throws BasisMismatch when the tags differ and InvalidArgument when
/// f is not Hermitian.
double expectation(const DensityMatrix& rho, const Observable& f);

/// O rho O, retagged to `target`. A no-op when already in `target`.
DensityMatrix change_basis(const DensityMatrix& rho, Basis target);

/// |rho_01| in the tagged basis.
double coherence_magnitude(const DensityMatrix& rho);

/// c_L psiL phi_alpha + c_R psiR phi_beta, written over psi+- .
CompositeState momix_state(std::complex<double> c_L, std::complex<double> c_R);

struct ExampleState {
  std::string label;
  CompositeState state;
  Purity expected;
};

/// The three pure and three mixed composite states used as illustrations.
std::vector<ExampleState> example_states();

}  // namespace dwell
