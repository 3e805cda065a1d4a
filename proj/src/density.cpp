#include "dwell/density.hpp"

#include <cmath>
#include <numbers>

#include "dwell/error.hpp"

namespace dwell {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kPureTol = 1e-12;
constexpr double kAmbiguousTol = 1e-9;

}  // namespace

CompositeState CompositeState::make(const Eigen::Matrix2cd& coeffs) {
  if (!coeffs.allFinite()) throw NonFinite("composite state coefficients");
  const double n = coeffs.squaredNorm();
  if (std::abs(n - 1.0) > kNormTol) {
    throw InvalidArgument("composite state is not normalized (sum |c|^2 = " + std::to_string(n) +
                          ")");
  }
  return {coeffs};
}

double DensityMatrix::trace() const { return rho.trace().real(); }

double DensityMatrix::purity() const { return (rho * rho).trace().real(); }

void DensityMatrix::validate() const {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kNormTol) {
    throw InvalidArgument("density matrix is not Hermitian");
  }
  if (std::abs(rho.trace() - 1.0) > kNormTol) throw InvalidArgument("density matrix trace != 1");
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(rho, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -kNormTol) {
    throw InvalidArgument("density matrix has a negative eigenvalue");
  }
}

std::string_view to_string(Purity p) {
  switch (p) {
    case Purity::pure: return "pure";
    case Purity::mixed: return "mixed";
    case Purity::ambiguous: return "ambiguous";
  }
  return "?";
}

Purity classify(const CompositeState& state) {
  const double det = std::abs(state.c.determinant());
  if (det < kPureTol) return Purity::pure;
  if (det <= kAmbiguousTol) return Purity::ambiguous;
  return Purity::mixed;
}

bool is_pure(const CompositeState& state) { return std::abs(state.c.determinant()) < kPureTol; }

DensityMatrix reduce(const CompositeState& state) {
  DensityMatrix d{state.c * state.c.adjoint(), Basis::energy};
  d.validate();
  return d;
}

double expectation(const DensityMatrix& rho, const Observable& f) {
  if (rho.basis != f.basis) {
    throw BasisMismatch("density matrix is in the " + std::string(to_string(rho.basis)) +
                        " basis, observable in the " + std::string(to_string(f.basis)));
  }
  const double scale = std::max(1.0, f.f.cwiseAbs().maxCoeff());
  if ((f.f - f.f.adjoint()).cwiseAbs().maxCoeff() > kNormTol * scale) {
    throw InvalidArgument("observable is not Hermitian");
  }
  const std::complex<double> v = (f.f * rho.rho).trace();
  if (std::abs(v.imag()) > kNormTol * scale) {
    throw InvalidArgument("expectation has an imaginary part");
  }
  return v.real();
}

DensityMatrix change_basis(const DensityMatrix& rho, Basis target) {
  if (rho.basis == target) return rho;
  return {rotate(rho.rho), target};
}

double coherence_magnitude(const DensityMatrix& rho) { return std::abs(rho.rho(0, 1)); }

CompositeState momix_state(std::complex<double> c_L, std::complex<double> c_R) {
  const double s = 1.0 / std::numbers::sqrt2;
  Eigen::Matrix2cd c;
  c << s * c_L, s * c_R,
       s * c_L, -s * c_R;
  return CompositeState::make(c);
}

std::vector<ExampleState> example_states() {
  const double r2 = 1.0 / std::numbers::sqrt2;
  const double r3 = 1.0 / std::numbers::sqrt3;
  const double h3 = std::numbers::sqrt3 / 2.0;
  const double q3 = std::numbers::sqrt3 / 4.0;
  auto state = [](double pa, double pb, double ma, double mb) {
    Eigen::Matrix2cd c;
    c << pa, pb, ma, mb;
    return CompositeState::make(c);
  };
  return {
      {"(psi+ phi_b + psi- phi_b)/sqrt2", state(0, r2, 0, r2), Purity::pure},
      {"1/2 psi- phi_b + sqrt3/2 psi- phi_a", state(0, 0, h3, 0.5), Purity::pure},
      {"(1/2 psi- - sqrt3/2 psi+)(1/2 phi_b + sqrt3/2 phi_a)", state(-0.75, -q3, q3, 0.25),
       Purity::pure},
      {"(psi- phi_a + psi+ phi_b)/sqrt2", state(0, r2, r2, 0), Purity::mixed},
      {"(psi- phi_b + psi+ phi_a)/sqrt2", state(r2, 0, 0, r2), Purity::mixed},
      {"(psi+ phi_a + psi+ phi_b + psi- phi_a)/sqrt3", state(r3, r3, r3, 0), Purity::mixed},
  };
}

}  // namespace dwell
