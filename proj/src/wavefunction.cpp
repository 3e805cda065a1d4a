#include "dwell/wavefunction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "dwell/error.hpp"
#include "dwell/quadrature.hpp"

namespace dwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMatchTol = 1e-9;
constexpr double kMaxOpacity = 300.0;
constexpr double kDipoleCrossCheckTol = 1e-10;

double parity_sign(Parity p) { return p == Parity::even ? 1.0 : -1.0; }

// cosh(y)/cosh(L) or sinh(y)/sinh(L) for |y| <= L, without overflow.
double hyperbolic_ratio(bool use_sinh, double y, double L) {
  const double ay = std::abs(y);
  const double scale = std::exp(ay - L);
  if (!use_sinh) return scale * (1.0 + std::exp(-2.0 * ay)) / (1.0 + std::exp(-2.0 * L));
  return std::copysign(scale * std::expm1(-2.0 * ay) / std::expm1(-2.0 * L), y);
}

}  // namespace

PiecewiseEigenfunction::PiecewiseEigenfunction(const ScaledWell& well, const EnergyLevel& level)
    : level_(level),
      a_(well.length_unit),
      lambda_(well.lambda),
      kappa_(well.kappa) {
  well.validate();
  if (!(level.eps > 0.0) || !(level.eps < well.kappa)) {
    throw InvalidArgument("eigenfunctions exist only for 0 < eps < kappa");
  }
  if ((level.index % 2 == 0) != (level.parity == Parity::even)) {
    throw InvalidArgument("level index and parity disagree");
  }
  alpha_ = kPi * std::sqrt(level.eps);
  beta_ = kPi * std::sqrt(well.kappa - level.eps);
  if (beta_ * lambda_ > kMaxOpacity) {
    throw MatchFailure("barrier too opaque for direct evaluation (beta*b = " +
                       std::to_string(beta_ * lambda_) + ")");
  }

  const double sn = std::sin(alpha_);
  const bool even = level.parity == Parity::even;
  const double bl = beta_ * lambda_;
  const double barrier_slope = sn * beta_ * (even ? std::tanh(bl) : 1.0 / std::tanh(bl));
  const double well_slope = -alpha_ * std::cos(alpha_);
  residual_ = std::abs(barrier_slope - well_slope) /
              std::max({std::abs(barrier_slope), std::abs(well_slope), 1e-300});
  if (!(residual_ <= kMatchTol)) {
    throw MatchFailure("derivative mismatch " + std::to_string(residual_) + " at x = b for level " +
                       std::to_string(level.index));
  }

  amp_ = 1.0;
  const double norm2 = 2.0 * scaled_half_integral(*this, *this, 0);
  amp_ = std::copysign(1.0 / std::sqrt(norm2), sn);
}

double PiecewiseEigenfunction::barrier_shape(double xs) const {
  return hyperbolic_ratio(parity() == Parity::odd, beta_ * xs, beta_ * lambda_);
}

double PiecewiseEigenfunction::barrier_shape_slope(double xs) const {
  return beta_ * hyperbolic_ratio(parity() == Parity::even, beta_ * xs, beta_ * lambda_) *
         (parity() == Parity::even ? std::tanh(beta_ * lambda_)
                                   : 1.0 / std::tanh(beta_ * lambda_));
}

RegionAmplitudes PiecewiseEigenfunction::amplitudes() const {
  const double scale = 1.0 / std::sqrt(a_);
  const double bl = beta_ * lambda_;
  const double denom = parity() == Parity::even ? std::cosh(bl) : std::sinh(bl);
  return {parity_sign(parity()) * amp_ * scale, amp_ * std::sin(alpha_) / denom * scale,
          amp_ * scale};
}

double PiecewiseEigenfunction::scaled_value(double xs) const {
  const double L = 1.0 + lambda_;
  if (xs <= -L || xs >= L) return 0.0;
  if (xs > lambda_) return amp_ * std::sin(alpha_ * (L - xs));
  if (xs < -lambda_) return parity_sign(parity()) * amp_ * std::sin(alpha_ * (L + xs));
  return amp_ * std::sin(alpha_) * barrier_shape(xs);
}

double PiecewiseEigenfunction::scaled_derivative(double xs) const {
  const double L = 1.0 + lambda_;
  if (xs < -L || xs > L) return 0.0;
  if (xs > lambda_) return -alpha_ * amp_ * std::cos(alpha_ * (L - xs));
  if (xs < -lambda_) return parity_sign(parity()) * alpha_ * amp_ * std::cos(alpha_ * (L + xs));
  return amp_ * std::sin(alpha_) * barrier_shape_slope(xs);
}

double PiecewiseEigenfunction::value(double x) const {
  return scaled_value(x / a_) / std::sqrt(a_);
}

double PiecewiseEigenfunction::derivative(double x) const {
  return scaled_derivative(x / a_) / (a_ * std::sqrt(a_));
}

PiecewiseEigenfunction PiecewiseEigenfunction::negated() const {
  PiecewiseEigenfunction copy = *this;
  copy.amp_ = -amp_;
  return copy;
}

int PiecewiseEigenfunction::count_nodes(int samples) const {
  const double L = 1.0 + lambda_;
  int nodes = 0;
  double prev = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double xs = -L + (i + 0.5) * 2.0 * L / samples;
    const double v = scaled_value(xs);
    if (v != 0.0) {
      if (prev != 0.0 && (v > 0.0) != (prev > 0.0)) ++nodes;
      prev = v;
    }
  }
  return nodes;
}

double scaled_half_integral(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g,
                            int k) {
  if (f.lambda_ != g.lambda_ || f.kappa_ != g.kappa_ || f.a_ != g.a_) {
    throw InvalidArgument("integrals need eigenfunctions of the same well");
  }
  const double lambda = f.lambda_;
  const bool f_even = f.parity() == Parity::even;
  const bool g_even = g.parity() == Parity::even;

  // Barrier [0, b]: products of cosh/sinh reduce to sum/difference frequencies.
  const double sigma = f.beta_ + g.beta_;
  const double delta = f.beta_ - g.beta_;
  double shape = 0.0;
  if (f_even && g_even) {
    shape = 0.5 * (quad::cosh_moment(k, sigma, lambda) + quad::cosh_moment(k, delta, lambda));
  } else if (!f_even && !g_even) {
    shape = 0.5 * (quad::cosh_moment(k, sigma, lambda) - quad::cosh_moment(k, delta, lambda));
  } else if (!f_even) {
    shape = 0.5 * (quad::sinh_moment(k, sigma, lambda) + quad::sinh_moment(k, delta, lambda));
  } else {
    shape = 0.5 * (quad::sinh_moment(k, sigma, lambda) - quad::sinh_moment(k, delta, lambda));
  }
  auto denom = [lambda](const PiecewiseEigenfunction& e, bool even) {
    const double bl = e.beta_ * lambda;
    return even ? std::cosh(bl) : std::sinh(bl);
  };
  const double barrier = f.amp_ * std::sin(f.alpha_) * g.amp_ * std::sin(g.alpha_) * shape /
                         (denom(f, f_even) * denom(g, g_even));

  // Right well, u = a + b - x in [0, a].
  const double pm = f.alpha_ - g.alpha_;
  const double pp = f.alpha_ + g.alpha_;
  const double c0 = quad::cos_moment(0, pm, 1.0) - quad::cos_moment(0, pp, 1.0);
  double well = 0.5 * c0;
  if (k == 1) {
    const double c1 = quad::cos_moment(1, pm, 1.0) - quad::cos_moment(1, pp, 1.0);
    well = 0.5 * ((1.0 + lambda) * c0 - c1);
  }
  return barrier + f.amp_ * g.amp_ * well;
}

PiecewiseEigenfunction build_eigenfunction(const WellSpec& well, const EnergyLevel& level,
                                           const PhysicalConstants& pc) {
  return PiecewiseEigenfunction(to_dimensionless(well, pc), level);
}

double overlap(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g) {
  const double sign = parity_sign(f.parity()) * parity_sign(g.parity());
  return sign > 0.0 ? 2.0 * scaled_half_integral(f, g, 0) : 0.0;
}

double position_matrix_element(const PiecewiseEigenfunction& f,
                               const PiecewiseEigenfunction& g) {
  const double sign = parity_sign(f.parity()) * parity_sign(g.parity());
  return sign < 0.0 ? 2.0 * scaled_half_integral(f, g, 1) * f.well_width() : 0.0;
}

double right_half_overlap(const PiecewiseEigenfunction& f, const PiecewiseEigenfunction& g) {
  return scaled_half_integral(f, g, 0);
}

double dipole_matrix_element(const PiecewiseEigenfunction& psi0,
                             const PiecewiseEigenfunction& psi1) {
  if (psi0.parity() == psi1.parity()) {
    throw InvalidArgument("dipole matrix element needs opposite parities");
  }
  const double a = psi0.well_width();
  const double closed = position_matrix_element(psi0, psi1) / a;

  const double L = 1.0 + psi0.half_width() / a;
  const double lam = psi0.half_width() / a;
  const std::array<double, 5> cuts{-L, -lam, 0.0, lam, L};
  const double numeric = quad::integrate_piecewise(
      [&](double xs) { return xs * psi0.scaled_value(xs) * psi1.scaled_value(xs); }, cuts, 1e-13);

  if (std::abs(numeric - closed) > kDipoleCrossCheckTol * std::max(std::abs(closed), 1e-3)) {
    throw QuadratureFailure("dipole closed form " + std::to_string(closed) +
                            " disagrees with quadrature " + std::to_string(numeric));
  }
  return std::abs(closed) * a;
}

LocalizedState::LocalizedState(PiecewiseEigenfunction psi0, PiecewiseEigenfunction psi1,
                               Side side, const PhysicalConstants& pc)
    : psi0_(std::move(psi0)), psi1_(std::move(psi1)), side_(side), hbar_(pc.hbar) {
  if (!(psi1_.level().energy > psi0_.level().energy)) {
    throw InvalidArgument("localized states need E1 > E0");
  }
  if (position_matrix_element(psi0_, psi1_) < 0.0) psi1_ = psi1_.negated();
}

LocalizedState LocalizedState::mirrored() const {
  LocalizedState copy = *this;
  copy.side_ = side_ == Side::left ? Side::right : Side::left;
  return copy;
}

double LocalizedState::omega() const {
  return (psi1_.level().energy - psi0_.level().energy) / hbar_;
}

double LocalizedState::Omega() const {
  return (psi0_.level().energy + psi1_.level().energy) / (2.0 * hbar_);
}

std::complex<double> LocalizedState::combine(double v0, double v1, double t) const {
  const std::complex<double> p0 = std::polar(1.0, -psi0_.level().energy * t / hbar_);
  const std::complex<double> p1 = std::polar(1.0, -psi1_.level().energy * t / hbar_);
  const double s = side_ == Side::left ? 1.0 : -1.0;
  return (p0 * v0 + s * p1 * v1) / std::numbers::sqrt2;
}

std::complex<double> LocalizedState::value(double x, double t) const {
  return combine(psi0_.value(x), psi1_.value(x), t);
}

std::complex<double> LocalizedState::derivative(double x, double t) const {
  return combine(psi0_.derivative(x), psi1_.derivative(x), t);
}

std::complex<double> localized_state_value(const LocalizedState& state, double x, double t) {
  return state.value(x, t);
}

}  // namespace dwell
