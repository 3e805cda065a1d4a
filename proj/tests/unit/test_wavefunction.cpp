#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "dwell/error.hpp"
#include "dwell/oracle.hpp"
#include "dwell/wavefunction.hpp"
#include "wells.hpp"

using namespace dwell;
using dwell::testing::table_well;
using dwell::testing::unit_well;

namespace {

std::vector<PiecewiseEigenfunction> eigenfunctions(const ScaledWell& w) {
  std::vector<PiecewiseEigenfunction> out;
  for (const auto& l : solve_below_barrier(w).levels) out.emplace_back(w, l);
  return out;
}

}  // namespace

TEST_CASE("orthonormal set") {
  const ScaledWell w = unit_well(40.0, 0.8);
  const auto fs = eigenfunctions(w);
  REQUIRE(fs.size() == 12);
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = 0; j < fs.size(); ++j) {
      CAPTURE(i);
      CAPTURE(j);
      const double o = overlap(fs[i], fs[j]);
      CHECK(std::abs(o - (i == j ? 1.0 : 0.0)) < 1e-11);
    }
  }
}

TEST_CASE("continuity, sign and nodes") {
  const ScaledWell w = unit_well(33.0, 0.3);
  for (const auto& f : eigenfunctions(w)) {
    CAPTURE(f.level().index);
    const double b = w.lambda;
    const double h = 1e-9;
    CHECK(f.scaled_value(b - h) == doctest::Approx(f.scaled_value(b + h)).epsilon(1e-6));
    CHECK(f.scaled_derivative(b - h) ==
          doctest::Approx(f.scaled_derivative(b + h)).epsilon(1e-6).scale(1.0));
    CHECK(f.scaled_value(1e-6) > 0.0);
    CHECK(f.scaled_value(1.0 + w.lambda) == 0.0);
    CHECK(f.count_nodes() == f.level().index);
    CHECK(f.matching_residual() < 1e-9);
    const double x = 0.37;
    const double mirror = f.parity() == Parity::even ? 1.0 : -1.0;
    CHECK(f.scaled_value(-x) == doctest::Approx(mirror * f.scaled_value(x)));
  }
}

TEST_CASE("amplitudes describe the same function") {
  const auto pc = PhysicalConstants::codata();
  const WellSpec spec = table_well(100e-9, pc);
  const SpectrumResult s = solve_below_barrier(spec, pc);
  const PiecewiseEigenfunction f = build_eigenfunction(spec, s.levels[1], pc);
  const RegionAmplitudes amp = f.amplitudes();
  const double x = 0.5 * spec.b;
  CHECK(f.value(x) == doctest::Approx(amp.barrier * std::sinh(f.beta() * x)).epsilon(1e-12));
  const double xr = spec.b + 0.3 * spec.a;
  CHECK(f.value(xr) == doctest::Approx(amp.right * std::sin(f.alpha() * (spec.a + spec.b - xr)))
                           .epsilon(1e-12));
  CHECK(amp.left == doctest::Approx(-amp.right));
}

TEST_CASE("dipole element, closed form and quadrature") {
  const ScaledWell w = unit_well(40.0, 0.8);
  const auto fs = eigenfunctions(w);
  const double d = dipole_matrix_element(fs[0], fs[1]);
  CHECK(d > 0.0);
  CHECK(d < 1.0 + w.lambda);
  CHECK_THROWS_AS(dipole_matrix_element(fs[0], fs[2]), InvalidArgument);
  CHECK(position_matrix_element(fs[0], fs[2]) == 0.0);
  CHECK(right_half_overlap(fs[0], fs[0]) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("eigenfunctions agree with the grid oracle") {
  const auto pc = PhysicalConstants::codata();
  const WellSpec spec = table_well(100e-9, pc);
  const SpectrumResult s = solve_below_barrier(spec, pc);
  const GridHamiltonian h = build_grid_hamiltonian(spec, 20000, pc);
  const auto energies = lowest_eigenvalues(h, 2);
  const double sa = std::sqrt(spec.a);
  std::vector<PiecewiseEigenfunction> fs;
  for (int k = 0; k < 2; ++k) {
    const auto v = eigenvector(h, energies[k], s.levels[k].parity);
    const PiecewiseEigenfunction f = build_eigenfunction(spec, s.levels[k], pc);
    double worst = 0.0;
    for (int i = 0; i < h.n; ++i) worst = std::max(worst, std::abs(v[i] - f.value(h.x(i))) * sa);
    CHECK(worst < 1e-3);
    fs.push_back(f);
  }
  const auto v0 = eigenvector(h, energies[0], Parity::even);
  const auto v1 = eigenvector(h, energies[1], Parity::odd);
  double grid_d = 0.0;
  for (int i = 0; i < h.n; ++i) grid_d += h.x(i) * v0[i] * v1[i] * h.dx;
  CHECK(std::abs(grid_d) == doctest::Approx(dipole_matrix_element(fs[0], fs[1])).epsilon(1e-3));
}

TEST_CASE("localized states") {
  const auto pc = PhysicalConstants::codata();
  const WellSpec spec = table_well(100e-9, pc);
  const SpectrumResult s = solve_below_barrier(spec, pc);
  const PiecewiseEigenfunction psi0 = build_eigenfunction(spec, s.levels[0], pc);
  const PiecewiseEigenfunction psi1 = build_eigenfunction(spec, s.levels[1], pc);
  const LocalizedState L(psi0, psi1.negated(), Side::left, pc);
  CHECK(position_matrix_element(L.psi0(), L.psi1()) > 0.0);
  const LocalizedState R = L.mirrored();
  const double x = spec.b + 0.5 * spec.a;
  CHECK(std::norm(L.value(x, 0.0)) > 1e4 * std::norm(L.value(-x, 0.0)));
  CHECK(std::norm(R.value(-x, 0.0)) > 1e4 * std::norm(R.value(x, 0.0)));
  CHECK(std::abs(L.value(-x, 0.3e-6) - R.value(x, 0.3e-6)) < 1e-9 * std::abs(L.value(x, 0.0)));

  // psi_L(x, t + pi/omega) = i exp(-i pi Omega/omega) psi_R(x, t)
  using namespace std::complex_literals;
  const double w = L.omega();
  const std::complex<double> phase = 1i * std::polar(1.0, -std::numbers::pi * L.Omega() / w);
  double worst = 0.0;
  for (int ix = 0; ix < 50; ++ix) {
    const double xx = -spec.a - spec.b + (ix + 0.5) * 2.0 * (spec.a + spec.b) / 50.0;
    for (int it = 0; it < 50; ++it) {
      const double t = it * 2.0 * std::numbers::pi / w / 50.0;
      const auto lhs = L.value(xx, t + std::numbers::pi / w);
      const auto rhs = phase * R.value(xx, t);
      worst = std::max(worst, std::abs(lhs - rhs) * std::sqrt(spec.a));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("wrong level is rejected") {
  const ScaledWell w = unit_well(40.0, 0.8);
  EnergyLevel fake{0, Parity::even, 0.95, 0.95};
  CHECK_THROWS_AS(PiecewiseEigenfunction(w, fake), MatchFailure);
  EnergyLevel mismatched{1, Parity::even, 0.9061296916455387679, 0.0};
  CHECK_THROWS_AS(PiecewiseEigenfunction(w, mismatched), InvalidArgument);
}
