#include "doctest.h"

#include <cmath>
#include <numbers>

#include "dwell/error.hpp"
#include "dwell/oracle.hpp"
#include "dwell/spectrum.hpp"
#include "wells.hpp"

using namespace dwell;
using dwell::testing::table_well;

TEST_CASE("empty box levels") {
  const auto pc = PhysicalConstants::paper();
  const WellSpec box{1e-6, 2e-7, 0.0, pc.m_e};
  const GridHamiltonian h = build_grid_hamiltonian(box, 20000, pc);
  const auto e = lowest_eigenvalues(h, 6);
  const double width = 2.0 * (box.a + box.b);
  for (int n = 1; n <= 6; ++n) {
    const double exact = n * n * std::numbers::pi * std::numbers::pi * pc.hbar * pc.hbar /
                         (2.0 * box.m * width * width);
    CHECK(e[n - 1] == doctest::Approx(exact).epsilon(1e-6));
  }
}

TEST_CASE("table row 1 against the transcendental solver") {
  const auto pc = PhysicalConstants::codata();
  const WellSpec spec = table_well(100e-9, pc);
  const SpectrumResult s = solve_below_barrier(spec, pc);
  const GridHamiltonian h = build_grid_hamiltonian(spec, 20000, pc);
  const auto e = lowest_eigenvalues(h, static_cast<int>(s.levels.size()));
  for (std::size_t i = 0; i < s.levels.size(); ++i) {
    CAPTURE(i);
    CHECK(e[i] == doctest::Approx(s.levels[i].energy).epsilon(1e-4));
  }
  CHECK(count_below(h, spec.k) == static_cast<int>(s.levels.size()));
  for (std::size_t i = 1; i < e.size(); ++i) CHECK(e[i] > e[i - 1]);
}

TEST_CASE("second-order convergence") {
  const auto pc = PhysicalConstants::codata();
  const WellSpec spec = table_well(100e-9, pc);
  const SpectrumResult s = solve_below_barrier(spec, pc);
  const ConvergenceStudy c = convergence_order(spec, 0, s.levels[0].energy, 2000, 4000, pc);
  CHECK(c.order > 1.9);
  CHECK(c.order < 2.1);
  CHECK(c.error2 < c.error1);
}

TEST_CASE("eigenvectors: residual, parity and nodes") {
  const auto pc = PhysicalConstants::paper();
  const WellSpec spec{1e-6, 3e-7, 40.0 * barrier_bound({1e-6, 3e-7, 1.0, pc.m_e}, pc), pc.m_e};
  const GridHamiltonian h = build_grid_hamiltonian(spec, 4000, pc);
  const auto e = lowest_eigenvalues(h, 6);
  for (int k = 0; k < 6; ++k) {
    CAPTURE(k);
    const Parity p = k % 2 == 0 ? Parity::even : Parity::odd;
    const auto v = eigenvector(h, e[k], p);
    CHECK(eigen_residual(h, v) <= 1e-8 * e[k]);
    CHECK(parity_residual(v, p) < 1e-6);
    CHECK(count_sign_changes(v) == k);
    double norm = 0.0;
    for (double x : v) norm += x * x * h.dx;
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("oracle input checks") {
  const auto pc = PhysicalConstants::paper();
  const GridHamiltonian h = build_grid_hamiltonian({1e-6, 1e-7, 2e-24, pc.m_e}, 100, pc);
  CHECK_THROWS_AS(lowest_eigenvalues(h, 11), InvalidArgument);
  CHECK_THROWS_AS(build_grid_hamiltonian({1e-6, 1e-7, 2e-24, pc.m_e}, 5, pc), InvalidArgument);
}
