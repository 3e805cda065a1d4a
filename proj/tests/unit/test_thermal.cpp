#include "doctest.h"

#include "dwell/error.hpp"
#include "dwell/thermal.hpp"
#include "wells.hpp"

using namespace dwell;

TEST_CASE("global bound") {
  const auto paper = PhysicalConstants::paper();
  const auto codata = PhysicalConstants::codata();
  CHECK(global_bound_T_B(1e-6, paper.m_e, paper) ==
        doctest::Approx(1.09970997629739e-3).epsilon(1e-12));
  CHECK(global_bound_T_B(1e-6, codata.m_e, codata) ==
        doctest::Approx(1.09857714991832e-3).epsilon(1e-12));
  CHECK(global_bound_T_B(2e-6, paper.m_e, paper) ==
        doctest::Approx(global_bound_T_B(1e-6, paper.m_e, paper) / 4.0));
  CHECK_THROWS_AS(global_bound_T_B(0.0, paper.m_e, paper), InvalidArgument);
}

TEST_CASE("temperature limit") {
  const auto pc = PhysicalConstants::paper();
  const WellSpec w{1e-6, 1e-7, 2e-24, pc.m_e};
  const double B = barrier_bound(w, pc);
  CHECK(temperature_limit(1.25 * B, pc) ==
        doctest::Approx(global_bound_T_B(w.a, w.m, pc)).epsilon(1e-14));
  CHECK(temperature_limit(2.0 * B, pc) == doctest::Approx(2.0 * temperature_limit(B, pc)));
  CHECK_THROWS_AS(temperature_limit(0.0, pc), InvalidArgument);
}

TEST_CASE("Wien peak frequency") {
  const auto pc = PhysicalConstants::paper();
  CHECK(wien_peak_frequency(0.0, pc) == 0.0);
  CHECK(wien_peak_frequency(1.1e-3, pc) == doctest::Approx(7.15037882972312e8).epsilon(1e-12));
  for (double T : {1e-6, 1e-3, 0.7, 300.0}) {
    CHECK(temperature_limit(pc.hbar * wien_peak_frequency(T, pc), pc) ==
          doctest::Approx(T).epsilon(1e-12));
  }
  CHECK_THROWS_AS(wien_peak_frequency(-1.0, pc), InvalidArgument);
}

TEST_CASE("table geometry sits inside (T_B, 3 T_B)") {
  const auto pc = PhysicalConstants::codata();
  const WellSpec w = dwell::testing::table_well(100e-9, pc);
  const ThermalLimit t = thermal_limit(solve_below_barrier(w, pc), w, pc);
  CHECK(t.T_max > t.T_B);
  CHECK(t.T_max < 3.0 * t.T_B);
  CHECK(t.T_max / t.T_B == doctest::Approx(2.6587071 / 1.25).epsilon(1e-6));
}
