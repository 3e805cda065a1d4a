#include "doctest.h"

#include <cmath>

#include "dwell/error.hpp"
#include "dwell/units.hpp"
#include "wells.hpp"

using namespace dwell;

TEST_CASE("barrier bound at the table geometry") {
  const auto paper = PhysicalConstants::paper();
  const auto codata = PhysicalConstants::codata();
  CHECK(barrier_bound({1e-6, 1e-7, 2e-24, paper.m_e}, paper) ==
        doctest::Approx(6.03087988721406e-26).epsilon(1e-13));
  CHECK(barrier_bound({1e-6, 1e-7, 2e-24, codata.m_e}, codata) ==
        doctest::Approx(6.02466739485471e-26).epsilon(1e-13));
}

TEST_CASE("dimensionless round trip") {
  const auto pc = PhysicalConstants::paper();
  const WellSpec w{1e-6, 1.3e-7, 2e-24, pc.m_e};
  const ScaledWell s = to_dimensionless(w, pc);
  CHECK(s.kappa == doctest::Approx(33.162656816299).epsilon(1e-12));
  CHECK(s.lambda == doctest::Approx(0.13).epsilon(1e-15));
  const WellSpec back = from_dimensionless(s, pc);
  CHECK(back.a == doctest::Approx(w.a).epsilon(1e-15));
  CHECK(back.b == doctest::Approx(w.b).epsilon(1e-15));
  CHECK(back.k == doctest::Approx(w.k).epsilon(1e-15));
  CHECK(back.m == doctest::Approx(w.m).epsilon(1e-14));
}

TEST_CASE("invalid wells are rejected") {
  const auto pc = PhysicalConstants::paper();
  CHECK_THROWS_AS(WellSpec({-1e-6, 1e-7, 2e-24, pc.m_e}).validate(), InvalidArgument);
  CHECK_THROWS_AS(WellSpec({1e-6, 0.0, 2e-24, pc.m_e}).validate(), InvalidArgument);
  CHECK_THROWS_AS(to_dimensionless({1e-6, 1e-7, NAN, pc.m_e}, pc), Error);
  CHECK_THROWS_AS(PhysicalConstants::from_name("si"), ConfigError);
}

TEST_CASE("constant conventions") {
  CHECK(PhysicalConstants::from_name("paper").m_e == 9.1e-31);
  CHECK(PhysicalConstants::from_name("codata").m_e == 9.1093837015e-31);
  CHECK(is_big_barrier({10.0, 0.1}));
  CHECK_FALSE(is_big_barrier({9.99, 0.1}));
}
