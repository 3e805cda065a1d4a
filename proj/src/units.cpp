#include "dwell/units.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "dwell/error.hpp"

namespace dwell {

PhysicalConstants PhysicalConstants::paper() { return PhysicalConstants{}; }

PhysicalConstants PhysicalConstants::codata() {
  PhysicalConstants pc;
  pc.m_e = 9.1093837015e-31;
  return pc;
}

PhysicalConstants PhysicalConstants::from_name(std::string_view name) {
  if (name == "paper") return paper();
  if (name == "codata") return codata();
  throw ConfigError("unknown constants convention '" + std::string(name) +
                    "' (expected paper|codata)");
}

const PhysicalConstants& constants() {
  static const PhysicalConstants pc = [] {
    const char* env = std::getenv("DWELL_CONSTANTS");
    return env && *env ? PhysicalConstants::from_name(env) : PhysicalConstants::paper();
  }();
  return pc;
}

namespace {

void require_positive(double v, const char* name) {
  if (!std::isfinite(v) || !(v > 0.0)) {
    throw InvalidArgument(std::string(name) + " must be finite and > 0 (got " +
                          std::to_string(v) + ")");
  }
}

}  // namespace

void WellSpec::validate() const {
  require_positive(a, "a");
  require_positive(b, "b");
  require_positive(k, "k");
  require_positive(m, "m");
}

void ScaledWell::validate() const {
  require_positive(kappa, "kappa");
  require_positive(lambda, "lambda");
  require_positive(energy_unit, "energy_unit");
  require_positive(length_unit, "length_unit");
}

double barrier_bound(const WellSpec& spec, const PhysicalConstants& pc) {
  spec.validate();
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  return pi2 * pc.hbar * pc.hbar / (2.0 * spec.m * spec.a * spec.a);
}

ScaledWell to_dimensionless(const WellSpec& spec, const PhysicalConstants& pc) {
  const double B = barrier_bound(spec, pc);
  ScaledWell w{spec.k / B, spec.b / spec.a, B, spec.a};
  if (!std::isfinite(w.kappa) || !std::isfinite(w.lambda)) {
    throw NonFinite("k/B or b/a is not finite");
  }
  return w;
}

WellSpec from_dimensionless(const ScaledWell& well, const PhysicalConstants& pc) {
  well.validate();
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double a = well.length_unit;
  return WellSpec{a, well.lambda * a, well.kappa * well.energy_unit,
                  pi2 * pc.hbar * pc.hbar / (2.0 * well.energy_unit * a * a)};
}

bool is_big_barrier(const ScaledWell& well) { return well.kappa >= 10.0; }

}  // namespace dwell
