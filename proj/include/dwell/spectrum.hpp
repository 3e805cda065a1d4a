#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dwell/units.hpp"

namespace dwell {

enum class Parity { even, odd };

std::string_view to_string(Parity p);

/// One below-barrier level. Even levels carry even indices, odd levels odd ones.
struct EnergyLevel {
  int index = 0;
  Parity parity = Parity::even;
  double eps = 0.0;     // E / B
  double energy = 0.0;  // J (eps * energy_unit)
};

struct SolverStats {
  int index = 0;
  int iterations = 0;
  double residual = 0.0;  // |g - h| or |g - j| at the returned root
};

struct SpectrumResult {
  std::vector<EnergyLevel> levels;  // strictly increasing
  ScaledWell well;
  std::vector<SolverStats> solver_report;

  /// Level with the given global index, or nullptr when it is not below the barrier.
  const EnergyLevel* level(int index) const;
};

/// The three sides of the matching conditions in dimensionless form:
///   g = -sqrt(eps) cot(pi sqrt(eps))
///   h = sqrt(kappa - eps) tanh(pi lambda sqrt(kappa - eps))   (even levels: g = h)
///   j = sqrt(kappa - eps) coth(pi lambda sqrt(kappa - eps))   (odd levels:  g = j)
struct ConditionValues {
  double g = 0.0;
  double h = 0.0;
  double j = 0.0;
};

/// Requires 0 < eps < kappa. Throws PoleCollision when sin(pi sqrt(eps)) == 0.
ConditionValues condition_functions(double eps, double kappa, double lambda);

struct LevelPair {
  EnergyLevel even;
  std::optional<EnergyLevel> odd;  // absent when level 2n+1 is above the barrier
  SolverStats even_stats;
  std::optional<SolverStats> odd_stats;
};

/// Solves pair n inside ((n+1/2)^2, min((n+1)^2, kappa)).
/// Bisection down to a 1e-6 bracket, then Newton polish with a bisection
/// fallback whenever a step leaves the bracket.
///
/// Throws BracketFailure, PoleCollision, or DegenerateGap when tanh and coth
/// agree to better than 1e-15 at the bracket midpoint.
LevelPair solve_pair(int n, const ScaledWell& well);

/// Every level below the barrier. Empty when kappa <= 1/4.
SpectrumResult solve_below_barrier(const ScaledWell& well);
SpectrumResult solve_below_barrier(const WellSpec& spec,
                                   const PhysicalConstants& pc = constants());

/// Levels of the plain box of width 2a (the b -> 0 limit) below kappa:
/// eps_n = (n+1)^2 / 4, alternating parity.
SpectrumResult plain_box_spectrum(double kappa, double energy_unit = 1.0,
                                  double length_unit = 1.0);

/// One inequality `lhs < rhs` in units of B.
struct BoundCheck {
  std::string name;
  std::string relation;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  bool applicable = true;
  bool holds = true;
};

struct BoundReport {
  std::vector<BoundCheck> checks;

  int violations() const;
  bool all_hold() const { return violations() == 0; }
};

/// Checks the level bounds that hold for every barrier width: the ground pair
/// inside (B/4, B), the gap ordering E1-E0 < 3B/4 < 5B/4 < E2-E1 < 15B/4,
/// per-pair brackets ((n+1/2)^2 B, (n+1)^2 B) and the pair spacing
/// E(2n+2) - E(2n+1) > (n + 5/4) B. Checks whose levels are missing are
/// reported as not applicable.
BoundReport verify_bounds(const SpectrumResult& spectrum);

struct GroundGap {
  double delta_e = 0.0;          // E1 - E0 (J)
  double tau = 0.0;              // 2 pi hbar / delta_e (s)
  double tau_lower_bound = 0.0;  // 2 pi hbar / B = 4 m a^2 / (pi hbar) (s)
};

/// Throws InvalidArgument when E0 or E1 is missing, DegenerateGap when the gap
/// is below 1e-15 relative.
GroundGap gap01(const SpectrumResult& spectrum, const PhysicalConstants& pc = constants());

struct SweepRow {
  double b = 0.0;
  double E0 = 0.0;
  double E1 = 0.0;
  double delta_e = 0.0;
  double tau = 0.0;
  std::string error_kind;  // empty on success
  std::string error_message;

  bool ok() const { return error_kind.empty(); }
};

/// One row per b with the rest of `tmpl` held fixed. Errors are recorded per
/// row and the sweep continues.
std::vector<SweepRow> gap_sweep(const WellSpec& tmpl, std::span<const double> b_values,
                                const PhysicalConstants& pc = constants());

struct LogLinearFit {
  double slope = 0.0;      // d ln(delta_e) / db (1/m)
  double intercept = 0.0;
  double r_squared = 0.0;
  int points = 0;
};

/// Least squares of ln(delta_e) against b over the successful rows.
LogLinearFit fit_log_gap(std::span<const SweepRow> rows);

struct GapSearchResult {
  double b = 0.0;        // m
  double delta_e = 0.0;  // gap at b (J)
  int steps = 0;         // grid points visited
  double cot2_ground = 0.0;      // cot^2(pi sqrt(eps0)) at b
  double cot2_bound = 0.0;       // (kappa - 1/4) / (1/4)
  double cot2_printed_bound = 0.0;  // kappa - 1/4
  bool certified = false;        // cot2_ground < cot2_bound
};

/// Smallest b on the geometric grid b_i = tmpl.b * 2^(i/8) with E1 - E0 < delta.
/// Requires delta > 0 and kappa >= 10. Throws NotReached when b would exceed
/// `cap_in_a * a` or the gap drops below double resolution first.
GapSearchResult find_b_for_gap(double delta, const WellSpec& tmpl,
                               const PhysicalConstants& pc = constants(),
                               double cap_in_a = 100.0);

}  // namespace dwell
