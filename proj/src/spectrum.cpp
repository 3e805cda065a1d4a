#include "dwell/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dwell/error.hpp"

namespace dwell {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNewtonSwitchWidth = 1e-6;
constexpr int kMaxIterations = 400;
constexpr double kCoalescenceTol = 1e-15;

std::string pair_tag(int n) { return "pair " + std::to_string(n) + ": "; }

// Well side of the matching condition and its derivative with respect to eps.
struct Sample {
  double value;
  double slope;
};

Sample well_side(double eps) {
  const double s = std::sqrt(eps);
  const double theta = kPi * s;
  const double sn = std::sin(theta);
  const double cs = std::cos(theta);
  if (sn == 0.0) {
    throw PoleCollision("cot pole at eps = " + std::to_string(eps));
  }
  const double cot = cs / sn;
  return {-s * cot, -cot / (2.0 * s) + 0.5 * kPi / (sn * sn)};
}

// Barrier side; at eps == kappa it takes its limiting value (0 for tanh,
// 1/(pi lambda) for coth).
Sample barrier_side(double eps, double kappa, double lambda, Parity parity) {
  const double q = std::sqrt(std::max(kappa - eps, 0.0));
  if (q == 0.0) {
    return {parity == Parity::even ? 0.0 : 1.0 / (kPi * lambda),
            -std::numeric_limits<double>::infinity()};
  }
  const double x = kPi * lambda * q;
  const double th = std::tanh(x);
  if (parity == Parity::even) {
    const double sech2 = 1.0 - th * th;
    return {q * th, -(th + x * sech2) / (2.0 * q)};
  }
  const double coth = 1.0 / th;
  const double sh = std::sinh(x);
  const double csch2 = std::isfinite(sh) ? 1.0 / (sh * sh) : 0.0;
  return {q * coth, -(coth - x * csch2) / (2.0 * q)};
}

Sample mismatch(double eps, double kappa, double lambda, Parity parity) {
  const Sample g = well_side(eps);
  const Sample b = barrier_side(eps, kappa, lambda, parity);
  return {g.value - b.value, g.slope - b.slope};
}

struct Root {
  double eps;
  int iterations;
  double residual;
};

// The mismatch is strictly increasing on the bracket, negative at lo and
// positive at hi (or +inf when hi is a cot pole).
Root refine(double lo, double hi, double kappa, double lambda, Parity parity, int n) {
  int it = 0;
  while (hi - lo > kNewtonSwitchWidth) {
    const double mid = 0.5 * (lo + hi);
    (mismatch(mid, kappa, lambda, parity).value < 0.0 ? lo : hi) = mid;
    if (++it > kMaxIterations) break;
  }

  double x = 0.5 * (lo + hi);
  while (true) {
    if (++it > kMaxIterations) {
      throw ConvergenceFailure(pair_tag(n) + "root refinement did not converge");
    }
    const Sample f = mismatch(x, kappa, lambda, parity);
    if (f.value == 0.0) break;
    (f.value < 0.0 ? lo : hi) = x;

    double next = x - f.value / f.slope;
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);

    const double step = std::abs(next - x);
    x = next;
    if (step <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, x) ||
        std::nextafter(lo, hi) >= hi) {
      break;
    }
  }
  return {x, it, std::abs(mismatch(x, kappa, lambda, parity).value)};
}

}  // namespace

std::string_view to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

const EnergyLevel* SpectrumResult::level(int index) const {
  for (const auto& l : levels) {
    if (l.index == index) return &l;
  }
  return nullptr;
}

ConditionValues condition_functions(double eps, double kappa, double lambda) {
  if (!(eps > 0.0) || !(eps < kappa) || !(lambda > 0.0)) {
    throw InvalidArgument("condition_functions requires 0 < eps < kappa and lambda > 0");
  }
  return {well_side(eps).value, barrier_side(eps, kappa, lambda, Parity::even).value,
          barrier_side(eps, kappa, lambda, Parity::odd).value};
}

LevelPair solve_pair(int n, const ScaledWell& well) {
  well.validate();
  const double kappa = well.kappa;
  const double lambda = well.lambda;
  const double lo = (n + 0.5) * (n + 0.5);
  const double pole = (n + 1.0) * (n + 1.0);
  if (n < 0 || !(lo < kappa)) {
    throw InvalidArgument(pair_tag(n) + "requires (n+1/2)^2 < kappa");
  }
  const bool pole_bounded = kappa >= pole;
  const double hi = pole_bounded ? pole : kappa;

  auto positive_at_hi = [&](Parity p) {
    return pole_bounded || mismatch(hi, kappa, lambda, p).value > 0.0;
  };

  if (!positive_at_hi(Parity::even)) {
    std::ostringstream os;
    os << pair_tag(n) << "no sign change for the even condition on (" << lo << ", " << hi
       << ")";
    throw BracketFailure(os.str());
  }

  auto make_level = [&](int index, Parity p, const Root& r) {
    return EnergyLevel{index, p, r.eps, r.eps * well.energy_unit};
  };

  LevelPair out;
  const Root even = refine(lo, hi, kappa, lambda, Parity::even, n);
  out.even = make_level(2 * n, Parity::even, even);
  out.even_stats = {2 * n, even.iterations, even.residual};

  if (!positive_at_hi(Parity::odd)) return out;

  const double x_mid = kPi * lambda * std::sqrt(kappa - 0.5 * (lo + hi));
  if (2.0 / std::sinh(2.0 * x_mid) < kCoalescenceTol) {
    std::ostringstream os;
    os << pair_tag(n) << "tanh and coth coincide to double precision (pi*lambda*q = " << x_mid
       << "); the splitting is not resolvable";
    throw DegenerateGap(os.str());
  }

  const Root odd = refine(lo, hi, kappa, lambda, Parity::odd, n);
  if (!(odd.eps - even.eps > kCoalescenceTol * odd.eps)) {
    std::ostringstream os;
    os << pair_tag(n) << "roots coalesced (even " << even.eps << ", odd " << odd.eps
       << "); the splitting is not resolvable";
    throw DegenerateGap(os.str());
  }
  out.odd = make_level(2 * n + 1, Parity::odd, odd);
  out.odd_stats = SolverStats{2 * n + 1, odd.iterations, odd.residual};
  return out;
}

SpectrumResult solve_below_barrier(const ScaledWell& well) {
  well.validate();
  SpectrumResult result;
  result.well = well;
  for (int n = 0; (n + 0.5) * (n + 0.5) < well.kappa; ++n) {
    LevelPair pair = solve_pair(n, well);
    result.levels.push_back(pair.even);
    result.solver_report.push_back(pair.even_stats);
    if (!pair.odd) break;
    result.levels.push_back(*pair.odd);
    result.solver_report.push_back(*pair.odd_stats);
  }
  return result;
}

SpectrumResult solve_below_barrier(const WellSpec& spec, const PhysicalConstants& pc) {
  return solve_below_barrier(to_dimensionless(spec, pc));
}

SpectrumResult plain_box_spectrum(double kappa, double energy_unit, double length_unit) {
  SpectrumResult result;
  result.well = ScaledWell{kappa, 0.0, energy_unit, length_unit};
  for (int n = 1; n * n / 4.0 < kappa; ++n) {
    const double eps = n * n / 4.0;
    result.levels.push_back({n - 1, n % 2 == 1 ? Parity::even : Parity::odd, eps,
                             eps * energy_unit});
    result.solver_report.push_back({n - 1, 0, 0.0});
  }
  return result;
}

int BoundReport::violations() const {
  return static_cast<int>(
      std::count_if(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.holds; }));
}

BoundReport verify_bounds(const SpectrumResult& spectrum) {
  BoundReport report;
  auto eps_of = [&](int index) -> std::optional<double> {
    const EnergyLevel* l = spectrum.level(index);
    return l ? std::optional<double>(l->eps) : std::nullopt;
  };
  auto add = [&](std::string name, std::string relation, std::optional<double> lhs,
                 std::optional<double> rhs) {
    BoundCheck c{std::move(name), std::move(relation)};
    c.applicable = lhs.has_value() && rhs.has_value();
    if (c.applicable) {
      c.lhs = *lhs;
      c.rhs = *rhs;
      c.margin = c.rhs - c.lhs;
      c.holds = c.margin > 0.0;
    }
    report.checks.push_back(std::move(c));
  };
  auto diff = [](std::optional<double> x, std::optional<double> y) -> std::optional<double> {
    if (!x || !y) return std::nullopt;
    return *x - *y;
  };

  const auto e0 = eps_of(0), e1 = eps_of(1), e2 = eps_of(2);
  add("ground_above_quarter_B", "B/4 < E0", 0.25, e0);
  add("ground_below_first_excited", "E0 < E1", e0, e1);
  add("first_excited_below_B", "E1 < B", e1, 1.0);
  add("ground_gap_below_three_quarter_B", "E1 - E0 < 3B/4", diff(e1, e0), 0.75);
  add("second_gap_above_five_quarter_B", "5B/4 < E2 - E1", 1.25, diff(e2, e1));
  add("ground_gap_below_second_gap", "E1 - E0 < E2 - E1", diff(e1, e0), diff(e2, e1));
  add("second_gap_below_fifteen_quarter_B", "E2 - E1 < 15B/4", diff(e2, e1), 3.75);

  for (const auto& level : spectrum.levels) {
    if (level.parity != Parity::even) continue;
    const int n = level.index / 2;
    const double lo = (n + 0.5) * (n + 0.5);
    const double hi = (n + 1.0) * (n + 1.0);
    const auto even = eps_of(2 * n), odd = eps_of(2 * n + 1), next = eps_of(2 * n + 2);
    const std::string tag = "pair_" + std::to_string(n);
    add(tag + "_lower_bracket", "(n+1/2)^2 B < E(2n)", lo, even);
    add(tag + "_even_below_upper", "E(2n) < (n+1)^2 B", even, hi);
    if (odd) {
      add(tag + "_ordering", "E(2n) < E(2n+1)", even, odd);
      add(tag + "_upper_bracket", "E(2n+1) < (n+1)^2 B", odd, hi);
      if (next) add(tag + "_spacing", "(n+5/4) B < E(2n+2) - E(2n+1)", n + 1.25, *next - *odd);
    }
  }
  return report;
}

GroundGap gap01(const SpectrumResult& spectrum, const PhysicalConstants& pc) {
  const EnergyLevel* l0 = spectrum.level(0);
  const EnergyLevel* l1 = spectrum.level(1);
  if (!l0 || !l1) throw InvalidArgument("gap01 requires both E0 and E1 below the barrier");

  const double B = spectrum.well.energy_unit;
  GroundGap gap;
  gap.delta_e = l1->energy - l0->energy;
  if (!(gap.delta_e > 1e-15 * l1->energy)) {
    throw DegenerateGap("E1 - E0 is below 1e-15 relative; levels numerically coalesced");
  }
  gap.tau = 2.0 * kPi * pc.hbar / gap.delta_e;
  gap.tau_lower_bound = 2.0 * kPi * pc.hbar / B;
  if (!(gap.tau > gap.tau_lower_bound)) {
    throw BoundViolation("period " + std::to_string(gap.tau) + " s below the bound " +
                         std::to_string(gap.tau_lower_bound) + " s");
  }
  return gap;
}

std::vector<SweepRow> gap_sweep(const WellSpec& tmpl, std::span<const double> b_values,
                                const PhysicalConstants& pc) {
  std::vector<SweepRow> rows;
  rows.reserve(b_values.size());
  for (double b : b_values) {
    SweepRow row;
    row.b = b;
    try {
      WellSpec spec = tmpl;
      spec.b = b;
      const ScaledWell well = to_dimensionless(spec, pc);
      const LevelPair pair = solve_pair(0, well);
      if (!pair.odd) throw InvalidArgument("E1 is above the barrier");
      SpectrumResult ground;
      ground.well = well;
      ground.levels = {pair.even, *pair.odd};
      const GroundGap gap = gap01(ground, pc);
      row.E0 = pair.even.energy;
      row.E1 = pair.odd->energy;
      row.delta_e = gap.delta_e;
      row.tau = gap.tau;
    } catch (const Error& e) {
      row.error_kind = e.kind();
      row.error_message = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LogLinearFit fit_log_gap(std::span<const SweepRow> rows) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  int n = 0;
  for (const auto& r : rows) {
    if (!r.ok() || !(r.delta_e > 0.0)) continue;
    const double x = r.b, y = std::log(r.delta_e);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
    ++n;
  }
  LogLinearFit fit;
  fit.points = n;
  if (n < 2) return fit;
  const double mx = sx / n, my = sy / n;
  const double cxx = sxx / n - mx * mx;
  const double cxy = sxy / n - mx * my;
  const double cyy = syy / n - my * my;
  fit.slope = cxy / cxx;
  fit.intercept = my - fit.slope * mx;
  fit.r_squared = cyy > 0.0 ? (cxy * cxy) / (cxx * cyy) : 1.0;
  return fit;
}

GapSearchResult find_b_for_gap(double delta, const WellSpec& tmpl, const PhysicalConstants& pc,
                               double cap_in_a) {
  if (!(delta > 0.0)) throw InvalidArgument("delta must be > 0");
  const ScaledWell base = to_dimensionless(tmpl, pc);
  if (!is_big_barrier(base)) {
    throw InvalidArgument("find_b_for_gap requires k >= 10 B (kappa = " +
                          std::to_string(base.kappa) + ")");
  }

  const double cap = cap_in_a * tmpl.a;
  const double ratio = std::exp2(1.0 / 8.0);
  for (int i = 0;; ++i) {
    const double b = tmpl.b * std::pow(ratio, i);
    if (b > cap) {
      throw NotReached("gap did not fall below " + std::to_string(delta) + " J before b = " +
                       std::to_string(cap) + " m");
    }
    ScaledWell well = base;
    well.lambda = b / tmpl.a;

    LevelPair pair;
    try {
      pair = solve_pair(0, well);
    } catch (const DegenerateGap& e) {
      throw NotReached(std::string("gap became unresolvable before reaching delta: ") + e.what());
    }
    if (!pair.odd) throw InvalidArgument("E1 is above the barrier");

    const double gap = pair.odd->energy - pair.even.energy;
    if (gap < delta) {
      GapSearchResult r;
      r.b = b;
      r.delta_e = gap;
      r.steps = i + 1;
      const double cot = 1.0 / std::tan(kPi * std::sqrt(pair.even.eps));
      r.cot2_ground = cot * cot;
      r.cot2_bound = (well.kappa - 0.25) / 0.25;
      r.cot2_printed_bound = well.kappa - 0.25;
      r.certified = r.cot2_ground < r.cot2_bound;
      return r;
    }
  }
}

}  // namespace dwell
