#include "dwell/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "dwell/error.hpp"

namespace dwell {

namespace {

constexpr double kBisectRel = 1e-13;
constexpr int kMaxBisect = 400;
constexpr int kMaxInverseIters = 12;
constexpr int kShiftRetries = 4;

// Integral of the unit hat (1 - |u|) from -1 to s.
double hat_cdf(double s) {
  s = std::clamp(s, -1.0, 1.0);
  return s <= 0.0 ? 0.5 * (s + 1.0) * (s + 1.0) : 1.0 - 0.5 * (1.0 - s) * (1.0 - s);
}

struct Scaled {
  std::vector<double> d;
  double e;
};

Scaled scaled(const GridHamiltonian& h) {
  Scaled s;
  s.d.resize(h.diagonal.size());
  for (std::size_t i = 0; i < s.d.size(); ++i) s.d[i] = h.diagonal[i] / h.energy_unit;
  s.e = h.off_diagonal / h.energy_unit;
  return s;
}

int sturm_count(const Scaled& s, double sigma) {
  int count = 0;
  double q = 1.0;
  const double e2 = s.e * s.e;
  const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
  for (std::size_t i = 0; i < s.d.size(); ++i) {
    q = s.d[i] - sigma - (i == 0 ? 0.0 : e2 / q);
    if (q == 0.0) q = -tiny;
    if (q < 0.0) ++count;
  }
  return count;
}

// Tridiagonal LU with partial pivoting (LAPACK gttrf/gtts2 layout), in extended precision.
class TridiagonalLU {
 public:
  TridiagonalLU(const Scaled& s, double sigma) : n_(s.d.size()) {
    d_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) d_[i] = s.d[i] - sigma;
    dl_.assign(n_ - 1, s.e);
    du_.assign(n_ - 1, s.e);
    du2_.assign(n_ > 2 ? n_ - 2 : 0, 0.0);
    swap_.assign(n_ - 1, false);
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        if (d_[i] == 0.0) d_[i] = std::numeric_limits<long double>::epsilon() * std::abs(s.e);
        const long double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const long double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const long double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        swap_[i] = true;
      }
    }
    if (d_[n_ - 1] == 0.0) d_[n_ - 1] = std::numeric_limits<long double>::epsilon() * std::abs(s.e);
  }

  void solve(std::vector<double>& out) const {
    std::vector<long double> b(out.begin(), out.end());
    for (std::size_t i = 0; i + 1 < n_; ++i) {
      if (!swap_[i]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const long double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    b[n_ - 1] /= d_[n_ - 1];
    if (n_ > 1) b[n_ - 2] = (b[n_ - 2] - du_[n_ - 2] * b[n_ - 1]) / d_[n_ - 2];
    for (std::size_t i = n_ - 2; i-- > 0;) {
      b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
    }
    for (std::size_t i = 0; i < n_; ++i) out[i] = static_cast<double>(b[i]);
  }

 private:
  std::size_t n_;
  std::vector<long double> d_, dl_, du_, du2_;
  std::vector<bool> swap_;
};

double norm2(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Residual in extended precision: at fine grids the kinetic diagonal exceeds the
// eigenvalue by ~1e7 and double cancellation alone would swamp the tolerance.
double scaled_residual(const Scaled& s, const std::vector<double>& v) {
  using ld = long double;
  const std::size_t n = v.size();
  std::vector<ld> Hv(n);
  ld num = 0.0L, den = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    ld acc = static_cast<ld>(s.d[i]) * v[i];
    if (i > 0) acc += static_cast<ld>(s.e) * v[i - 1];
    if (i + 1 < n) acc += static_cast<ld>(s.e) * v[i + 1];
    Hv[i] = acc;
    num += acc * v[i];
    den += static_cast<ld>(v[i]) * v[i];
  }
  const ld E = num / den;
  ld r = 0.0L;
  for (std::size_t i = 0; i < n; ++i) r += (Hv[i] - E * v[i]) * (Hv[i] - E * v[i]);
  return static_cast<double>(std::sqrt(r / den));
}

}  // namespace

GridHamiltonian build_grid_hamiltonian(const WellSpec& well, int n, const PhysicalConstants& pc) {
  if (!std::isfinite(well.a) || !std::isfinite(well.b) || !std::isfinite(well.k) ||
      !std::isfinite(well.m)) {
    throw NonFinite("grid well parameters");
  }
  if (!(well.a > 0.0) || well.b < 0.0 || well.k < 0.0 || !(well.m > 0.0)) {
    throw InvalidArgument("grid needs a, m > 0 and b, k >= 0");
  }
  if (n < 10) throw InvalidArgument("grid needs at least 10 interior points");
  GridHamiltonian h;
  h.n = n;
  h.half_extent = well.a + well.b;
  h.dx = 2.0 * h.half_extent / (n + 1);
  h.energy_unit = std::numbers::pi * std::numbers::pi * pc.hbar * pc.hbar /
                  (2.0 * well.m * well.a * well.a);
  const double t = pc.hbar * pc.hbar / (2.0 * well.m * h.dx * h.dx);
  h.off_diagonal = -t;
  h.diagonal.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = h.x(i);
    const double w = hat_cdf((well.b - x) / h.dx) - hat_cdf((-well.b - x) / h.dx);
    h.diagonal[i] = 2.0 * t + well.k * std::max(0.0, w);
  }
  return h;
}

int count_below(const GridHamiltonian& h, double energy) {
  return sturm_count(scaled(h), energy / h.energy_unit);
}

std::vector<double> lowest_eigenvalues(const GridHamiltonian& h, int count) {
  if (count < 0 || count > h.n / 10) {
    throw InvalidArgument("eigenvalue count must lie in [0, N/10]");
  }
  const Scaled s = scaled(h);
  std::vector<double> out;
  out.reserve(count);
  double upper = 1.0;
  while (sturm_count(s, upper) < count) upper *= 2.0;
  double floor = 0.0;
  for (int k = 0; k < count; ++k) {
    double lo = floor;
    double hi = upper;
    int iters = 0;
    while (hi - lo > kBisectRel * hi) {
      if (++iters > kMaxBisect) {
        throw ConvergenceFailure("Sturm bisection did not converge for eigenvalue " +
                                 std::to_string(k));
      }
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(s, mid) > k) hi = mid;
      else lo = mid;
    }
    const double value = 0.5 * (lo + hi);
    out.push_back(value * h.energy_unit);
    floor = lo;
  }
  return out;
}

std::vector<double> eigenvector(const GridHamiltonian& h, double eigenvalue,
                                std::optional<Parity> parity) {
  const Scaled s = scaled(h);
  const double target = eigenvalue / h.energy_unit;
  const int n = h.n;

  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> dist(0.5, 1.5);
  std::vector<double> start(n);
  for (int i = 0; i < n; ++i) start[i] = dist(rng);
  if (parity) {
    const double sign = *parity == Parity::even ? 1.0 : -1.0;
    for (int i = 0; i < n / 2; ++i) {
      const double avg = 0.5 * (start[i] + sign * start[n - 1 - i]);
      start[i] = avg;
      start[n - 1 - i] = sign * avg;
    }
    if (n % 2 == 1 && sign < 0.0) start[n / 2] = 0.0;
  }

  const double tol = 1e-8 * std::max(std::abs(target), 1e-300);
  for (int attempt = 0; attempt < kShiftRetries; ++attempt) {
    const double shift = target * (1.0 + 1e-12 * attempt * (attempt % 2 ? 1.0 : -1.0));
    const TridiagonalLU lu(s, shift);
    std::vector<double> v = start;
    bool ok = false;
    for (int it = 0; it < kMaxInverseIters; ++it) {
      lu.solve(v);
      const double nv = norm2(v);
      if (!std::isfinite(nv) || nv == 0.0) break;
      for (double& x : v) x /= nv;
      if (it >= 1 && scaled_residual(s, v) <= tol) {
        ok = true;
        break;
      }
    }
    if (!ok) continue;

    double weight = 0.0;
    for (double x : v) weight += x * x;
    const double scale = 1.0 / std::sqrt(weight * h.dx);
    // Sign: positive just right of the centre.
    double probe = 0.0;
    for (int i = n / 2; i < n && probe == 0.0; ++i) {
      if (h.x(i) > 0.0) probe = v[i];
    }
    const double sign = probe < 0.0 ? -1.0 : 1.0;
    for (double& x : v) x *= sign * scale;
    return v;
  }
  throw SingularShift("inverse iteration stagnated at E = " + std::to_string(eigenvalue));
}

double eigen_residual(const GridHamiltonian& h, const std::vector<double>& v) {
  return scaled_residual(scaled(h), v) * h.energy_unit;
}

double parity_residual(const std::vector<double>& v, Parity parity) {
  const double sign = parity == Parity::even ? 1.0 : -1.0;
  double peak = 0.0, worst = 0.0;
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    peak = std::max(peak, std::abs(v[i]));
    worst = std::max(worst, std::abs(v[i] - sign * v[n - 1 - i]));
  }
  return peak > 0.0 ? worst / peak : 0.0;
}

int count_sign_changes(const std::vector<double>& v) {
  double peak = 0.0;
  for (double x : v) peak = std::max(peak, std::abs(x));
  const double floor = 1e-10 * peak;
  int changes = 0;
  double prev = 0.0;
  for (double x : v) {
    if (std::abs(x) <= floor) continue;
    if (prev != 0.0 && (x > 0.0) != (prev > 0.0)) ++changes;
    prev = x;
  }
  return changes;
}

ConvergenceStudy convergence_order(const WellSpec& well, int index, double exact, int n1, int n2,
                                   const PhysicalConstants& pc) {
  const GridHamiltonian h1 = build_grid_hamiltonian(well, n1, pc);
  const GridHamiltonian h2 = build_grid_hamiltonian(well, n2, pc);
  const int count = index + 1;
  ConvergenceStudy c;
  c.n1 = n1;
  c.n2 = n2;
  c.error1 = std::abs(lowest_eigenvalues(h1, count).back() - exact) / std::abs(exact);
  c.error2 = std::abs(lowest_eigenvalues(h2, count).back() - exact) / std::abs(exact);
  c.order = std::log(c.error1 / c.error2) / std::log(h1.dx / h2.dx);
  return c;
}

}  // namespace dwell
