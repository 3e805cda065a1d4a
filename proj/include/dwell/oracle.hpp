#pragma once

#include <optional>
#include <vector>

#include "dwell/spectrum.hpp"
#include "dwell/units.hpp"

namespace dwell {

/// Finite-difference Hamiltonian on N interior nodes of [-(a+b), a+b] with
/// Dirichlet walls. Node i sits at x = -(a+b) + (i+1) dx.
struct GridHamiltonian {
  int n = 0;
  double dx = 0.0;                // m
  std::vector<double> diagonal;   // J
  double off_diagonal = 0.0;      // -hbar^2 / (2 m dx^2) (J)
  double energy_unit = 1.0;       // B (J)
  double half_extent = 0.0;       // a + b (m)

  double x(int i) const { return -half_extent + (i + 1) * dx; }
};

/// The potential on node i is k times the hat-function-weighted fraction of the
/// node's support inside [-b, b].
GridHamiltonian build_grid_hamiltonian(const WellSpec& well, int n = 20000,
                                       const PhysicalConstants& pc = constants());

/// Number of eigenvalues strictly below `energy` (J), by Sturm sequence.
int count_below(const GridHamiltonian& h, double energy);

/// The `count` smallest eigenvalues (J), increasing. Requires count <= N/10.
/// Throws ConvergenceFailure naming the offending index.
std::vector<double> lowest_eigenvalues(const GridHamiltonian& h, int count);

/// Inverse iteration at `eigenvalue` (J). Normalized so sum v^2 dx = 1, sign
/// chosen so the state is positive just right of x = 0. With `parity` the start
/// vector is symmetrized accordingly. Throws SingularShift when retries with
/// perturbed shifts all stagnate.
std::vector<double> eigenvector(const GridHamiltonian& h, double eigenvalue,
                                std::optional<Parity> parity = std::nullopt);

/// ||H v - E v|| / ||v|| with E the Rayleigh quotient (J).
double eigen_residual(const GridHamiltonian& h, const std::vector<double>& v);

/// max |v_i -+ v_{N-1-i}| / max |v| for the given parity.
double parity_residual(const std::vector<double>& v, Parity parity);

int count_sign_changes(const std::vector<double>& v);

struct ConvergenceStudy {
  int n1 = 0;
  int n2 = 0;
  double error1 = 0.0;  // relative
  double error2 = 0.0;
  double order = 0.0;   // ln(error1/error2) / ln(dx1/dx2)
};

/// Grid error of level `index` against `exact` (J) at two resolutions.
ConvergenceStudy convergence_order(const WellSpec& well, int index, double exact, int n1 = 2000,
                                   int n2 = 4000, const PhysicalConstants& pc = constants());

}  // namespace dwell
