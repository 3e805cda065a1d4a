#pragma once

#include <string_view>

#include <Eigen/Dense>

namespace dwell {

/// Two-level bases: `energy` is {psi0, psi1} = {psi+, psi-}, `localized` is {psiL, psiR}.
enum class Basis { energy, localized };

std::string_view to_string(Basis b);

/// O = (1/sqrt 2) [[1, 1], [1, -1]]. Real, symmetric and its own inverse.
const Eigen::Matrix2cd& rotation_O();

/// O M O, i.e. the same operator expressed in the other basis.
Eigen::Matrix2cd rotate(const Eigen::Matrix2cd& m);

Basis other(Basis b);

}  // namespace dwell
