#include "dwell/basis.hpp"

#include <numbers>

namespace dwell {

std::string_view to_string(Basis b) { return b == Basis::energy ? "energy" : "localized"; }

const Eigen::Matrix2cd& rotation_O() {
  static const Eigen::Matrix2cd O = [] {
    Eigen::Matrix2cd m;
    const double s = 1.0 / std::numbers::sqrt2;
    m << s, s, s, -s;
    return m;
  }();
  return O;
}

Eigen::Matrix2cd rotate(const Eigen::Matrix2cd& m) {
  const auto& O = rotation_O();
  return O * m * O;
}

Basis other(Basis b) { return b == Basis::energy ? Basis::localized : Basis::energy; }

}  // namespace dwell
