#pragma once

#include <stdexcept>
#include <string>

namespace dwell {

/// Base for every error raised by the library. `kind()` is the stable
/// machine-readable tag used in JSON error records.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define DWELL_DEFINE_ERROR(Name)                                     \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& what) : Error(#Name, what) {}   \
  };

DWELL_DEFINE_ERROR(InvalidArgument)
DWELL_DEFINE_ERROR(NonFinite)
DWELL_DEFINE_ERROR(BracketFailure)
DWELL_DEFINE_ERROR(PoleCollision)
DWELL_DEFINE_ERROR(DegenerateGap)
DWELL_DEFINE_ERROR(NotReached)
DWELL_DEFINE_ERROR(MatchFailure)
DWELL_DEFINE_ERROR(QuadratureFailure)
DWELL_DEFINE_ERROR(ResonantDenominator)
DWELL_DEFINE_ERROR(BasisMismatch)
DWELL_DEFINE_ERROR(ConvergenceFailure)
DWELL_DEFINE_ERROR(SingularShift)
DWELL_DEFINE_ERROR(ConfigError)
DWELL_DEFINE_ERROR(BoundViolation)

#undef DWELL_DEFINE_ERROR

}  // namespace dwell
