#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semiortho {

// Every failure the library can raise. The CLI maps each kind to its own
// exit status, so the order here is part of the external interface.
enum class ErrorKind {
  InsufficientMoments,
  UnsupportedFamily,
  QuadratureNonConvergence,
  SpotCheckFailure,
  SingularHankel,
  MethodDisagreement,
  PrecisionExhausted,
  DivisionByNearZero,
  ComplexityBreakdown,
  NonConvergence,
  NegativeIterate,
  PearsonInconsistency,
  DegreeOverflow,
  RouteDisagreement,
  StepUnderflow,
  WindowClosureFailure,
  ConfigError,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace semiortho
