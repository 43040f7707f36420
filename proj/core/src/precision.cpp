#include "semiortho/precision.hpp"

#include "semiortho/errors.hpp"

#include <cmath>
#include <sstream>

namespace semiortho {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InsufficientMoments: return "InsufficientMoments";
    case ErrorKind::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorKind::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorKind::SpotCheckFailure: return "SpotCheckFailure";
    case ErrorKind::SingularHankel: return "SingularHankel";
    case ErrorKind::MethodDisagreement: return "MethodDisagreement";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::DivisionByNearZero: return "DivisionByNearZero";
    case ErrorKind::ComplexityBreakdown: return "ComplexityBreakdown";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NegativeIterate: return "NegativeIterate";
    case ErrorKind::PearsonInconsistency: return "PearsonInconsistency";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::RouteDisagreement: return "RouteDisagreement";
    case ErrorKind::StepUnderflow: return "StepUnderflow";
    case ErrorKind::WindowClosureFailure: return "WindowClosureFailure";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

PrecisionContext::PrecisionContext(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < kMinDigits) {
    throw Error(ErrorKind::ConfigError,
                "digits must be >= " + std::to_string(kMinDigits) + ", got " + std::to_string(digits));
  }
  if (guard < kMinGuard || guard >= digits) {
    throw Error(ErrorKind::ConfigError, "guard digits out of range: " + std::to_string(guard));
  }
}

Real PrecisionContext::tol() const { return pow10(digits_ - guard_); }

Real PrecisionContext::pow10(int k) const {
  ScopedPrecision scope(*this);
  return boost::multiprecision::pow(Real(10), -k);
}

ScopedPrecision::ScopedPrecision(const PrecisionContext& ctx) : previous_(Real::default_precision()) {
  Real::default_precision(static_cast<unsigned>(ctx.digits()));
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(previous_); }

Real parse_real(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    return parse_real(text.substr(0, slash)) / parse_real(text.substr(slash + 1));
  }
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ConfigError, "not a decimal number: '" + text + "'");
  }
}

std::string to_decimal(const Real& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

Real pi() { return boost::multiprecision::acos(Real(-1)); }

double digits_of(const Real& x, double cap) {
  if (x == 0) return cap;
  double d = -static_cast<double>(boost::multiprecision::log10(boost::multiprecision::abs(x)));
  if (!std::isfinite(d)) return cap;
  if (d < 0) return 0;
  return d > cap ? cap : d;
}

}  // namespace semiortho
