#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace semiortho {

// Expression templates are disabled so that `auto` never captures a lazy
// expression referring to a temporary.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Decimal working precision plus a few sacrificial guard digits.
///
/// `tol()` is the single cutoff used for "is this coefficient zero" decisions
/// and for residual comparisons across the library.
class PrecisionContext {
 public:
  static constexpr int kMinDigits = 30;
  static constexpr int kMinGuard = 8;

  explicit PrecisionContext(int digits, int guard = 10);

  int digits() const noexcept { return digits_; }
  int guard() const noexcept { return guard_; }

  /// 10^(-digits + guard).
  Real tol() const;
  /// 10^(-k) at this context's precision.
  Real pow10(int k) const;

  /// Same guard, different number of digits.
  PrecisionContext with_digits(int digits) const { return PrecisionContext(digits, guard_); }

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  int digits_;
  int guard_;
};

/// Applies a context's precision to all Real values created in its scope.
///
/// MPFR precision in Boost 1.74 is a process-wide default; every public entry
/// point of the library opens one of these so callers never touch it.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

/// Parses a decimal literal ("0.5", "-1e-3", "1/3") at the current precision.
Real parse_real(const std::string& text);

/// Scientific decimal string with `digits` significant digits; deterministic
/// and locale independent.
std::string to_decimal(const Real& x, int digits);

/// Pi at the current precision.
Real pi();

/// -log10|x|, clamped to [0, cap]; used for digit counts.
double digits_of(const Real& x, double cap);

}  // namespace semiortho
