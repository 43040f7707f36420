#pragma once

#include "semiortho/poly.hpp"

#include <span>

namespace semiortho {

/// Truncated Laurent series at infinity with only negative powers:
///   sum_j c[j] z^(start - j),  j = 0 .. size-1,  start <= -1.
/// Coefficients below z^lowest() are unknown, not zero; every operation keeps
/// track of how deep its result is valid.
class LaurentTail {
 public:
  LaurentTail() = default;
  LaurentTail(int start, std::vector<Real> coeffs);

  int start() const { return start_; }
  int length() const { return static_cast<int>(c_.size()); }
  /// Smallest exponent whose coefficient is known.
  int lowest() const { return start_ - length() + 1; }
  const std::vector<Real>& coeffs() const { return c_; }

  /// Coefficient of z^k. Zero above start(); throws InsufficientMoments
  /// below lowest().
  Real coeff(int k) const;

  LaurentTail derivative() const;
  /// Restrict to exponents >= lowest.
  LaurentTail truncated(int lowest) const;
  /// Largest |coefficient| over the stored range.
  Real max_abs() const;

  friend LaurentTail operator+(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator-(const LaurentTail& a, const LaurentTail& b);
  friend LaurentTail operator*(const Real& s, const LaurentTail& a);

 private:
  int start_ = -1;
  std::vector<Real> c_;
};

/// Polynomial part plus negative-power tail of a product.
struct SeriesSplit {
  Poly poly;
  LaurentTail tail;
};

/// f(z) = sum_k m_k z^(-k-1), keeping `depth` terms.
LaurentTail laurent_from_moments(std::span<const Real> moments, int depth);

/// f * p, split into polynomial and tail. The tail keeps every coefficient
/// that the stored depth of f determines; `tail_depth` > 0 demands at least
/// that many tail terms (InsufficientMoments otherwise).
SeriesSplit series_combine(const LaurentTail& f, const Poly& p, int tail_depth = 0);

}  // namespace semiortho
