#pragma once

#include "semiortho/complex.hpp"

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

namespace semiortho {

/// Dense polynomial, lowest degree first. The zero polynomial has no
/// coefficients and degree -1.
template <class S>
class BasicPoly {
 public:
  using Scalar = S;

  BasicPoly() = default;
  explicit BasicPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim_exact(); }
  BasicPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim_exact(); }

  static BasicPoly constant(S value) { return BasicPoly(std::vector<S>{std::move(value)}); }
  /// z^k
  static BasicPoly monomial(int k, S value = S(1)) {
    std::vector<S> c(static_cast<std::size_t>(k) + 1, S(0));
    c.back() = std::move(value);
    return BasicPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<S>& coeffs() const { return c_; }
  /// Coefficient of z^k; zero outside the stored range.
  S coeff(int k) const {
    if (k < 0 || k > degree()) return S(0);
    return c_[static_cast<std::size_t>(k)];
  }
  const S& leading() const { return c_.back(); }

  template <class X>
  X operator()(const X& z) const {
    X acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + X(*it);
    return acc;
  }

  /// Drops trailing coefficients whose magnitude is at most `threshold`.
  BasicPoly normalized(const Real& threshold) const {
    BasicPoly r = *this;
    while (!r.c_.empty() && magnitude(r.c_.back()) <= threshold) r.c_.pop_back();
    return r;
  }

  /// Keeps only the coefficients of z^0..z^max_degree.
  BasicPoly truncated(int max_degree) const {
    if (max_degree >= degree()) return *this;
    if (max_degree < 0) return BasicPoly();
    return BasicPoly(std::vector<S>(c_.begin(), c_.begin() + max_degree + 1));
  }

  /// Largest |coefficient| over degrees > k (zero if none).
  Real max_abs_above(int k) const {
    Real m(0);
    for (int i = std::max(k + 1, 0); i <= degree(); ++i) m = std::max(m, magnitude(c_[i]));
    return m;
  }
  Real max_abs() const { return max_abs_above(-1); }

  BasicPoly derivative() const {
    if (c_.size() <= 1) return BasicPoly();
    std::vector<S> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * S(static_cast<int>(i));
    return BasicPoly(std::move(d));
  }

  BasicPoly& operator+=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim_exact();
    return *this;
  }
  BasicPoly& operator-=(const BasicPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), S(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim_exact();
    return *this;
  }
  BasicPoly& operator*=(const S& s) {
    for (auto& x : c_) x *= s;
    trim_exact();
    return *this;
  }

  friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
  friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }
  friend BasicPoly operator-(const BasicPoly& a) { return BasicPoly() - a; }
  friend BasicPoly operator*(BasicPoly a, const S& s) { return a *= s; }
  friend BasicPoly operator*(const S& s, BasicPoly a) { return a *= s; }
  friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
    if (a.is_zero() || b.is_zero()) return BasicPoly();
    std::vector<S> r(a.c_.size() + b.c_.size() - 1, S(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return BasicPoly(std::move(r));
  }

 private:
  // Only exact zeros are dropped implicitly; tolerance-based trimming is an
  // explicit normalized() call.
  void trim_exact() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }

  std::vector<S> c_;
};

using Poly = BasicPoly<Real>;
using ComplexPoly = BasicPoly<Complex>;

inline ComplexPoly promote(const Poly& p) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return ComplexPoly(std::move(c));
}

/// Quotient and remainder of polynomial division by a nonzero divisor.
template <class S>
std::pair<BasicPoly<S>, BasicPoly<S>> divmod(const BasicPoly<S>& num, const BasicPoly<S>& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {BasicPoly<S>(), num};
  std::vector<S> rem = num.coeffs();
  std::vector<S> quo(static_cast<std::size_t>(num.degree() - den.degree()) + 1, S(0));
  const int dd = den.degree();
  for (int k = num.degree() - dd; k >= 0; --k) {
    S q = rem[k + dd] / den.leading();
    quo[k] = q;
    for (int j = 0; j <= dd; ++j) rem[k + j] -= q * den.coeffs()[j];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {BasicPoly<S>(std::move(quo)), BasicPoly<S>(std::move(rem))};
}

/// Largest coefficient magnitude of a - b.
template <class S>
Real max_coeff_diff(const BasicPoly<S>& a, const BasicPoly<S>& b) {
  return (a - b).max_abs();
}

}  // namespace semiortho
