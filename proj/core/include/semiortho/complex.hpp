#pragma once

#include "semiortho/precision.hpp"

namespace semiortho {

// Minimal complex scalar over Real. Only what contour quadrature and the
// bilinear (non-conjugating) inner products need.
struct Complex {
  Real re;
  Real im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}  // NOLINT: implicit promotion real -> complex
  Complex(int r) : re(r), im(0) {}               // NOLINT
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = std::move(r);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = std::move(r);
    return *this;
  }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re, -a.im); }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

inline Real abs(const Complex& z) { return boost::multiprecision::hypot(z.re, z.im); }
inline Complex exp(const Complex& z) {
  Real m = boost::multiprecision::exp(z.re);
  return Complex(m * boost::multiprecision::cos(z.im), m * boost::multiprecision::sin(z.im));
}
/// e^{i theta}
inline Complex polar(const Real& r, const Real& theta) {
  return Complex(r * boost::multiprecision::cos(theta), r * boost::multiprecision::sin(theta));
}

// Uniform helpers so templates can treat Real and Complex alike.
inline Real magnitude(const Real& x) { return boost::multiprecision::abs(x); }
inline Real magnitude(const Complex& z) { return abs(z); }
inline const Real& real_part(const Real& x) { return x; }
inline const Real& real_part(const Complex& z) { return z.re; }
inline Real imag_part(const Real&) { return Real(0); }
inline const Real& imag_part(const Complex& z) { return z.im; }

}  // namespace semiortho
