#include "semiortho/laurent.hpp"

#include "semiortho/errors.hpp"

#include <algorithm>
#include <string>

namespace semiortho {

LaurentTail::LaurentTail(int start, std::vector<Real> coeffs) : start_(start), c_(std::move(coeffs)) {
  if (start_ > -1) throw std::invalid_argument("LaurentTail must start at a negative power");
}

Real LaurentTail::coeff(int k) const {
  if (k > start_) return Real(0);
  if (k < lowest()) {
    throw Error(ErrorKind::InsufficientMoments,
                "coefficient of z^" + std::to_string(k) + " lies below the stored depth (lowest z^" +
                    std::to_string(lowest()) + ")");
  }
  return c_[static_cast<std::size_t>(start_ - k)];
}

LaurentTail LaurentTail::derivative() const {
  std::vector<Real> d(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) d[j] = c_[j] * (start_ - static_cast<int>(j));
  return LaurentTail(start_ - 1, std::move(d));
}

LaurentTail LaurentTail::truncated(int lowest_exp) const {
  if (lowest_exp <= lowest()) return *this;
  const int keep = std::max(0, start_ - lowest_exp + 1);
  return LaurentTail(start_, std::vector<Real>(c_.begin(), c_.begin() + std::min(keep, length())));
}

Real LaurentTail::max_abs() const {
  Real m(0);
  for (const auto& x : c_) m = std::max(m, boost::multiprecision::abs(x));
  return m;
}

namespace {

LaurentTail combine(const LaurentTail& a, const LaurentTail& b, int sign) {
  const int top = std::max(a.start(), b.start());
  const int low = std::max(a.lowest(), b.lowest());
  std::vector<Real> c;
  for (int k = top; k >= low; --k) {
    Real x = a.coeff(k);
    if (sign > 0) {
      x += b.coeff(k);
    } else {
      x -= b.coeff(k);
    }
    c.push_back(std::move(x));
  }
  return LaurentTail(top, std::move(c));
}

}  // namespace

LaurentTail operator+(const LaurentTail& a, const LaurentTail& b) { return combine(a, b, +1); }
LaurentTail operator-(const LaurentTail& a, const LaurentTail& b) { return combine(a, b, -1); }
LaurentTail operator*(const Real& s, const LaurentTail& a) {
  std::vector<Real> c = a.coeffs();
  for (auto& x : c) x *= s;
  return LaurentTail(a.start(), std::move(c));
}

LaurentTail laurent_from_moments(std::span<const Real> moments, int depth) {
  if (depth < 0 || static_cast<std::size_t>(depth) > moments.size()) {
    throw Error(ErrorKind::InsufficientMoments, "requested depth " + std::to_string(depth) + " but only " +
                                                    std::to_string(moments.size()) + " moments available");
  }
  return LaurentTail(-1, std::vector<Real>(moments.begin(), moments.begin() + depth));
}

SeriesSplit series_combine(const LaurentTail& f, const Poly& p, int tail_depth) {
  if (p.is_zero()) return {Poly(), LaurentTail(-1, {})};
  const int n = p.degree();
  const int top = f.start() + n;
  // Coefficient of z^k needs f down to z^(k - n); known for k >= lowest + n.
  const int low = f.lowest() + n;
  const int available_tail = std::max(0, -1 - low + 1);
  if (tail_depth > 0 && available_tail < tail_depth) {
    throw Error(ErrorKind::InsufficientMoments, "product tail needs " + std::to_string(tail_depth) +
                                                    " terms, series depth allows " +
                                                    std::to_string(available_tail));
  }
  if (low > 0) {
    throw Error(ErrorKind::InsufficientMoments, "series too short to determine the polynomial part");
  }
  auto coeff_at = [&](int k) {
    Real s(0);
    for (int i = 0; i <= n; ++i) {
      const int e = k - i;  // exponent of f needed
      if (e > f.start() || e < f.lowest()) continue;
      s += p.coeffs()[static_cast<std::size_t>(i)] * f.coeff(e);
    }
    return s;
  };
  std::vector<Real> poly;
  for (int k = 0; k <= top; ++k) poly.push_back(coeff_at(k));
  std::vector<Real> tail;
  for (int k = -1; k >= low; --k) tail.push_back(coeff_at(k));
  return {Poly(std::move(poly)), LaurentTail(-1, std::move(tail))};
}

}  // namespace semiortho
