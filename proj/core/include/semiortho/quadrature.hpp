#pragma once

#include "semiortho/complex.hpp"
#include "semiortho/errors.hpp"

#include <functional>
#include <string>
#include <vector>

namespace semiortho {

/// A discrete measure: sum_j w[j] * phi(x[j]) approximates the weighted
/// integral of phi. Weights already include the weight function and the
/// change-of-variables Jacobian; for contour rules both are complex and the
/// pairing is bilinear.
template <class S>
struct Rule {
  std::vector<S> x;
  std::vector<S> w;
  int level = 0;
  std::size_t size() const { return x.size(); }
};

using RealRule = Rule<Real>;
using ContourRule = Rule<Complex>;

/// Emits the nodes belonging to one abscissa tau of a double-exponential map,
/// with weights *excluding* the step h.
template <class S>
using NodeEmitter = std::function<void(const Real& tau, const std::function<void(S, S)>& emit)>;

/// sum_j w_j x_j^k for k = 0..max_power.
template <class S>
std::vector<S> rule_moments(const Rule<S>& rule, int max_power) {
  std::vector<S> m(static_cast<std::size_t>(max_power) + 1, S(0));
  for (std::size_t j = 0; j < rule.size(); ++j) {
    S term = rule.w[j];
    for (int k = 0; k <= max_power; ++k) {
      m[k] += term;
      term *= rule.x[j];
    }
  }
  return m;
}

struct DoubleExponentialOptions {
  int max_power = 0;     // functionals x^0..x^max_power drive convergence
  Real target;           // relative accuracy demanded between levels
  Real cutoff;           // node truncation threshold relative to the peak term
  int max_level = 14;
  double tau_limit = 8.0;
};

/// Level-refined double-exponential quadrature. The step starts at 1/4 and is
/// halved until every tracked functional changes by less than `target`
/// relative to its absolute integral; QuadratureNonConvergence otherwise.
template <class S>
Rule<S> double_exponential_rule(const NodeEmitter<S>& emitter, const DoubleExponentialOptions& opt) {
  struct Node {
    S x;
    S w;  // without h
  };
  const int K = opt.max_power;

  auto term_size = [&](const S& x, const S& w) {
    Real ax = magnitude(x);
    Real aw = magnitude(w);
    Real big = ax > 1 ? boost::multiprecision::pow(ax, K) : Real(1);
    return aw * big;
  };

  // Truncation range, scanned at a fixed resolution outwards from 0.
  auto scan = [&](int direction, const Real& peak_hint) {
    Real peak = peak_hint;
    const Real step("0.125");
    int below = 0;
    Real tau(0);
    Real last_needed(0);
    while (boost::multiprecision::abs(tau) < opt.tau_limit) {
      tau += step * direction;
      Real local(0);
      emitter(tau, [&](S x, S w) { local = std::max(local, term_size(x, w)); });
      if (local > peak) peak = local;
      if (local <= opt.cutoff * peak) {
        if (++below >= 3) break;
      } else {
        below = 0;
        last_needed = tau;
      }
    }
    return std::pair<Real, Real>(last_needed + step * direction * 2, peak);
  };
  Real peak0(0);
  emitter(Real(0), [&](S x, S w) { peak0 = std::max(peak0, term_size(x, w)); });
  auto [tau_hi, peak_hi] = scan(+1, peak0);
  auto [tau_lo, peak_lo] = scan(-1, peak_hi);
  const Real peak = std::max(peak_hi, peak_lo);

  std::vector<Node> nodes;
  std::vector<S> sums(static_cast<std::size_t>(K) + 1, S(0));
  std::vector<Real> abs_sums(static_cast<std::size_t>(K) + 1, Real(0));
  auto accumulate = [&](const Real& tau) {
    emitter(tau, [&](S x, S w) {
      if (term_size(x, w) <= opt.cutoff * peak * Real("1e-10")) return;
      S term = w;
      Real aterm = magnitude(w);
      Real ax = magnitude(x);
      for (int k = 0; k <= K; ++k) {
        sums[k] += term;
        abs_sums[k] += aterm;
        term *= x;
        aterm *= ax;
      }
      nodes.push_back(Node{std::move(x), std::move(w)});
    });
  };

  Real h("0.25");
  // Level 0: every multiple of h inside the range.
  for (Real tau(0); tau <= tau_hi; tau += h) accumulate(tau);
  for (Real tau = -h; tau >= tau_lo; tau -= h) accumulate(tau);
  std::vector<S> prev(sums.size());
  for (std::size_t k = 0; k < sums.size(); ++k) prev[k] = sums[k] * S(h);

  for (int level = 1; level <= opt.max_level; ++level) {
    h /= 2;
    // New abscissas are the odd multiples of the halved step.
    for (Real tau = h; tau <= tau_hi; tau += 2 * h) accumulate(tau);
    for (Real tau = -h; tau >= tau_lo; tau -= 2 * h) accumulate(tau);
    Real worst(0);
    std::vector<S> cur(sums.size());
    for (std::size_t k = 0; k < sums.size(); ++k) {
      cur[k] = sums[k] * S(h);
      Real scale = abs_sums[k] * h;
      if (scale == 0) continue;
      worst = std::max(worst, magnitude(cur[k] - prev[k]) / scale);
    }
    prev = std::move(cur);
    if (worst <= opt.target) {
      Rule<S> rule;
      rule.level = level;
      rule.x.reserve(nodes.size());
      rule.w.reserve(nodes.size());
      for (auto& n : nodes) {
        rule.x.push_back(std::move(n.x));
        rule.w.push_back(n.w * S(h));
      }
      return rule;
    }
  }
  throw Error(ErrorKind::QuadratureNonConvergence,
              "double-exponential refinement exhausted " + std::to_string(opt.max_level) + " levels");
}

}  // namespace semiortho
