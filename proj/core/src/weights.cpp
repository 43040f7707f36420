#include "semiortho/weights.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace semiortho {

namespace mp = boost::multiprecision;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_integer(const Real& x) { return x == mp::round(x); }

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConfigError, what);
}

Real current_tol() {
  const int digits = static_cast<int>(Real::default_precision());
  return mp::pow(Real(10), -std::max(digits - 10, 10));
}

}  // namespace

WeightSpec::WeightSpec(Family family) : family_(std::move(family)) {
  std::visit(overloaded{
                 [&](const Quartic& f) {
                   W_ = Poly{Real(1)};
                   V_ = Poly{Real(0), -f.t, Real(0), Real("-0.5")};
                 },
                 [&](const Cubic& f) {
                   W_ = Poly{Real(1)};
                   V_ = Poly{f.t / 2, Real(0), Real("0.5")};
                 },
                 [&](const Maxwell& f) {
                   require(f.rho > -1, "Maxwell rho must exceed -1");
                   W_ = Poly{-f.t, Real(1)};
                   V_ = Poly{f.rho / 2, f.t, Real(-1)};
                 },
                 [&](const Sextic& f) {
                   W_ = Poly{Real(1)};
                   V_ = Poly{Real(0), -f.t, Real(0), Real(0), Real(0), Real(-3)};
                 },
                 [&](const GenJacobi& f) {
                   require(!is_integer(f.alpha) && !is_integer(f.beta) && !is_integer(f.gamma),
                           "generalized Jacobi exponents must be non-integers");
                   require(f.alpha > -1 && f.beta > -1, "generalized Jacobi exponents at 0 and 1 must exceed -1");
                   require(f.t > 1, "generalized Jacobi parameter t must exceed 1");
                   const Poly z{Real(0), Real(1)};
                   const Poly zm1{Real(-1), Real(1)};
                   const Poly zmt{-f.t, Real(1)};
                   W_ = z * zm1 * zmt;
                   V_ = (f.alpha * (z * zmt) + f.beta * (zm1 * zmt) + f.gamma * (z * zm1)) * Real("0.5");
                 },
             },
             family_);

  // Pearson consistency at five interior points of the support.
  std::array<Real, 5> xs;
  switch (support()) {
    case Support::HalfLine:
      xs = {t() + Real("0.2"), t() + Real("0.5"), t() + Real(1), t() + Real("1.5"), t() + Real("2.5")};
      break;
    case Support::UnitInterval:
      xs = {Real("0.1"), Real("0.3"), Real("0.5"), Real("0.7"), Real("0.9")};
      break;
    default:
      xs = {Real("-1.3"), Real("-0.4"), Real("0.3"), Real("0.9"), Real("1.7")};
  }
  const Real tol = current_tol();
  for (const auto& x : xs) {
    const Real lhs = log_derivative(x);
    const Real rhs = 2 * V_(x) / W_(x);
    if (mp::abs(lhs - rhs) > tol * (1 + mp::abs(lhs))) {
      throw Error(ErrorKind::PearsonInconsistency, name() + ": W w' != 2 V w at x = " + to_decimal(x, 10));
    }
  }
}

std::string WeightSpec::name() const {
  return std::visit(overloaded{
                        [](const Quartic&) { return std::string("quartic"); },
                        [](const Cubic&) { return std::string("cubic"); },
                        [](const Maxwell&) { return std::string("maxwell"); },
                        [](const Sextic&) { return std::string("sextic"); },
                        [](const GenJacobi&) { return std::string("genjacobi"); },
                    },
                    family_);
}

const Real& WeightSpec::t() const {
  return std::visit([](const auto& f) -> const Real& { return f.t; }, family_);
}

WeightSpec WeightSpec::with_t(const Real& t) const {
  Family f = family_;
  std::visit([&](auto& g) { g.t = t; }, f);
  return WeightSpec(std::move(f));
}

Support WeightSpec::support() const {
  return std::visit(overloaded{
                        [](const Cubic&) { return Support::CubicRays; },
                        [](const Maxwell&) { return Support::HalfLine; },
                        [](const GenJacobi&) { return Support::UnitInterval; },
                        [](const auto&) { return Support::RealLine; },
                    },
                    family_);
}

bool WeightSpec::is_even() const {
  return std::holds_alternative<Quartic>(family_) || std::holds_alternative<Sextic>(family_);
}

Real WeightSpec::log_derivative(const Real& x) const {
  return std::visit(overloaded{
                        [&](const Quartic& f) -> Real { return -x * x * x - 2 * f.t * x; },
                        [&](const Cubic& f) -> Real { return x * x + f.t; },
                        [&](const Maxwell& f) -> Real { return f.rho / (x - f.t) - 2 * x; },
                        [&](const Sextic& f) -> Real { return -6 * mp::pow(x, 5) - 2 * f.t * x; },
                        [&](const GenJacobi& f) -> Real {
                          return -f.alpha / (1 - x) + f.beta / x - f.gamma / (f.t - x);
                        },
                    },
                    family_);
}

MomentRecursion::MomentRecursion(const WeightSpec& spec) {
  const Poly& W = spec.W();
  const Poly eta = W.derivative() + Real(2) * spec.V();
  D_ = std::max(W.degree(), eta.degree() + 1);
  if (D_ < 2) throw Error(ErrorKind::UnsupportedFamily, "degenerate Pearson pair");
  xi_.assign(static_cast<std::size_t>(D_) + 1, Real(0));
  eta_.assign(static_cast<std::size_t>(D_) + 1, Real(0));
  for (int j = 0; j <= W.degree(); ++j) xi_[j] = W.coeff(j);
  for (int j = 0; j <= eta.degree(); ++j) eta_[j] = eta.coeff(j);
}

Real MomentRecursion::coefficient(int j, int k) const {
  Real c = k * xi_[j];
  if (j >= 1) c += eta_[j - 1];
  return c;
}

std::vector<Real> MomentRecursion::extend(std::vector<Real> mu, int count) const {
  if (static_cast<int>(mu.size()) < seeds()) {
    throw Error(ErrorKind::InsufficientMoments, "recursion needs " + std::to_string(seeds()) + " seed moments");
  }
  mu.resize(std::max<std::size_t>(mu.size(), static_cast<std::size_t>(std::max(count, 0))));
  for (int k = 0; k - 1 + D_ < count; ++k) {
    const int top = k - 1 + D_;
    if (top < seeds()) continue;
    Real s(0);
    for (int j = 0; j < D_; ++j) {
      const int idx = k - 1 + j;
      if (idx < 0) continue;
      s += coefficient(j, k) * mu[idx];
    }
    const Real lead = coefficient(D_, k);
    if (lead == 0) throw Error(ErrorKind::UnsupportedFamily, "moment recursion degenerates at k=" + std::to_string(k));
    mu[top] = -s / lead;
  }
  mu.resize(static_cast<std::size_t>(count));
  return mu;
}

AnyRule weight_rule(const WeightSpec& spec, int max_power, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  DoubleExponentialOptions opt;
  opt.max_power = max_power;
  opt.target = ctx.tol();
  opt.cutoff = ctx.pow10(ctx.digits() + 10);
  const Real half_pi = pi() / 2;

  return std::visit(
      overloaded{
          [&](const Cubic& f) -> AnyRule {
            const Complex up = polar(Real(1), pi() / 3);
            const Complex down(up.re, -up.im);
            NodeEmitter<Complex> em = [&](const Real& tau, const std::function<void(Complex, Complex)>& emit) {
              const Real u = half_pi * mp::sinh(tau);
              const Real r = mp::exp(u);
              const Real dr = r * half_pi * mp::cosh(tau);
              const Real r3 = r * r * r / 3;
              // Lower ray enters with a minus sign: it is traversed inwards.
              emit(up * r, exp(Complex(-r3) + Complex(f.t * r) * up) * up * dr);
              emit(down * r, -(exp(Complex(-r3) + Complex(f.t * r) * down) * down * dr));
            };
            return double_exponential_rule<Complex>(em, opt);
          },
          [&](const Maxwell& f) -> AnyRule {
            NodeEmitter<Real> em = [&](const Real& tau, const std::function<void(Real, Real)>& emit) {
              const Real u = half_pi * mp::sinh(tau);
              const Real s = mp::exp(u);
              const Real x = f.t + s;
              emit(x, mp::exp(f.rho * u - x * x) * s * half_pi * mp::cosh(tau));
            };
            return double_exponential_rule<Real>(em, opt);
          },
          [&](const GenJacobi& f) -> AnyRule {
            NodeEmitter<Real> em = [&](const Real& tau, const std::function<void(Real, Real)>& emit) {
              const Real u = half_pi * mp::sinh(tau);
              const Real x = 1 / (1 + mp::exp(-2 * u));
              const Real y = 1 / (1 + mp::exp(2 * u));  // 1 - x without cancellation
              const Real jac = pi() * mp::cosh(tau) * x * y;
              const Real w = mp::exp(f.alpha * mp::log(y) + f.beta * mp::log(x) + f.gamma * mp::log(f.t - x));
              emit(x, w * jac);
            };
            return double_exponential_rule<Real>(em, opt);
          },
          [&](const auto&) -> AnyRule {
            // Even weights: sinh-sinh over the whole line.
            NodeEmitter<Real> em = [&](const Real& tau, const std::function<void(Real, Real)>& emit) {
              const Real u = half_pi * mp::sinh(tau);
              const Real x = mp::sinh(u);
              const Real jac = mp::cosh(u) * half_pi * mp::cosh(tau);
              const Real x2 = x * x;
              Real expo;
              if (std::holds_alternative<Quartic>(spec.family())) {
                expo = -x2 * x2 / 4 - spec.t() * x2;
              } else {
                expo = -x2 * x2 * x2 - spec.t() * x2;
              }
              emit(x, mp::exp(expo) * jac);
            };
            return double_exponential_rule<Real>(em, opt);
          },
      },
      spec.family());
}

namespace {

std::vector<Complex> moments_of(const AnyRule& rule, int max_power) {
  return std::visit(
      [&](const auto& r) {
        auto raw = rule_moments(r, max_power);
        std::vector<Complex> out;
        out.reserve(raw.size());
        for (auto& x : raw) out.emplace_back(std::move(x));
        return out;
      },
      rule);
}

}  // namespace

std::vector<Complex> seed_moments(const WeightSpec& spec, int count, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (count < 1) throw Error(ErrorKind::InsufficientMoments, "need at least one moment");
  const AnyRule rule = weight_rule(spec, count - 1, ctx);
  return moments_of(rule, count - 1);
}

MomentTable build_moment_table(const WeightSpec& spec, int K, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const MomentRecursion rec(spec);
  if (K + 1 < rec.seeds()) {
    throw Error(ErrorKind::InsufficientMoments, "K=" + std::to_string(K) + " is below the recursion depth " +
                                                    std::to_string(rec.seeds()));
  }
  constexpr int kSpot = 12;
  const int max_power = std::max(K, kSpot);
  AnyRule rule = weight_rule(spec, max_power, ctx);
  const std::vector<Complex> raw = moments_of(rule, max_power);
  const Complex mu0 = raw[0];

  // Normalized quadrature moments; for the contour family they must come out real.
  std::vector<Real> quad(raw.size());
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const Complex q = raw[k] / mu0;
    if (spec.is_contour() && mp::abs(q.im) > ctx.pow10(ctx.digits() / 2) * (1 + mp::abs(q.re))) {
      throw Error(ErrorKind::SpotCheckFailure, "normalized contour moment m_" + std::to_string(k) + " is not real");
    }
    quad[k] = q.re;
  }
  if (spec.is_even()) {
    for (std::size_t k = 1; k < quad.size(); k += 2) quad[k] = 0;
  }

  std::vector<Real> seeds(quad.begin(), quad.begin() + rec.seeds());
  seeds[0] = 1;
  std::vector<Real> m = rec.extend(seeds, K + 1);

  MomentTable table{spec, ctx, {}, {}, nullptr, Real(0)};
  table.origin.resize(m.size(), MomentOrigin::Recursion);
  for (int k = 0; k < std::min(rec.seeds(), K + 1); ++k) table.origin[k] = MomentOrigin::Quadrature;
  if (spec.is_even()) {
    for (std::size_t k = 1; k < m.size(); k += 2) {
      m[k] = 0;
      table.origin[k] = MomentOrigin::Symmetry;
    }
  }

  const Real spot_tol = ctx.pow10(ctx.digits() / 2);
  for (int k = 0; k <= std::min(K, kSpot); ++k) {
    const Real err = mp::abs(m[k] - quad[k]);
    table.spot_check_error = std::max(table.spot_check_error, err / std::max(Real(1), mp::abs(quad[k])));
    if (err > spot_tol * std::max(Real(1), mp::abs(quad[k]))) {
      throw Error(ErrorKind::SpotCheckFailure, spec.name() + ": recursion and quadrature disagree at m_" +
                                                   std::to_string(k) + " by " + to_decimal(err, 6));
    }
  }

  std::visit(
      [&](auto& r) {
        using S = std::decay_t<decltype(r.w[0])>;
        const S inv = S(1) / S(mu0.re);
        if constexpr (std::is_same_v<S, Complex>) {
          for (auto& w : r.w) w /= mu0;
        } else {
          for (auto& w : r.w) w *= inv;
        }
      },
      rule);
  table.m = std::move(m);
  table.rule = std::make_shared<const AnyRule>(std::move(rule));
  return table;
}

}  // namespace semiortho
