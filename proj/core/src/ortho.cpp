#include "semiortho/ortho.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semiortho {

namespace mp = boost::multiprecision;

std::string method_name(RecurrenceMethod m) {
  return m == RecurrenceMethod::HankelRatio ? "hankel-ratio" : "stieltjes-quadrature";
}

std::optional<Real> RecurrenceTable::a(int n) const {
  if (u[n] <= 0) return std::nullopt;
  return mp::sqrt(u[n]);
}

Real RecurrenceTable::h(int n) const {
  Real p(1);
  for (int i = 1; i <= n; ++i) p *= u[i];
  return p;
}

std::optional<Real> RecurrenceTable::gamma(int n) const {
  const Real hn = h(n);
  if (hn <= 0) return std::nullopt;
  return 1 / mp::sqrt(hn);
}

double RecurrenceTable::min_certified(int upto) const {
  if (certified_digits.empty()) return 0;
  const int last = upto < 0 ? static_cast<int>(certified_digits.size()) - 1
                            : std::min<int>(upto, static_cast<int>(certified_digits.size()) - 1);
  double m = std::numeric_limits<double>::infinity();
  for (int n = 0; n <= last; ++n) m = std::min(m, certified_digits[n]);
  return m;
}

namespace {

RecurrenceTable hankel_route(const MomentTable& mt, int N) {
  const auto& m = mt.m;
  const Real tol = mt.ctx.tol();
  const int top = 2 * N + 1;
  RecurrenceTable rt;
  rt.u.assign(N + 1, Real(0));
  rt.b.assign(N + 1, Real(0));

  // sigma_{k,l} = <pi_k, x^l>: row k of the eliminated Hankel matrix.
  std::vector<Real> prev(top + 1, Real(0));
  std::vector<Real> cur(m.begin(), m.begin() + top + 1);
  rt.b[0] = m[1] / m[0];
  Real beta_prev = m[0];
  for (int k = 1; k <= N; ++k) {
    std::vector<Real> next(top + 1, Real(0));
    for (int l = k; l <= top - k; ++l) next[l] = cur[l + 1] - rt.b[k - 1] * cur[l] - beta_prev * prev[l];
    const Real& pivot = next[k];
    if (mp::abs(pivot) <= tol * std::max(Real(1), mp::abs(m[2 * k]))) {
      throw Error(ErrorKind::SingularHankel, "Hankel pivot " + std::to_string(k) + " vanishes to working precision");
    }
    rt.u[k] = pivot / cur[k - 1];
    rt.b[k] = next[k + 1] / pivot - cur[k] / cur[k - 1];
    beta_prev = rt.u[k];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return rt;
}

template <class S>
RecurrenceTable stieltjes_route(const Rule<S>& rule, int N, const Real& tol) {
  RecurrenceTable rt;
  rt.u.assign(N + 1, Real(0));
  rt.b.assign(N + 1, Real(0));
  const std::size_t J = rule.size();
  std::vector<S> p_prev(J, S(0));
  std::vector<S> p_cur(J, S(1));
  S h_cur(0);
  S xh(0);
  for (std::size_t j = 0; j < J; ++j) {
    h_cur += rule.w[j];
    xh += rule.w[j] * rule.x[j];
  }
  Real h_last = real_part(h_cur);
  rt.b[0] = real_part(xh / h_cur);
  for (int n = 0; n < N; ++n) {
    const S bn(rt.b[n]);
    const S un(rt.u[n]);
    S hn(0);
    S xn(0);
    for (std::size_t j = 0; j < J; ++j) {
      S next = (rule.x[j] - bn) * p_cur[j] - un * p_prev[j];
      p_prev[j] = std::move(p_cur[j]);
      p_cur[j] = std::move(next);
      const S wp2 = rule.w[j] * p_cur[j] * p_cur[j];
      hn += wp2;
      xn += wp2 * rule.x[j];
    }
    if (magnitude(hn) <= tol * mp::abs(h_last)) {
      throw Error(ErrorKind::SingularHankel, "discretized norm " + std::to_string(n + 1) + " vanishes");
    }
    rt.u[n + 1] = real_part(hn) / h_last;
    rt.b[n + 1] = real_part(xn / hn);
    h_last = real_part(hn);
  }
  return rt;
}

template <class S>
std::vector<double> digits_on_rule(const Rule<S>& rule, const RecurrenceTable& rt, const PrecisionContext& ctx) {
  const int N = rt.N;
  const std::size_t J = rule.size();
  // Gram matrix, upper triangle, row-major.
  std::vector<S> G(static_cast<std::size_t>((N + 1) * (N + 1)), S(0));
  std::vector<S> p(N + 1);
  for (std::size_t j = 0; j < J; ++j) {
    p[0] = S(1);
    if (N >= 1) p[1] = rule.x[j] - S(rt.b[0]);
    for (int n = 1; n < N; ++n) p[n + 1] = (rule.x[j] - S(rt.b[n])) * p[n] - S(rt.u[n]) * p[n - 1];
    for (int i = 0; i <= N; ++i) {
      const S wi = rule.w[j] * p[i];
      for (int k = i; k <= N; ++k) G[i * (N + 1) + k] += wi * p[k];
    }
  }
  std::vector<Real> h(N + 1);
  for (int n = 0; n <= N; ++n) h[n] = rt.h(n);
  const double cap = ctx.digits() - ctx.guard();
  std::vector<double> out(N + 1);
  Real worst(0);
  for (int n = 0; n <= N; ++n) {
    for (int i = 0; i <= n; ++i) {
      S g = G[i * (N + 1) + n];
      if (i == n) g -= S(h[n]);
      const Real r = magnitude(g) / mp::sqrt(mp::abs(h[i] * h[n]));
      worst = std::max(worst, r);
    }
    out[n] = std::min(cap, digits_of(worst, 1e9) - ctx.guard());
  }
  return out;
}

}  // namespace

RecurrenceTable recurrence_from_moments(const MomentTable& m, int N, RecurrenceMethod method) {
  ScopedPrecision scope(m.ctx);
  if (N < 0) throw Error(ErrorKind::ConfigError, "N must be non-negative");
  if (m.size() < 2 * N + 2) {
    throw Error(ErrorKind::InsufficientMoments, "N=" + std::to_string(N) + " needs " + std::to_string(2 * N + 2) +
                                                    " moments, table has " + std::to_string(m.size()));
  }
  RecurrenceTable rt;
  if (method == RecurrenceMethod::HankelRatio) {
    rt = hankel_route(m, N);
  } else {
    rt = std::visit([&](const auto& r) { return stieltjes_route(r, N, m.ctx.tol()); }, *m.rule);
  }
  rt.family = m.spec.name();
  rt.t = m.spec.t();
  rt.N = N;
  rt.method = method;
  if (m.spec.is_even()) {
    for (auto& x : rt.b) x = 0;
  }
  rt.certified_digits = estimate_certified_digits(rt, m);
  return rt;
}

std::vector<double> estimate_certified_digits(const RecurrenceTable& rt, const MomentTable& m) {
  ScopedPrecision scope(m.ctx);
  return std::visit([&](const auto& r) { return digits_on_rule(r, rt, m.ctx); }, *m.rule);
}

RecurrenceTable oracle_recurrence(const MomentTable& m, int N) {
  ScopedPrecision scope(m.ctx);
  const RecurrenceTable hk = recurrence_from_moments(m, N, RecurrenceMethod::HankelRatio);
  RecurrenceTable st = recurrence_from_moments(m, N, RecurrenceMethod::Stieltjes);
  for (int n = 0; n <= N; ++n) {
    const double cert = std::min(hk.certified_digits[n], st.certified_digits[n]);
    const Real bound = mp::pow(Real(10), 2 - cert);
    const Real du = mp::abs(hk.u[n] - st.u[n]) / std::max(Real(1), mp::abs(st.u[n]));
    const Real db = mp::abs(hk.b[n] - st.b[n]) / std::max(Real(1), mp::abs(st.b[n]));
    if (du > bound || db > bound) {
      throw Error(ErrorKind::MethodDisagreement,
                  m.spec.name() + ": Hankel and Stieltjes routes differ at n=" + std::to_string(n) + " (du=" +
                      to_decimal(du, 4) + ", db=" + to_decimal(db, 4) + ")");
    }
  }
  if (N >= 1 && st.certified_digits[1] <= 0) {
    throw Error(ErrorKind::PrecisionExhausted, "no certified digits left at n=1; raise the working precision");
  }
  return st;
}

std::vector<Poly> associated_by_recurrence(const RecurrenceTable& rt, int N) {
  std::vector<Poly> s(N + 1);
  s[0] = Poly();
  if (N >= 1) s[1] = Poly::constant(Real(1));
  const Poly z{Real(0), Real(1)};
  for (int n = 1; n < N; ++n) s[n + 1] = (z - Poly::constant(rt.b[n])) * s[n] - rt.u[n] * s[n - 1];
  return s;
}

PolySystem build_poly_system(const RecurrenceTable& rt, const MomentTable& m, int N, int depth) {
  ScopedPrecision scope(m.ctx);
  if (N > rt.N) throw Error(ErrorKind::InsufficientMoments, "recurrence table shorter than N");
  const int need = 2 * N + depth;
  if (m.size() < need) {
    throw Error(ErrorKind::InsufficientMoments, "eps depth " + std::to_string(depth) + " at N=" + std::to_string(N) +
                                                    " needs " + std::to_string(need) + " moments");
  }
  const LaurentTail f = laurent_from_moments(m.m, need);
  PolySystem ps;
  const Poly z{Real(0), Real(1)};
  ps.pi.push_back(Poly::constant(Real(1)));
  if (N >= 1) ps.pi.push_back(z - Poly::constant(rt.b[0]));
  for (int n = 1; n < N; ++n) ps.pi.push_back((z - Poly::constant(rt.b[n])) * ps.pi[n] - rt.u[n] * ps.pi[n - 1]);
  for (int n = 0; n <= N; ++n) {
    SeriesSplit split = series_combine(f, ps.pi[n]);
    ps.sigma.push_back(std::move(split.poly));
    std::vector<Real> tail;
    for (int k = -n - 1; k >= -n - depth; --k) tail.push_back(split.tail.coeff(k));
    ps.eps.emplace_back(-n - 1, std::move(tail));
  }
  return ps;
}

}  // namespace semiortho
