#include "semiortho/string_equations.hpp"

#include <algorithm>
#include <cmath>

namespace semiortho {

namespace mp = boost::multiprecision;

namespace {

Real at(const std::vector<Real>& u, int i) {
  if (i <= 0 || i >= static_cast<int>(u.size())) return Real(0);
  return u[i];
}

Real sextic_paths(const std::vector<Real>& u, int n) {
  const Real um2 = at(u, n - 2), um1 = at(u, n - 1), u0 = at(u, n), up1 = at(u, n + 1), up2 = at(u, n + 2);
  return um2 * um1 + um1 * um1 + 2 * um1 * u0 + u0 * u0 + 2 * u0 * up1 + um1 * up1 + up1 * up1 + up1 * up2;
}

void guard_divisor(const Real& d, const Real& tol, const std::string& where) {
  if (mp::abs(d) <= tol) {
    throw Error(ErrorKind::DivisionByNearZero, where + ": divisor below tolerance, the solution left the regular branch");
  }
}

RecurrenceTable blank_table(const StringSystem& sys, int N) {
  RecurrenceTable rt;
  rt.family = sys.name();
  rt.t = sys.t;
  rt.N = N;
  rt.u.assign(N + 1, Real(0));
  rt.b.assign(N + 1, Real(0));
  return rt;
}

}  // namespace

StringSystem StringSystem::for_weight(const WeightSpec& spec) {
  const auto& f = spec.family();
  if (std::holds_alternative<Quartic>(f)) return {Kind::Quartic, spec.t(), Real("-0.5")};
  if (std::holds_alternative<Cubic>(f)) return {Kind::Cubic, spec.t(), Real(0)};
  if (std::holds_alternative<Sextic>(f)) return {Kind::Sextic, spec.t(), Real(0)};
  if (const auto* m = std::get_if<Maxwell>(&f)) return {Kind::Folded, m->t, m->rho};
  throw Error(ErrorKind::UnsupportedFamily, "no string equation is implemented for " + spec.name());
}

std::string StringSystem::name() const {
  switch (kind) {
    case Kind::Quartic: return "quartic";
    case Kind::Cubic: return "cubic";
    case Kind::Folded: return "folded-maxwell";
    case Kind::Sextic: return "sextic";
  }
  return "";
}

Real StringSystem::rhs(int n) const {
  if (kind == Kind::Folded && n % 2 == 1) return Real(n) + 2 * rho + 1;
  return Real(n);
}

int StringSystem::last_checkable(int top) const { return kind == Kind::Sextic ? top - 2 : top - 1; }

StringSeeds seeds_from(const StringSystem& sys, const RecurrenceTable& rt) {
  StringSeeds s;
  const int nu = sys.kind == StringSystem::Kind::Sextic ? 4 : 1;
  if (rt.N < nu) throw Error(ErrorKind::InsufficientMoments, "seed table too short");
  s.u.assign(rt.u.begin(), rt.u.begin() + nu + 1);
  s.u[0] = 0;
  if (sys.kind == StringSystem::Kind::Cubic) s.b.push_back(rt.b[0]);
  return s;
}

RecurrenceTable propagate(const StringSystem& sys, const StringSeeds& seeds, int N, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const Real tol = ctx.tol();
  const Real agree = ctx.pow10(ctx.digits() / 2);
  RecurrenceTable rt = blank_table(sys, N);
  auto& u = rt.u;
  auto& b = rt.b;
  const Real& t = sys.t;
  switch (sys.kind) {
    case StringSystem::Kind::Quartic:
    case StringSystem::Kind::Folded: {
      if (seeds.u.size() < 2) throw Error(ErrorKind::ConfigError, "string propagation needs u_1");
      if (N >= 1) u[1] = seeds.u[1];
      for (int n = 1; n < N; ++n) {
        guard_divisor(u[n], tol, "u_" + std::to_string(n));
        u[n + 1] = sys.rhs(n) / u[n] - u[n - 1] - u[n] - 2 * t;
      }
      break;
    }
    case StringSystem::Kind::Cubic: {
      if (seeds.u.size() < 2 || seeds.b.empty()) throw Error(ErrorKind::ConfigError, "cubic propagation needs u_1, b_0");
      b[0] = seeds.b[0];
      if (N >= 1) u[1] = seeds.u[1];
      const Real implied = -b[0] * b[0] - t;
      if (mp::abs(implied - seeds.u[1]) > agree * std::max(Real(1), mp::abs(implied))) {
        throw Error(ErrorKind::ComplexityBreakdown, "cubic seeds violate u_1 + b_0^2 + t = 0");
      }
      for (int n = 1; n <= N; ++n) {
        guard_divisor(u[n], tol, "u_" + std::to_string(n));
        b[n] = -Real(n) / u[n] - b[n - 1];
        if (n < N) u[n + 1] = -u[n] - b[n] * b[n] - t;
      }
      break;
    }
    case StringSystem::Kind::Sextic: {
      if (seeds.u.size() < 5) throw Error(ErrorKind::ConfigError, "sextic propagation needs u_1..u_4");
      for (int n = 1; n <= std::min(N, 4); ++n) u[n] = seeds.u[n];
      std::vector<Real> work(u);
      work.resize(std::max<std::size_t>(work.size(), 7), Real(0));
      for (int k = 1; k <= 4; ++k) work[k] = seeds.u[k];
      auto solve_top = [&](std::vector<Real>& v, int n) {
        guard_divisor(v[n], tol, "u_" + std::to_string(n));
        guard_divisor(v[n + 1], tol, "u_" + std::to_string(n + 1));
        v[n + 2] = 0;
        const Real rest = sextic_paths(v, n);
        return ((sys.rhs(n) / v[n] - 2 * t) / 6 - rest) / v[n + 1];
      };
      // The relations at n = 1, 2 re-derive u_3, u_4: the seeds must agree.
      for (int n = 1; n <= 2; ++n) {
        std::vector<Real> v(work.begin(), work.begin() + n + 2);
        v.resize(n + 3, Real(0));
        const Real implied = solve_top(v, n);
        if (mp::abs(implied - seeds.u[n + 2]) > agree * std::max(Real(1), mp::abs(implied))) {
          throw Error(ErrorKind::ComplexityBreakdown,
                      "sextic seeds inconsistent with the string equation at n=" + std::to_string(n));
        }
      }
      u.resize(N + 3, Real(0));
      for (int n = 3; n + 2 <= N; ++n) u[n + 2] = solve_top(u, n);
      u.resize(N + 1);
      break;
    }
  }
  return rt;
}

ResidualReport residual_check(const StringSystem& sys, const RecurrenceTable& rt, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  ResidualReport rep;
  rep.identity = sys.name() + "-string-equation";
  rep.tolerance = ctx.pow10(static_cast<int>(std::floor(rt.min_certified())) - 2);
  const auto& u = rt.u;
  const auto& b = rt.b;
  const int last = sys.last_checkable(rt.N);
  for (int n = (sys.kind == StringSystem::Kind::Cubic ? 0 : 1); n <= last; ++n) {
    switch (sys.kind) {
      case StringSystem::Kind::Quartic:
      case StringSystem::Kind::Folded:
        rep.entries.push_back({n, sys.t, at(u, n) * (at(u, n - 1) + u[n] + u[n + 1] + 2 * sys.t) - sys.rhs(n), {}});
        break;
      case StringSystem::Kind::Cubic:
        rep.entries.push_back({n, sys.t, at(u, n) + u[n + 1] + b[n] * b[n] + sys.t, {}});
        if (n >= 1) rep.entries.push_back({n, sys.t, Real(n) + u[n] * (b[n] + b[n - 1]), {}});
        break;
      case StringSystem::Kind::Sextic:
        rep.entries.push_back({n, sys.t, u[n] * (6 * sextic_paths(u, n) + 2 * sys.t) - sys.rhs(n), {}});
        break;
    }
  }
  return rep;
}

RecurrenceTable unfold_maxwell(const RecurrenceTable& mx) {
  RecurrenceTable rt;
  rt.family = "folded-maxwell";
  rt.t = mx.t;
  rt.N = 2 * mx.N + 1;
  rt.u.assign(rt.N + 1, Real(0));
  rt.b.assign(rt.N + 1, Real(0));
  rt.u[1] = 2 * (mx.b[0] - mx.t);
  for (int n = 1; n <= mx.N; ++n) {
    if (rt.u[2 * n - 1] == 0) throw Error(ErrorKind::DivisionByNearZero, "folded u vanishes");
    rt.u[2 * n] = 4 * mx.u[n] / rt.u[2 * n - 1];
    rt.u[2 * n + 1] = 2 * (mx.b[n] - mx.t) - rt.u[2 * n];
  }
  // Digits carry over index by index: u~_{2n}, u~_{2n+1} come from u_n, b_n.
  if (!mx.certified_digits.empty()) {
    rt.certified_digits.assign(rt.N + 1, 0.0);
    for (int k = 0; k <= rt.N; ++k) rt.certified_digits[k] = mx.certified_digits[std::min(mx.N, (k + 1) / 2)];
  }
  return rt;
}

namespace {

struct LqProblem {
  Real t;
  int M;
  std::vector<Real> r;  // r[1..M]
};

Real lq_sum(const std::vector<Real>& u, int n, const Real& t) { return at(u, n - 1) + u[n] + at(u, n + 1) + 2 * t; }

/// Damped Jacobi sweeps until the largest relative update is below `stop`.
/// Returns false if a denominator leaves the positive cone or the cap is hit.
bool damped_fixed_point(const LqProblem& p, std::vector<Real>& u, const Real& stop, int cap) {
  std::vector<Real> next(u.size(), Real(0));
  for (int sweep = 0; sweep < cap; ++sweep) {
    Real worst(0);
    for (int n = 1; n <= p.M; ++n) {
      const Real s = lq_sum(u, n, p.t);
      if (s <= 0) return false;
      next[n] = (u[n] + p.r[n] / s) / 2;
      if (next[n] <= 0) return false;
      worst = std::max(worst, mp::abs(next[n] - u[n]) / u[n]);
    }
    std::swap(u, next);
    if (worst <= stop) return true;
  }
  return false;
}

/// Newton on F_n = u_n S_n - r_n with a tridiagonal (Thomas) solve.
bool newton(const LqProblem& p, std::vector<Real>& u, const Real& stop, int cap) {
  const int M = p.M;
  std::vector<Real> sub(M + 1), diag(M + 1), sup(M + 1), rhs(M + 1);
  for (int it = 0; it < cap; ++it) {
    for (int n = 1; n <= M; ++n) {
      const Real s = lq_sum(u, n, p.t);
      sub[n] = u[n];
      diag[n] = s + u[n];
      sup[n] = u[n];
      rhs[n] = -(u[n] * s - p.r[n]);
    }
    // Forward elimination.
    for (int n = 2; n <= M; ++n) {
      if (diag[n - 1] == 0) return false;
      const Real f = sub[n] / diag[n - 1];
      diag[n] -= f * sup[n - 1];
      rhs[n] -= f * rhs[n - 1];
    }
    if (diag[M] == 0) return false;
    std::vector<Real> d(M + 2, Real(0));
    d[M] = rhs[M] / diag[M];
    for (int n = M - 1; n >= 1; --n) d[n] = (rhs[n] - sup[n] * d[n + 1]) / diag[n];
    Real worst(0);
    for (int n = 1; n <= M; ++n) {
      u[n] += d[n];
      if (u[n] <= 0) return false;
      worst = std::max(worst, mp::abs(d[n]) / u[n]);
    }
    if (worst <= stop) return true;
  }
  return false;
}

Real lq_guess(const Real& t, const Real& r) { return (-t + mp::sqrt(t * t + 3 * r)) / 3; }

LqProblem make_problem(const Real& t, int M, const LewQuarlesOptions& opt) {
  StringSystem sys{opt.rho ? StringSystem::Kind::Folded : StringSystem::Kind::Quartic, t,
                   opt.rho ? *opt.rho : Real("-0.5")};
  LqProblem p{t, M, std::vector<Real>(M + 1, Real(0))};
  for (int n = 1; n <= M; ++n) p.r[n] = sys.rhs(n);
  return p;
}

std::vector<Real> initial_guess(const LqProblem& p, const std::vector<Real>* warm) {
  std::vector<Real> u(p.M + 2, Real(0));
  for (int n = 1; n <= p.M; ++n) {
    if (warm && n < static_cast<int>(warm->size()) && (*warm)[n] > 0) {
      u[n] = (*warm)[n];
    } else {
      u[n] = lq_guess(p.t, p.r[n]);
    }
  }
  return u;
}

/// Positive solution of the truncated system at p.t.
std::vector<Real> solve_truncated(const LqProblem& p, const PrecisionContext& ctx, const LewQuarlesOptions& opt,
                                  const std::vector<Real>* warm) {
  const Real tol = ctx.tol();
  const Real coarse("1e-12");
  std::vector<Real> u = initial_guess(p, warm);
  if (warm) {
    std::vector<Real> v = u;
    if (newton(p, v, tol, 60)) return v;
  }
  if (damped_fixed_point(p, u, coarse, std::min(opt.max_sweeps, 20000)) && newton(p, u, tol, 60)) return u;

  // Continuation in t from t = 0 along the positive branch.
  LqProblem q = p;
  q.t = 0;
  std::vector<Real> v = initial_guess(q, nullptr);
  if (!damped_fixed_point(q, v, coarse, opt.max_sweeps) || !newton(q, v, coarse, 60)) {
    throw Error(ErrorKind::NonConvergence, "Lew-Quarles iteration did not converge at t=0");
  }
  Real tcur(0);
  Real step = mp::abs(p.t) < Real("0.25") ? mp::abs(p.t) : Real("0.25");
  const Real dir = p.t < 0 ? Real(-1) : Real(1);
  const Real min_step("1e-8");
  while (tcur != p.t) {
    Real tnext = tcur + dir * step;
    if ((dir > 0 && tnext > p.t) || (dir < 0 && tnext < p.t)) tnext = p.t;
    q.t = tnext;
    std::vector<Real> w = v;
    if (newton(q, w, coarse, 30)) {
      v = std::move(w);
      tcur = tnext;
      step = std::min(step * Real("1.5"), Real(1));
    } else {
      step /= 2;
      if (step < min_step) {
        throw Error(ErrorKind::NegativeIterate,
                    "continuation toward t=" + to_decimal(p.t, 6) + " stalled at t=" + to_decimal(tcur, 6));
      }
    }
  }
  if (!newton(p, v, tol, 60)) throw Error(ErrorKind::NonConvergence, "Newton polish failed");
  return v;
}

}  // namespace

RecurrenceTable lew_quarles(const Real& t, int N, const PrecisionContext& ctx, const LewQuarlesOptions& opt) {
  ScopedPrecision scope(ctx);
  if (N < 1) throw Error(ErrorKind::ConfigError, "Lew-Quarles needs N >= 1");
  const Real tol = ctx.tol();
  int buffer = std::max(opt.buffer, 1);
  std::vector<Real> prev = solve_truncated(make_problem(t, N + buffer, opt), ctx, opt, opt.warm_start);
  // The truncation error decays geometrically away from the cut; double the
  // buffer until the first N entries stop moving.
  for (int round = 0; round < 12; ++round) {
    buffer *= 2;
    std::vector<Real> cur = solve_truncated(make_problem(t, N + buffer, opt), ctx, opt, &prev);
    Real change(0);
    for (int n = 1; n <= N; ++n) change = std::max(change, mp::abs(cur[n] - prev[n]) / cur[n]);
    prev = std::move(cur);
    if (change <= tol) break;
    if (round == 11) throw Error(ErrorKind::NonConvergence, "truncation buffer did not stabilize");
  }
  RecurrenceTable rt;
  rt.family = opt.rho ? "folded-maxwell" : "quartic";
  rt.t = t;
  rt.N = N;
  rt.u.assign(prev.begin(), prev.begin() + N + 1);
  rt.u[0] = 0;
  rt.b.assign(N + 1, Real(0));
  rt.certified_digits.assign(N + 1, ctx.digits() - ctx.guard());
  return rt;
}

}  // namespace semiortho
