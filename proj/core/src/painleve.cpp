#include "semiortho/painleve.hpp"

#include "semiortho/errors.hpp"
#include "semiortho/string_equations.hpp"
#include "semiortho/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace semiortho {

namespace mp = boost::multiprecision;

namespace {

TSample sample_at(const WeightSpec& base, const Real& t, int N, const PrecisionContext& ctx) {
  const WeightSpec spec = base.with_t(t);
  const bool gj = std::holds_alternative<GenJacobi>(spec.family());
  const MomentTable mt = build_moment_table(spec, 2 * N + 8, ctx);
  TSample s{t, oracle_recurrence(mt, N), {}};
  if (gj) {
    const PolySystem ps = build_poly_system(s.rt, mt, N - 1, 3);
    const ThetaOmegaSequence tos = build_theta_omega(spec, mt, s.rt, ps, N - 1);
    const Real tol = ctx.pow10(static_cast<int>(s.rt.min_certified()) - 3);
    for (int n = 0; n < N; ++n) s.scalars.push_back(genjacobi_scalars(tos, s.rt, n, tol));
  }
  return s;
}

bool is_maxwell(const TGrid& g) { return std::holds_alternative<Maxwell>(g.spec.family()); }

/// The lattice the Toda/P_IV relations live on: u_n, or the folded u~_n.
std::vector<Real> lattice(const TGrid& g, const TSample& s) {
  return is_maxwell(g) ? unfold_maxwell(s.rt).u : s.rt.u;
}

double grid_certified(const TGrid& g) {
  double c = g.center.front().rt.min_certified();
  for (const auto& s : g.center) c = std::min(c, s.rt.min_certified());
  for (const auto& row : g.side)
    for (const auto& [m, p] : row) c = std::min({c, m.rt.min_certified(), p.rt.min_certified()});
  return c;
}

/// Accumulates FD residuals of one identity over the grid.
class FdReport {
 public:
  FdReport(const TGrid& g, std::string name, int derivative_order) : g_(g), order_(derivative_order) {
    r_.identity = std::move(name);
    r_.h_ladder = g.hs;
  }
  void add(int n, const Real& t, const Real& h, const Real& residual) { r_.entries.push_back({n, t, residual, h}); }
  void note(std::string s) { r_.notes.push_back(std::move(s)); }

  ResidualReport finish() {
    summarize_orders(r_);
    // The finite-difference error must be at least below the coarsest step;
    // the order estimate is the real test.
    r_.tolerance = g_.hs.front();
    const Real hmin = *std::min_element(g_.hs.begin(), g_.hs.end());
    const Real noise = g_.ctx.pow10(static_cast<int>(grid_certified(g_))) / mp::pow(hmin, order_);
    Real smallest = r_.per_h.empty() ? Real(0) : *std::min_element(r_.per_h.begin(), r_.per_h.end());
    if (smallest < 100 * noise) {
      r_.precision_floor = true;
      r_.notes.push_back("residual within two decades of the certified-digit floor");
    }
    return std::move(r_);
  }

 private:
  const TGrid& g_;
  int order_;
  ResidualReport r_;
};

Real d1(const Real& m, const Real& p, const Real& h) { return (p - m) / (2 * h); }
Real d2(const Real& m, const Real& c, const Real& p, const Real& h) { return (p - 2 * c + m) / (h * h); }

/// Runs `body(n, t, h, lm, lc, lp, sm, sc, sp)` for every grid point and step.
template <class F>
void for_each_point(const TGrid& g, F&& body) {
  for (std::size_t ti = 0; ti < g.ts.size(); ++ti) {
    const TSample& c = g.center[ti];
    const std::vector<Real> lc = lattice(g, c);
    for (std::size_t hi = 0; hi < g.hs.size(); ++hi) {
      const auto& [m, p] = g.side[ti][hi];
      body(g.ts[ti], g.hs[hi], lattice(g, m), lc, lattice(g, p), m, c, p);
    }
  }
}

int clamp_n(int n_max, int top) { return std::min(n_max, top); }

}  // namespace

TGrid make_tgrid(const WeightSpec& spec, std::vector<Real> ts, std::vector<Real> hs, int N,
                 const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (ts.empty() || !std::is_sorted(ts.begin(), ts.end())) throw Error(ErrorKind::ConfigError, "t values must be sorted");
  if (hs.size() < 2) throw Error(ErrorKind::ConfigError, "at least two finite-difference steps are needed");
  for (const auto& h : hs)
    if (h <= 0) throw Error(ErrorKind::ConfigError, "finite-difference steps must be positive");
  if (N < 3) throw Error(ErrorKind::ConfigError, "N must be at least 3");
  TGrid g{spec, std::move(ts), std::move(hs), N, ctx, {}, {}};
  for (const auto& t : g.ts) {
    g.center.push_back(sample_at(spec, t, N, ctx));
    std::vector<std::pair<TSample, TSample>> row;
    for (const auto& h : g.hs) row.emplace_back(sample_at(spec, t - h, N, ctx), sample_at(spec, t + h, N, ctx));
    g.side.push_back(std::move(row));
  }
  return g;
}

std::vector<ResidualReport> toda_check(const TGrid& g, int n_max) {
  ScopedPrecision scope(g.ctx);
  const Family& fam = g.spec.family();
  std::vector<ResidualReport> out;

  if (std::holds_alternative<Quartic>(fam) || std::holds_alternative<Maxwell>(fam)) {
    const bool folded = is_maxwell(g);
    FdReport rep(g, folded ? "toda-folded" : "toda-quartic", 1);
    for_each_point(g, [&](const Real& t, const Real& h, const auto& um, const auto& uc, const auto& up, auto&&...) {
      const int top = clamp_n(n_max, static_cast<int>(uc.size()) - 2);
      for (int n = 1; n <= top; ++n) {
        if (folded) {
          rep.add(n, t, h, d1(um[n], up[n], h) - uc[n] * (uc[n - 1] - uc[n + 1]));
        } else {
          const Real am = mp::sqrt(um[n]), ac = mp::sqrt(uc[n]), ap = mp::sqrt(up[n]);
          rep.add(n, t, h, d1(am, ap, h) / ac - (uc[n - 1] - uc[n + 1]) / 2);
        }
      }
    });
    out.push_back(rep.finish());
  } else if (std::holds_alternative<Cubic>(fam)) {
    FdReport ra(g, "pii-a", 1), rb(g, "pii-b", 1);
    for_each_point(g, [&](const Real& t, const Real& h, const auto& um, const auto& uc, const auto& up,
                          const TSample& sm, const TSample& sc, const TSample& sp) {
      const int top = clamp_n(n_max, g.N);
      for (int n = 1; n <= top; ++n) {
        const Real& u = uc[n];
        const Real& b = sc.rt.b[n];
        ra.add(n, t, h, d1(um[n], up[n], h) / (2 * u) - b - Real(n) / (2 * u));
        rb.add(n, t, h, d1(sm.rt.b[n], sp.rt.b[n], h) + b * b + 2 * u + t);
      }
    });
    out.push_back(ra.finish());
    out.push_back(rb.finish());
  } else if (std::holds_alternative<Sextic>(fam)) {
    FdReport rt(g, "toda-sextic", 1), rs(g, "sextic-system", 1);
    for_each_point(g, [&](const Real& t, const Real& h, const auto& um, const auto& u, const auto& up, auto&&...) {
      const int top = clamp_n(n_max, g.N - 2);
      for (int n = 1; n <= top; ++n) {
        rt.add(n, t, h, d1(um[n], up[n], h) - u[n] * (u[n - 1] - u[n + 1]));
        const Real &p = u[n - 1], &q = u[n], &r = u[n + 1], &s = u[n + 2];
        const Real e1 = d1(um[n - 1], up[n - 1], h) -
                        ((n / q - 2 * t) / 6 - p * p - 3 * p * q - q * q - 2 * q * r - p * r - r * r - r * s);
        const Real e2 = d1(um[n], up[n], h) - q * (p - r);
        const Real e3 = d1(um[n + 1], up[n + 1], h) - r * (q - s);
        const Real e4 = d1(um[n + 2], up[n + 2], h) -
                        (-((n + 1) / r - 2 * t) / 6 + s * s + q * s + 3 * r * s + r * r + 2 * q * r + q * q + p * q);
        rs.add(n, t, h, std::max({mp::abs(e1), mp::abs(e2), mp::abs(e3), mp::abs(e4)}));
      }
    });
    out.push_back(rt.finish());
    out.push_back(rs.finish());
  } else {
    const auto& gj = std::get<GenJacobi>(fam);
    FdReport ra(g, "toda-a", 1), rb(g, "toda-b", 1);
    for_each_point(g, [&](const Real& t, const Real& h, const auto& um, const auto& u, const auto& up,
                          const TSample& sm, const TSample& sc, const TSample& sp) {
      const int top = clamp_n(n_max, g.N - 1);
      const Real w = t * (t - 1);
      for (int n = 1; n <= top; ++n) {
        const Real nu = 2 * n + 1 + gj.alpha + gj.beta + gj.gamma;
        const auto& b = sc.rt.b;
        ra.add(n, t, h, d1(um[n], up[n], h) / (2 * u[n]) - (-2 + (nu + 1) * b[n] - (nu - 3) * b[n - 1]) / (2 * w));
        rb.add(n, t, h,
               d1(sm.rt.b[n], sp.rt.b[n], h) - (b[n] * (b[n] - 1) + (nu + 2) * u[n + 1] - (nu - 2) * u[n]) / w);
      }
    });
    out.push_back(ra.finish());
    out.push_back(rb.finish());
  }
  return out;
}

std::vector<ResidualReport> painleve4_check(const TGrid& g, int n_max) {
  ScopedPrecision scope(g.ctx);
  const Family& fam = g.spec.family();
  std::vector<ResidualReport> out;
  if (std::holds_alternative<Quartic>(fam)) {
    FdReport ra(g, "p4-a-form", 2), ru(g, "p4-u-form", 2);
    for_each_point(g, [&](const Real& t, const Real& h, const auto& um, const auto& uc, const auto& up, auto&&...) {
      const int top = clamp_n(n_max, g.N);
      for (int n = 1; n <= top; ++n) {
        const Real am = mp::sqrt(um[n]), a = mp::sqrt(uc[n]), ap = mp::sqrt(up[n]);
        const Real& u = uc[n];
        ra.add(n, t, h, 4 * a * a * a * d2(am, a, ap, h) - (3 * u * u + 2 * t * u - n) * (u * u + 2 * t * u + n));
        const Real alpha = Real(-n) / 2, beta = -Real(n * n) / 2;
        const Real ud = d1(um[n], up[n], h);
        ru.add(n, t, h,
                d2(um[n], u, up[n], h) - (ud * ud / (2 * u) + 3 * u * u * u / 2 + 4 * t * u * u +
                                          2 * (t * t - alpha) * u + beta / u));
      }
    });
    out.push_back(ra.finish());
    out.push_back(ru.finish());
  } else if (const auto* mx = std::get_if<Maxwell>(&fam)) {
    FdReport rep(g, "p4-folded", 2);
    const Real k = 2 * mx->rho + 1;
    for_each_point(g, [&](const Real& t, const Real& h, const auto& um, const auto& uc, const auto& up, auto&&...) {
      const int top = clamp_n(n_max, static_cast<int>(uc.size()) - 1);
      for (int n = 1; n <= top; ++n) {
        const int sgn = n % 2 == 0 ? 1 : -1;
        const Real alpha = Real(-n) / 2 - k * (1 + 3 * sgn) / 4;
        const Real r = n + (n % 2 == 1 ? k : Real(0));
        const Real beta = -r * r / 2;
        const Real& u = uc[n];
        const Real ud = d1(um[n], up[n], h);
        rep.add(n, t, h,
                d2(um[n], u, up[n], h) - (ud * ud / (2 * u) + 3 * u * u * u / 2 + 4 * t * u * u +
                                          2 * (t * t - alpha) * u + beta / u));
      }
    });
    out.push_back(rep.finish());
  } else {
    throw Error(ErrorKind::UnsupportedFamily, "the P_IV check applies to the quartic and Maxwell families");
  }
  return out;
}

std::vector<ResidualReport> painleve6_check(const TGrid& g, int n_max) {
  ScopedPrecision scope(g.ctx);
  const auto* gj = std::get_if<GenJacobi>(&g.spec.family());
  if (!gj) throw Error(ErrorKind::UnsupportedFamily, "the P_VI check applies to the generalized Jacobi family");
  const Real &al = gj->alpha, &be = gj->beta, &ga = gj->gamma;
  const Real a2 = al * al, b2 = be * be, c2 = ga * ga;
  FdReport rth(g, "theta-dot", 1), rrel(g, "zeta-relation", 1), rom(g, "omega-dot", 1), rka(g, "kappa-dot", 1),
      rze(g, "zeta-dot", 1), rp6(g, "p6-theta", 2);
  for_each_point(g, [&](const Real& t, const Real& h, const auto&, const auto& u, const auto&, const TSample& sm,
                        const TSample& sc, const TSample& sp) {
    const int top = clamp_n(n_max, g.N - 1);
    const Real w = t * (t - 1);
    for (int n = 1; n <= top; ++n) {
      const GenJacobiScalars &m = sm.scalars[n], &c = sc.scalars[n], &p = sp.scalars[n], &prev = sc.scalars[n - 1];
      const Real& nu = c.nu;
      const Real& th = c.vartheta;
      const Real thd = d1(m.vartheta, p.vartheta, h);
      rth.add(n, t, h, thd - (-th - th * th + 2 * c.zeta) / w);
      const Real Z = c.zeta - th * (th + 1) / 2;
      rrel.add(n, t, h, Z - w * thd / 2);
      const Real cross = u[n] * (nu * prev.vartheta - th * prev.nu);
      rom.add(n, t, h, d1(m.omega, p.omega, h) - (c.omega / t - cross / w));
      rka.add(n, t, h, d1(m.kappa, p.kappa, h) - ((nu - 1) / (2 * (t - 1)) + c.kappa / (t - 1) + c.omega / w));
      const Real P = nu + th, Q = nu * t + th;
      const Real brace = a2 * (t - 1) * th * Q / (4 * P) - b2 * t * P * Q / (4 * th) +
                         (1 - c2) * w * th * P / (4 * Q) + (1 / P + 1 / th + 1 / Q) * Z * Z +
                         (2 * th + 1 + nu * w / Q) * Z + th * P * Q / 4;
      rze.add(n, t, h, d1(m.zeta, p.zeta, h) - brace / w);
      const Real rhs = (1 / P + 1 / th + 1 / Q) * thd * thd / 2 - (1 / t + 1 / (t - 1) - nu / Q) * thd +
                       a2 * th * Q / (2 * t * t * (t - 1) * P) - b2 * P * Q / (2 * w * (t - 1) * th) +
                       (1 - c2) * th * P / (2 * w * Q) + th * P * Q / (2 * w * w);
      rp6.add(n, t, h, d2(m.vartheta, th, p.vartheta, h) - rhs);
    }
  });
  return {rth.finish(), rrel.finish(), rom.finish(), rka.finish(), rze.finish(), rp6.finish()};
}

std::vector<ResidualReport> backlund_check(const TGrid& g, int n_lo, int n_hi) {
  ScopedPrecision scope(g.ctx);
  if (!std::holds_alternative<Quartic>(g.spec.family()))
    throw Error(ErrorKind::UnsupportedFamily, "the Backlund shift is checked on the quartic family");
  n_hi = std::min(n_hi, g.N - 1);
  n_lo = std::max(n_lo, 1);
  FdReport rm(g, "backlund-minus", 1), rp(g, "backlund-plus", 1);
  ResidualReport alg;
  alg.identity = "backlund-algebraic";
  alg.tolerance = g.ctx.pow10(static_cast<int>(grid_certified(g)) - 3);
  for (std::size_t ti = 0; ti < g.ts.size(); ++ti) {
    const Real& t = g.ts[ti];
    const auto& u = g.center[ti].rt.u;
    for (int n = n_lo; n <= n_hi; ++n) {
      const Real lhs = n / (2 * u[n]) - u[n] / 2 - t;
      alg.entries.push_back({n, t, (lhs - (u[n - 1] + u[n + 1]) / 2) / std::max(Real(1), mp::abs(lhs)), {}});
    }
  }
  int exits = 0;
  for_each_point(g, [&](const Real& t, const Real& h, const auto& um, const auto& u, const auto& up, auto&&...) {
    for (int n = n_lo; n <= n_hi; ++n) {
      const Real ad = d1(mp::sqrt(um[n]), mp::sqrt(up[n]), h) / mp::sqrt(u[n]);
      const Real base = n / (2 * u[n]) - u[n] / 2 - t;
      const Real minus = base - ad, plus = base + ad;
      if (minus < 0) ++exits;
      if (plus < 0) ++exits;
      rm.add(n, t, h, minus - u[n + 1]);
      rp.add(n, t, h, plus - u[n - 1]);
    }
  });
  if (exits > 0) rm.note(std::to_string(exits) + " branch exits (negative radicand)");
  return {alg, rm.finish(), rp.finish()};
}

namespace {

TaylorOptions flow_options(const PrecisionContext& ctx, const Real& span) {
  TaylorOptions o;
  o.tol = ctx.pow10(ctx.digits() / 2);
  o.min_step = std::max(mp::abs(span), Real(1)) * ctx.pow10(12);
  return o;
}

}  // namespace

RecurrenceTable flow_integrate(const WeightSpec& spec, const RecurrenceTable& seed, const Real& t_target,
                               const FlowWindow& win, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (win.lo < 1 || win.hi < win.lo) throw Error(ErrorKind::ConfigError, "invalid flow window");
  const Family& fam = spec.family();
  RecurrenceTable out;
  out.family = spec.name();
  out.t = t_target;
  out.N = win.hi;
  out.method = seed.method;
  out.u.assign(win.hi + 1, Real(0));
  out.b.assign(win.hi + 1, Real(0));
  const TaylorOptions opt = flow_options(ctx, t_target - seed.t);

  if (std::holds_alternative<Quartic>(fam)) {
    const int M = win.hi + std::max(win.buffer, 1);
    if (seed.N < M) throw Error(ErrorKind::InsufficientMoments, "seed table shorter than window plus buffer");
    TaylorSystem sys(M);
    const auto T = sys.time();
    auto u = [&](int n) { return sys.var(n - 1); };
    // u_{M+1} from the string equation at M.
    const auto top = sys.sub(sys.sub(sys.div(sys.constant(Real(M)), u(M)), sys.add(u(M - 1), u(M))),
                             sys.scale(Real(2), T));
    for (int n = 1; n <= M; ++n) {
      const auto below = n == 1 ? sys.constant(Real(0)) : u(n - 1);
      const auto above = n == M ? top : u(n + 1);
      sys.set_derivative(n - 1, sys.mul(u(n), sys.sub(below, above)));
    }
    if (seed.u[M] <= ctx.tol()) throw Error(ErrorKind::WindowClosureFailure, "closure divisor u_M vanishes");
    std::vector<Real> x(seed.u.begin() + 1, seed.u.begin() + M + 1);
    auto res = taylor_integrate(sys, seed.t, std::move(x), t_target, opt);
    if (res.x[M - 1] <= ctx.tol()) throw Error(ErrorKind::WindowClosureFailure, "closure divisor u_M vanished");
    for (int n = win.lo; n <= win.hi; ++n) out.u[n] = res.x[n - 1];
  } else if (std::holds_alternative<Cubic>(fam)) {
    if (seed.N < win.hi) throw Error(ErrorKind::InsufficientMoments, "seed table shorter than the window");
    const int K = win.hi - win.lo + 1;
    TaylorSystem sys(2 * K);
    const auto T = sys.time();
    for (int k = 0; k < K; ++k) {
      const int n = win.lo + k;
      const auto u = sys.var(2 * k), b = sys.var(2 * k + 1);
      sys.set_derivative(2 * k, sys.add(sys.scale(Real(2), sys.mul(u, b)), sys.constant(Real(n))));
      sys.set_derivative(2 * k + 1,
                         sys.sub(sys.scale(Real(-1), sys.add(sys.mul(b, b), sys.scale(Real(2), u))), T));
    }
    std::vector<Real> x;
    for (int n = win.lo; n <= win.hi; ++n) {
      x.push_back(seed.u[n]);
      x.push_back(seed.b[n]);
    }
    auto res = taylor_integrate(sys, seed.t, std::move(x), t_target, opt);
    for (int k = 0; k < K; ++k) {
      out.u[win.lo + k] = res.x[2 * k];
      out.b[win.lo + k] = res.x[2 * k + 1];
    }
  } else if (std::holds_alternative<Sextic>(fam)) {
    if (win.hi - win.lo != 3) throw Error(ErrorKind::ConfigError, "the sextic system carries exactly four indices");
    if (seed.N < win.hi) throw Error(ErrorKind::InsufficientMoments, "seed table shorter than the window");
    const int n = win.lo + 1;
    TaylorSystem sys(4);
    const auto T = sys.time();
    const auto p = sys.var(0), q = sys.var(1), r = sys.var(2), s = sys.var(3);
    auto sum = [&](std::initializer_list<std::pair<int, TaylorSystem::Node>> terms) {
      TaylorSystem::Node acc = sys.constant(Real(0));
      for (auto [c, node] : terms) acc = sys.add(acc, c == 1 ? node : sys.scale(Real(c), node));
      return acc;
    };
    const Real sixth = Real(1) / 6;
    // (n/u_n - 2t)/6 - quadratic terms
    const auto lead1 = sys.scale(sixth, sys.sub(sys.div(sys.constant(Real(n)), q), sys.scale(Real(2), T)));
    const auto quad1 = sum({{1, sys.mul(p, p)}, {3, sys.mul(p, q)}, {1, sys.mul(q, q)}, {2, sys.mul(q, r)},
                            {1, sys.mul(p, r)}, {1, sys.mul(r, r)}, {1, sys.mul(r, s)}});
    sys.set_derivative(0, sys.sub(lead1, quad1));
    sys.set_derivative(1, sys.mul(q, sys.sub(p, r)));
    sys.set_derivative(2, sys.mul(r, sys.sub(q, s)));
    const auto lead4 = sys.scale(sixth, sys.sub(sys.div(sys.constant(Real(n + 1)), r), sys.scale(Real(2), T)));
    const auto quad4 = sum({{1, sys.mul(s, s)}, {1, sys.mul(q, s)}, {3, sys.mul(r, s)}, {1, sys.mul(r, r)},
                            {2, sys.mul(q, r)}, {1, sys.mul(q, q)}, {1, sys.mul(p, q)}});
    sys.set_derivative(3, sys.sub(quad4, lead4));
    std::vector<Real> x(seed.u.begin() + win.lo, seed.u.begin() + win.hi + 1);
    auto res = taylor_integrate(sys, seed.t, std::move(x), t_target, opt);
    for (int k = 0; k < 4; ++k) out.u[win.lo + k] = res.x[k];
  } else {
    throw Error(ErrorKind::UnsupportedFamily, "no closed flow system for " + spec.name());
  }
  return out;
}

std::vector<Real> fractional_asymptotic_series(const Real& nu, int terms) {
  // u = t^{-1} S(x), x = t^{-2}. Multiplying the P_IV form by 2u gives
  // F = 2x^2 S E - x^2 D^2 - 3x^2 S^4 - 8x S^3 - 4 S^2 - 2 nu x S^2 + nu^2 = 0
  // with D_k = (2k+1) c_k (from u') and E_k = (2k+1)(2k+2) c_k (from u'').
  std::vector<Real> c(terms, Real(0));
  if (terms == 0) return c;
  c[0] = nu / 2;
  auto mul = [](const std::vector<Real>& a, const std::vector<Real>& b, int m) {
    std::vector<Real> r(m + 1, Real(0));
    for (int i = 0; i <= m && i < static_cast<int>(a.size()); ++i)
      for (int j = 0; i + j <= m && j < static_cast<int>(b.size()); ++j) r[i + j] += a[i] * b[j];
    return r;
  };
  for (int m = 1; m < terms; ++m) {
    std::vector<Real> S(c.begin(), c.begin() + m + 1);  // c_m = 0 for now
    std::vector<Real> D(m + 1), E(m + 1);
    for (int k = 0; k <= m; ++k) {
      D[k] = (2 * k + 1) * S[k];
      E[k] = Real((2 * k + 1) * (2 * k + 2)) * S[k];
    }
    const auto S2 = mul(S, S, m), S3 = mul(S2, S, m), S4 = mul(S2, S2, m);
    const auto SE = mul(S, E, m), D2 = mul(D, D, m);
    auto at = [m](const std::vector<Real>& v, int shift) { return m - shift >= 0 ? v[m - shift] : Real(0); };
    const Real F = 2 * at(SE, 2) - at(D2, 2) - 3 * at(S4, 2) - 8 * at(S3, 1) - 4 * at(S2, 0) - 2 * nu * at(S2, 1);
    // dF_m/dc_m = -8 c_0
    c[m] = F / (8 * c[0]);
  }
  return c;
}

FractionalFlowResult fractional_flow(const Real& nu, const Real& seed_t, const Real& t_target,
                                     const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (nu <= 0) throw Error(ErrorKind::ConfigError, "the asymptotic seed needs nu > 0");
  if (seed_t <= t_target) throw Error(ErrorKind::ConfigError, "the seed point must lie above the target");
  const int terms = 200;
  const auto c = fractional_asymptotic_series(nu, terms);
  // Optimal truncation: stop at the smallest term or at working precision.
  Real u(0), v(0), smallest(-1);
  const Real x = 1 / (seed_t * seed_t);
  Real power = 1 / seed_t;  // t^{-(2k+1)}
  const Real floor = ctx.pow10(ctx.digits() + 5);
  int used = 0;
  for (int k = 0; k < terms; ++k) {
    const Real term = c[k] * power;
    if (smallest >= 0 && mp::abs(term) > smallest) break;
    u += term;
    v -= (2 * k + 1) * term / seed_t;
    smallest = mp::abs(term);
    ++used;
    if (smallest < floor * mp::abs(u)) break;
    power *= x;
  }
  TaylorSystem sys(2);
  const auto T = sys.time();
  const auto U = sys.var(0), Vd = sys.var(1);
  const auto half = Real(1) / 2;
  const auto uu = sys.mul(U, U);
  auto rhs = sys.scale(half, sys.div(sys.mul(Vd, Vd), U));
  rhs = sys.add(rhs, sys.scale(Real(3) / 2, sys.mul(uu, U)));
  rhs = sys.add(rhs, sys.scale(Real(4), sys.mul(T, uu)));
  rhs = sys.add(rhs, sys.scale(Real(2), sys.mul(sys.add(sys.mul(T, T), sys.constant(nu / 2)), U)));
  rhs = sys.sub(rhs, sys.scale(nu * nu / 2, sys.div(sys.constant(Real(1)), U)));
  sys.set_derivative(0, Vd);
  sys.set_derivative(1, rhs);
  auto res = taylor_integrate(sys, seed_t, {u, v}, t_target, flow_options(ctx, seed_t - t_target));
  return {res.x[0], u, smallest, used, res.steps};
}

Figure7Data figure7_dataset(const std::vector<int>& ns, const std::vector<Real>& scaled_t,
                            const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  Figure7Data d;
  for (int n : ns) {
    if (n < 1) throw Error(ErrorKind::ConfigError, "figure indices start at 1");
    const Real rn = mp::sqrt(Real(n));
    const Real scale = 1 / mp::sqrt(rn);
    std::vector<Real> a(scaled_t.size());
    // Sweep outward from the point nearest 0 on each side, warm-starting from
    // the neighbour.
    std::vector<std::size_t> order(scaled_t.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return mp::abs(scaled_t[i]) < mp::abs(scaled_t[j]); });
    std::vector<Real> warm_pos, warm_neg;
    for (std::size_t idx : order) {
      const Real t = scaled_t[idx] * rn;
      std::vector<Real>& warm = t < 0 ? warm_neg : warm_pos;
      LewQuarlesOptions opt;
      if (!warm.empty()) opt.warm_start = &warm;
      const RecurrenceTable rt = lew_quarles(t, n, ctx, opt);
      warm = rt.u;
      a[idx] = scale * mp::sqrt(rt.u[n]);
    }
    for (std::size_t i = 0; i < scaled_t.size(); ++i) d.samples.push_back({n, scaled_t[i], a[i]});
  }
  for (const auto& t : scaled_t) {
    d.envelope.push_back({t, 0, mp::sqrt((-t + mp::sqrt(t * t + 3)) / 3)});
    if (t <= -1) {
      const Real r = mp::sqrt(t * t - 1);
      d.envelope.push_back({t, 1, mp::sqrt(-t + r)});
      d.envelope.push_back({t, 2, mp::sqrt(-t - r)});
    }
  }
  return d;
}

}  // namespace semiortho
