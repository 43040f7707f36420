#include "semiortho/theta_omega.hpp"

#include <algorithm>
#include <cmath>
#include <initializer_list>

namespace semiortho {

namespace mp = boost::multiprecision;

namespace {

Poly z_poly() { return Poly{Real(0), Real(1)}; }

Real largest(std::initializer_list<const Poly*> terms) {
  Real m(0);
  for (const Poly* p : terms) m = std::max(m, p->max_abs());
  return m;
}

/// |residual| relative to the largest term (1 if all terms vanish).
Real relative(const Poly& residual, std::initializer_list<const Poly*> terms) {
  Real s = largest(terms);
  if (s == 0) s = 1;
  return residual.max_abs() / s;
}

Real rel_scalar(const Real& r, const Real& scale) { return mp::abs(r) / std::max(Real(1), mp::abs(scale)); }

}  // namespace

int theta_degree_bound(const WeightSpec& spec) { return std::max(spec.W().degree() - 2, spec.V().degree() - 1); }

int omega_degree_bound(const WeightSpec& spec) { return std::max(spec.W().degree() - 1, spec.V().degree()); }

Poly compute_U(const WeightSpec& spec, const MomentTable& m) {
  ScopedPrecision scope(m.ctx);
  const LaurentTail f = laurent_from_moments(m.m, m.size());
  const SeriesSplit a = series_combine(f.derivative(), spec.W());
  const SeriesSplit b = series_combine(f, Real(2) * spec.V());
  const Real tol = m.ctx.tol();
  const int low = std::max(a.tail.lowest(), b.tail.lowest());
  for (int k = -1; k >= low; --k) {
    const Real x = a.tail.coeff(k);
    const Real y = b.tail.coeff(k);
    if (mp::abs(x - y) > tol * (mp::abs(x) + mp::abs(y) + 1)) {
      throw Error(ErrorKind::PearsonInconsistency,
                  "W f' - 2 V f has a nonzero z^" + std::to_string(k) + " term: moments are not semi-classical");
    }
  }
  return a.poly - b.poly;
}

ThetaResult theta_from_definition(const PolySystem& ps, const RecurrenceTable& rt, const WeightSpec& spec,
                                  const Poly& U, int n, const Real& threshold) {
  const Poly& p = ps.pi[n];
  const Poly& s = ps.sigma[n];
  const Poly A = spec.W() * (s.derivative() * p - p.derivative() * s);
  const Poly B = Real(2) * spec.V() * s * p;
  const Poly C = U * p * p;
  const Real inv_h = 1 / rt.h(n);
  const Poly raw = (A - B - C) * inv_h;
  Real scale = largest({&A, &B, &C}) * mp::abs(inv_h);
  if (scale == 0) scale = 1;
  const int bound = theta_degree_bound(spec);
  ThetaResult r{raw.truncated(bound), raw.max_abs_above(bound) / scale};
  if (r.overflow > threshold) {
    throw Error(ErrorKind::DegreeOverflow, "Theta_" + std::to_string(n) + " has coefficients above degree " +
                                               std::to_string(bound) + " (relative size " +
                                               to_decimal(r.overflow, 4) + ")");
  }
  return r;
}

Poly omega_from_definition(const PolySystem& ps, const RecurrenceTable& rt, const WeightSpec& spec, const Poly& U,
                           int n) {
  if (n == 0) return spec.V();
  const Poly& p = ps.pi[n];
  const Poly& q = ps.pi[n - 1];
  const Poly& s = ps.sigma[n];
  const Poly& r = ps.sigma[n - 1];
  const Poly raw = spec.W() * (s.derivative() * q - p.derivative() * r) - spec.V() * (s * q + p * r) - U * p * q;
  return raw * (1 / rt.h(n - 1));
}

std::vector<Poly> omega_recursion(const std::vector<Poly>& theta, const RecurrenceTable& rt, const Poly& V) {
  std::vector<Poly> om{V};
  for (std::size_t n = 0; n < theta.size(); ++n) {
    om.push_back((z_poly() - Poly::constant(rt.b[n])) * theta[n] - om[n]);
  }
  return om;
}

ThetaOmegaSequence build_theta_omega(const WeightSpec& spec, const MomentTable& m, const RecurrenceTable& rt,
                                     const PolySystem& ps, int N) {
  ScopedPrecision scope(m.ctx);
  ThetaOmegaSequence tos{spec, spec.t(), N, compute_U(spec, m), {}, {}, {}};
  const int cert = static_cast<int>(std::floor(rt.min_certified(N)));
  const Real threshold = m.ctx.pow10(std::max(cert - 3, 1));
  for (int n = 0; n <= N; ++n) {
    ThetaResult r = theta_from_definition(ps, rt, spec, tos.U, n, threshold);
    tos.theta.push_back(std::move(r.theta));
    tos.theta_overflow.push_back(std::move(r.overflow));
  }
  tos.omega = omega_recursion(tos.theta, rt, spec.V());
  return tos;
}

GenJacobiScalars genjacobi_from_polys(const ThetaOmegaSequence& tos, int n) {
  const Poly& th = tos.theta[n];
  const Poly& om = tos.omega[n];
  GenJacobiScalars s{th.coeff(1), th.coeff(0), om.coeff(1), om.coeff(0), Real(0)};
  s.zeta = s.vartheta * s.kappa - s.nu * s.omega;
  return s;
}

GenJacobiScalars genjacobi_from_sums(const GenJacobi& g, const RecurrenceTable& rt, int n) {
  const Real& t = g.t;
  Real sb(0), sw(0);
  for (int i = 0; i < n; ++i) {
    sb += rt.b[i];
    sw += rt.b[i] * rt.b[i] - (t + 1) * rt.b[i] + 2 * rt.u[i];
  }
  GenJacobiScalars s;
  s.nu = 2 * n + 1 + g.alpha + g.beta + g.gamma;
  s.vartheta = s.nu * (rt.b[n] - 1 - t) + 2 * sb + rt.b[n] + g.alpha + g.gamma * t;
  s.kappa = sb - (s.nu - 1) * (1 + t) / 2 + (g.alpha + g.gamma * t) / 2;
  s.omega = sw - (t + 1) * (g.alpha + g.gamma * t) / 2 + (s.nu - 1) * t / 2 + (g.alpha + g.gamma * t * t) / 2 +
            s.nu * rt.u[n];
  s.zeta = s.vartheta * s.kappa - s.nu * s.omega;
  return s;
}

GenJacobiScalars genjacobi_scalars(const ThetaOmegaSequence& tos, const RecurrenceTable& rt, int n, const Real& tol) {
  const auto* g = std::get_if<GenJacobi>(&tos.spec.family());
  if (!g) throw Error(ErrorKind::UnsupportedFamily, "scalars are defined for the generalized Jacobi family only");
  const GenJacobiScalars a = genjacobi_from_polys(tos, n);
  const GenJacobiScalars b = genjacobi_from_sums(*g, rt, n);
  const std::pair<const Real*, const Real*> pairs[] = {{&a.nu, &b.nu},
                                                       {&a.vartheta, &b.vartheta},
                                                       {&a.kappa, &b.kappa},
                                                       {&a.omega, &b.omega},
                                                       {&a.zeta, &b.zeta}};
  for (const auto& [x, y] : pairs) {
    if (rel_scalar(*x - *y, *y) > tol) {
      throw Error(ErrorKind::RouteDisagreement, "generalized Jacobi scalars disagree at n=" + std::to_string(n));
    }
  }
  return a;
}

namespace {

/// omega_n in terms of vartheta_n and zeta_n (third elimination).
Real omega_from_zeta(const GenJacobi& g, const Real& nu, const Real& th, const Real& ze) {
  const Real& t = g.t;
  const Real a2 = g.alpha * g.alpha, b2 = g.beta * g.beta, c2 = g.gamma * g.gamma;
  const Real p = nu + th;
  const Real q = nu * t + th;
  Real w = -a2 * th * (t - 1) / 4 / ((nu - 1) * p) + b2 * t / 4 / (nu - 1) + c2 * th * t * (t - 1) / 4 / ((nu - 1) * q);
  const Real num = (nu - 1) * th * (nu * t * (t + 1) + th * (t * t + t + 1)) / 4 + (nu * t + th * (t + 1)) * ze +
                   ze * ze / (nu - 1);
  return w - num / (p * q);
}

}  // namespace

std::vector<ResidualReport> identity_suite(const ThetaOmegaSequence& tos, const PolySystem& ps,
                                           const RecurrenceTable& rt, int upto, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  const WeightSpec& spec = tos.spec;
  const Poly& W = spec.W();
  const Poly& V = spec.V();
  const Poly z = z_poly();
  const int N = tos.N;
  upto = std::min(upto, N);
  const double cert = rt.min_certified(std::min(rt.N, upto + 1));
  const Real tol = ctx.pow10(static_cast<int>(std::floor(cert)) - 3);

  auto report = [&](const std::string& name) {
    ResidualReport r;
    r.identity = name;
    r.tolerance = tol;
    return r;
  };
  auto add = [&](ResidualReport& r, int n, Real value) { r.entries.push_back({n, tos.t, std::move(value), {}}); };

  ResidualReport deg = report("theta-degree");
  ResidualReport rdef = report("omega-closed-form");
  ResidualReport rstep = report("omega-step");
  ResidualReport rsq = report("omega-square");
  ResidualReport rder = report("derivative-relation");
  ResidualReport rk = report("K-polynomial");
  ResidualReport rode = report("second-order-ode");

  const int obound = omega_degree_bound(spec);
  Poly theta_sum;
  for (int n = 0; n <= upto; ++n) {
    const Poly& th = tos.theta[n];
    const Poly& om = tos.omega[n];
    const Poly th_prev = n >= 1 ? tos.theta[n - 1] : Poly();
    const Real& un = rt.u[n];
    add(deg, n, tos.theta_overflow[n]);

    {
      const Poly def = omega_from_definition(ps, rt, spec, tos.U, n);
      const Poly diff = def - om;
      Real v = relative(diff, {&def, &om});
      v = std::max(v, relative(def - def.truncated(obound), {&def}));
      add(rdef, n, v);
    }
    if (n + 1 <= N) {
      const Poly lhs = (z - Poly::constant(rt.b[n])) * (tos.omega[n + 1] - om);
      const Poly t1 = rt.u[n + 1] * tos.theta[n + 1];
      const Poly t2 = un * th_prev;
      add(rstep, n, relative(lhs - W - t1 + t2, {&lhs, &W, &t1, &t2}));
    }
    {
      const Poly o2 = om * om;
      const Poly tt = un * th * th_prev;
      const Poly v2 = V * V;
      const Poly ws = W * theta_sum;
      add(rsq, n, relative(o2 - tt - v2 - ws, {&o2, &tt, &v2, &ws}));
    }
    if (n >= 1) {
      const Poly& p = ps.pi[n];
      const Poly a = W * p.derivative();
      const Poly b = (om - V) * p;
      const Poly c = un * th * ps.pi[n - 1];
      add(rder, n, relative(a - b + c, {&a, &b, &c}));
    }
    {
      const Poly num = om * om - V * V - un * th * th_prev;
      auto [quot, rem] = divmod(num, W);
      add(rk, n, relative(rem, {&num}));
      const Poly omv = om - V;
      const Poly K = omv.derivative() * th - omv * th.derivative() + th * quot;
      const Poly& p = ps.pi[n];
      const Poly a = W * th * p.derivative().derivative();
      const Poly b = (W * th.derivative() - W.derivative() * th - Real(2) * V * th) * p.derivative();
      const Poly c = K * p;
      add(rode, n, relative(a - b - c, {&a, &b, &c}));
    }
    theta_sum += th;
  }
  std::vector<ResidualReport> out{deg, rdef, rstep, rsq, rder, rk, rode};

  if (const auto* g = std::get_if<GenJacobi>(&spec.family())) {
    ResidualReport routes = report("genjacobi-scalar-routes");
    ResidualReport bkap = report("b-from-kappa");
    ResidualReport e1 = report("elimination-theta");
    ResidualReport e2 = report("elimination-nu");
    ResidualReport e3 = report("elimination-omega");
    const Real& t = g->t;
    for (int n = 0; n <= upto; ++n) {
      const GenJacobiScalars a = genjacobi_from_polys(tos, n);
      const GenJacobiScalars s = genjacobi_from_sums(*g, rt, n);
      Real worst(0);
      for (auto [x, y] : {std::pair{&a.nu, &s.nu}, std::pair{&a.vartheta, &s.vartheta}, std::pair{&a.kappa, &s.kappa},
                          std::pair{&a.omega, &s.omega}, std::pair{&a.zeta, &s.zeta}}) {
        worst = std::max(worst, rel_scalar(*x - *y, *y));
      }
      add(routes, n, worst);
      add(bkap, n, rel_scalar(2 * a.kappa - a.vartheta - ((1 + t) - (a.nu + 1) * rt.b[n]), a.vartheta));
      add(e3, n, rel_scalar(a.omega - omega_from_zeta(*g, a.nu, a.vartheta, a.zeta), a.omega));
      if (n >= 1) {
        const GenJacobiScalars prev = genjacobi_from_polys(tos, n - 1);
        const Real lhs1 = rt.u[n] * prev.vartheta;
        const Real rhs1 = (a.omega * a.omega - g->beta * g->beta * t * t / 4) / a.vartheta;
        add(e1, n, rel_scalar(lhs1 - rhs1, lhs1));
        const Real c = (a.nu - 1) / 2 + a.kappa + a.omega;
        const Real rhs2 = (c * c - g->alpha * g->alpha * (t - 1) * (t - 1) / 4) / (a.nu + a.vartheta) - lhs1;
        const Real lhs2 = rt.u[n] * prev.nu;
        add(e2, n, rel_scalar(lhs2 - rhs2, lhs2));
      }
    }
    out.insert(out.end(), {routes, bkap, e1, e2, e3});
  }
  return out;
}

}  // namespace semiortho
