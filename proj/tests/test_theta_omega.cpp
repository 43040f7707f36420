#include "support.hpp"

#include "semiortho/theta_omega.hpp"

using namespace semiortho;
using testing::R;
namespace mp = boost::multiprecision;

namespace {

struct Built {
  MomentTable mt;
  RecurrenceTable rt;
  PolySystem ps;
  ThetaOmegaSequence tos;
};

Built build(const WeightSpec& spec, int N, const PrecisionContext& ctx) {
  MomentTable mt = build_moment_table(spec, 2 * N + 6, ctx);
  RecurrenceTable rt = oracle_recurrence(mt, N + 1);
  PolySystem ps = build_poly_system(rt, mt, N, 3);
  ThetaOmegaSequence tos = build_theta_omega(spec, mt, rt, ps, N);
  return {std::move(mt), std::move(rt), std::move(ps), std::move(tos)};
}

}  // namespace

TEST_CASE("degree bounds") {
  PrecisionContext ctx(40);
  ScopedPrecision sp(ctx);
  CHECK(theta_degree_bound(WeightSpec(Quartic{Real(0)})) == 2);
  CHECK(omega_degree_bound(WeightSpec(Quartic{Real(0)})) == 3);
  CHECK(theta_degree_bound(WeightSpec(Cubic{Real(0)})) == 1);
  CHECK(theta_degree_bound(WeightSpec(Sextic{Real(0)})) == 4);
  CHECK(theta_degree_bound(WeightSpec(Maxwell{Real(1), Real(0)})) == 1);
  const WeightSpec gj(GenJacobi{R("-0.25"), R("-1/3"), R("-0.5"), Real(2)});
  CHECK(theta_degree_bound(gj) == 1);
  CHECK(omega_degree_bound(gj) == 2);
}

TEST_CASE("identity suite for every family") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx);
  for (const auto& c : testing::oracle_cases()) {
    INFO(c.name);
    const Built b = build(c.spec, 8, ctx);
    const auto reports = identity_suite(b.tos, b.ps, b.rt, 8, ctx);
    CHECK(reports.size() >= 7);
    for (const auto& r : reports) {
      INFO(r.identity << " max " << to_decimal(r.max_residual(), 5) << " tol " << to_decimal(r.tolerance, 5));
      CHECK(r.within_tolerance());
      CHECK(r.tolerance < ctx.pow10(30));
    }
    for (int n = 0; n <= 8; ++n) CHECK(b.tos.theta[n].degree() <= theta_degree_bound(c.spec));
  }
}

TEST_CASE("cubic closed forms") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx);
  const Real t(1);
  const Built b = build(WeightSpec(Cubic{t}), 8, ctx);
  for (int n = 0; n <= 8; ++n) {
    INFO("n=" << n);
    const Poly theta{b.rt.b[n], Real(1)};
    const Poly omega{t / 2 + b.rt.u[n], Real(0), Real("0.5")};
    CHECK(max_coeff_diff(b.tos.theta[n], theta) < ctx.pow10(45));
    CHECK(max_coeff_diff(b.tos.omega[n], omega) < ctx.pow10(45));
  }
}

TEST_CASE("quartic closed forms") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx);
  for (const char* ts : {"-1", "0", "1"}) {
    const Real t = R(ts);
    INFO("t=" << ts);
    const Built b = build(WeightSpec(Quartic{t}), 8, ctx);
    for (int n = 0; n <= 8; ++n) {
      const Poly theta{-2 * t - b.rt.u[n] - b.rt.u[n + 1], Real(0), Real(-1)};
      const Poly omega{Real(0), -(b.rt.u[n] + t), Real(0), Real("-0.5")};
      CHECK(max_coeff_diff(b.tos.theta[n], theta) < ctx.pow10(45));
      CHECK(max_coeff_diff(b.tos.omega[n], omega) < ctx.pow10(45));
    }
  }
}

TEST_CASE("generalized Jacobi scalars") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx);
  const GenJacobi g{R("-0.25"), R("-1/3"), R("-0.5"), Real(2)};
  const Built b = build(WeightSpec(g), 8, ctx);
  for (int n = 0; n <= 7; ++n) {
    INFO("n=" << n);
    const GenJacobiScalars s = genjacobi_scalars(b.tos, b.rt, n, ctx.pow10(40));
    CHECK_CLOSE(s.nu, 2 * n + 1 + g.alpha + g.beta + g.gamma, ctx.pow10(45));
    // 2 kappa - vartheta = (1 + t) - (nu + 1) b_n holds ...
    const Real derived = 2 * s.kappa - s.vartheta - ((1 + g.t) - (s.nu + 1) * b.rt.b[n]);
    CHECK(mp::abs(derived) < ctx.pow10(40));
    // ... while the variant with -(2 nu - 1)(1 + t) in place of (1 + t) does not.
    const Real variant = 2 * s.kappa - s.vartheta - (-(2 * s.nu - 1) * (1 + g.t) - (s.nu + 1) * b.rt.b[n]);
    CHECK(mp::abs(variant) > Real("0.1"));
  }
}
