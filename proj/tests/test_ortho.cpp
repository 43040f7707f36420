#include "support.hpp"

#include "semiortho/errors.hpp"

using namespace semiortho;
using testing::R;
namespace mp = boost::multiprecision;

TEST_CASE("recurrence coefficients against the Hankel-determinant oracle") {
  PrecisionContext ctx(60);
  ScopedPrecision sp(ctx);
  for (const auto& c : testing::oracle_cases()) {
    INFO(c.name);
    const MomentTable mt = build_moment_table(c.spec, 2 * 8 + 4, ctx);
    const RecurrenceTable rt = oracle_recurrence(mt, 8);
    CHECK(rt.method == RecurrenceMethod::Stieltjes);
    CHECK(rt.u[0] == 0);
    CHECK(testing::deviation(rt, *c.values, 8) < ctx.pow10(45));
    CHECK(rt.min_certified() > 40);
    if (c.spec.is_even())
      for (const auto& b : rt.b) CHECK(mp::abs(b) < ctx.pow10(50));
  }
}

TEST_CASE("Hankel and Stieltjes routes agree") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx);
  const WeightSpec w(Maxwell{Real(1), R("0.5")});
  const MomentTable mt = build_moment_table(w, 24, ctx);
  const RecurrenceTable h = recurrence_from_moments(mt, 10, RecurrenceMethod::HankelRatio);
  const RecurrenceTable s = recurrence_from_moments(mt, 10, RecurrenceMethod::Stieltjes);
  for (int n = 0; n <= 10; ++n) {
    CHECK_CLOSE(h.b[n], s.b[n], ctx.pow10(35));
    if (n > 0) CHECK_CLOSE(h.u[n], s.u[n], ctx.pow10(35));
  }
  CHECK_THROWS_AS(recurrence_from_moments(mt, 20, RecurrenceMethod::HankelRatio), Error);
}

TEST_CASE("cubic coefficients: u_n may be negative, a_n is then undefined") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx);
  const MomentTable mt = build_moment_table(WeightSpec(Cubic{Real(1)}), 20, ctx);
  const RecurrenceTable rt = oracle_recurrence(mt, 8);
  CHECK(rt.u[1] < 0);
  CHECK_FALSE(rt.a(1).has_value());
  CHECK_FALSE(rt.gamma(1).has_value());
}

TEST_CASE("norms and leading coefficients") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx);
  const MomentTable mt = build_moment_table(WeightSpec(Quartic{Real(0)}), 20, ctx);
  const RecurrenceTable rt = oracle_recurrence(mt, 8);
  CHECK(rt.h(0) == 1);
  CHECK_CLOSE(rt.h(3), rt.u[1] * rt.u[2] * rt.u[3], ctx.pow10(45));
  CHECK_CLOSE(*rt.gamma(3), 1 / mp::sqrt(rt.h(3)), ctx.pow10(45));
  CHECK_CLOSE(*rt.a(2), mp::sqrt(R(oracle::quartic_t0.u[2])), ctx.pow10(45));
}

TEST_CASE("polynomial system") {
  PrecisionContext ctx(50);
  ScopedPrecision sp(ctx);
  for (const auto& c : testing::oracle_cases()) {
    INFO(c.name);
    const MomentTable mt = build_moment_table(c.spec, 24, ctx);
    const RecurrenceTable rt = oracle_recurrence(mt, 8);
    const PolySystem ps = build_poly_system(rt, mt, 6, 3);
    const auto assoc = associated_by_recurrence(rt, 6);
    for (int n = 0; n <= 6; ++n) {
      INFO("n=" << n);
      CHECK(ps.pi[n].degree() == n);
      CHECK(ps.pi[n].leading() == 1);
      CHECK(max_coeff_diff(ps.sigma[n], assoc[n]) < ctx.pow10(38));
      // eps_n = h_n z^{-n-1} + ...: the first n tail coefficients vanish.
      for (int k = -1; k >= -n; --k) CHECK(mp::abs(ps.eps[n].coeff(k)) < ctx.pow10(38));
      CHECK_CLOSE(ps.eps[n].coeff(-n - 1), rt.h(n), ctx.pow10(38) * (1 + mp::abs(rt.h(n))));
    }
    CHECK_THROWS_AS(build_poly_system(rt, mt, 8, 10), Error);
  }
}

TEST_CASE("certified digits stay below the working precision") {
  PrecisionContext ctx(30);
  ScopedPrecision sp(ctx);
  const MomentTable mt = build_moment_table(WeightSpec(Quartic{Real(0)}), 2 * 20 + 4, ctx);
  const RecurrenceTable rt = oracle_recurrence(mt, 20);
  REQUIRE(rt.certified_digits.size() == 21);
  for (double d : rt.certified_digits) {
    CHECK(d > 5);
    CHECK(d <= ctx.digits() - ctx.guard());
  }
}
