#pragma once

#include "oracle_values.hpp"
#include "semiortho/ortho.hpp"

#include "doctest.h"

#include <string>

namespace testing {

using semiortho::Real;
namespace mp = boost::multiprecision;

inline Real R(const char* s) { return semiortho::parse_real(s); }

/// |a - b| <= tol, with both values in the failure message.
#define CHECK_CLOSE(a, b, tol)                                                                        \
  do {                                                                                                \
    const ::semiortho::Real a_ = (a), b_ = (b);                                                      \
    INFO(#a " = " << ::semiortho::to_decimal(a_, 25) << ", " #b " = " << ::semiortho::to_decimal(b_, 25)); \
    CHECK(::boost::multiprecision::abs(a_ - b_) <= (tol));                                            \
  } while (false)

/// Largest deviation of rt from a frozen case over u_1..u_N, b_0..b_N.
inline Real deviation(const semiortho::RecurrenceTable& rt, const oracle::Case& c, int N) {
  Real worst(0);
  for (int n = 0; n <= N; ++n) {
    if (n >= 1) worst = std::max(worst, mp::abs(rt.u[n] - R(c.u[n])));
    worst = std::max(worst, mp::abs(rt.b[n] - R(c.b[n])));
  }
  return worst;
}

}  // namespace testing

namespace testing {

struct NamedCase {
  const char* name;
  semiortho::WeightSpec spec;
  const oracle::Case* values;
};

/// Weights of the frozen oracle cases; call inside a ScopedPrecision.
inline std::vector<NamedCase> oracle_cases() {
  using namespace semiortho;
  return {
      {"quartic t=-1", WeightSpec(Quartic{Real(-1)}), &oracle::quartic_tm1},
      {"quartic t=0", WeightSpec(Quartic{Real(0)}), &oracle::quartic_t0},
      {"quartic t=1", WeightSpec(Quartic{Real(1)}), &oracle::quartic_t1},
      {"cubic t=1", WeightSpec(Cubic{Real(1)}), &oracle::cubic_t1},
      {"maxwell rho=1 t=1/2", WeightSpec(Maxwell{Real(1), R("0.5")}), &oracle::maxwell_r1_th},
      {"maxwell rho=0 t=0", WeightSpec(Maxwell{Real(0), Real(0)}), &oracle::maxwell_r0_t0},
      {"sextic t=0", WeightSpec(Sextic{Real(0)}), &oracle::sextic_t0},
      {"sextic t=1/2", WeightSpec(Sextic{R("0.5")}), &oracle::sextic_th},
      {"genjacobi", WeightSpec(GenJacobi{R("-0.25"), R("-1/3"), R("-0.5"), Real(2)}), &oracle::genjacobi},
  };
}

}  // namespace testing

namespace testing {

/// The frozen oracle values as a recurrence table (u_0..u_8, b_0..b_8).
inline semiortho::RecurrenceTable table_from_case(const oracle::Case& c, const std::string& family, const Real& t) {
  semiortho::RecurrenceTable rt;
  rt.family = family;
  rt.t = t;
  rt.N = static_cast<int>(c.u.size()) - 1;
  for (const char* s : c.u) rt.u.push_back(R(s));
  for (const char* s : c.b) rt.b.push_back(R(s));
  return rt;
}

}  // namespace testing
