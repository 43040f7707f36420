#pragma once

#include "semiortho/ortho.hpp"
#include "semiortho/residual.hpp"
#include "semiortho/theta_omega.hpp"

#include <optional>
#include <vector>

namespace semiortho {

/// Oracle data at one value of t.
struct TSample {
  Real t;
  RecurrenceTable rt;
  std::vector<GenJacobiScalars> scalars;  // generalized Jacobi only, n = 0..N-1
};

/// Oracle tables at every t of the grid and at t +- h for every step h.
struct TGrid {
  WeightSpec spec;
  std::vector<Real> ts;
  std::vector<Real> hs;
  int N = 0;
  PrecisionContext ctx;
  std::vector<TSample> center;                              // per t
  std::vector<std::vector<std::pair<TSample, TSample>>> side;  // [t][h] = (t - h, t + h)
};

/// ConfigError unless ts is sorted and hs holds at least two steps.
TGrid make_tgrid(const WeightSpec& spec, std::vector<Real> ts, std::vector<Real> hs, int N,
                 const PrecisionContext& ctx);

/// Toda-type equations with the t-derivative replaced by centered differences:
///   quartic   a'/a = (u_{n-1} - u_{n+1})/2
///   cubic     u' = 2 u b + n,  b' = -b^2 - 2u - t
///   maxwell   the folded lattice u~' = u~ (u~_{n-1} - u~_{n+1})
///   sextic    u' = u (u_{n-1} - u_{n+1}) and the four-variable system
///   genjacobi the pair for a_n'/a_n and b_n'
/// n runs over 1..n_max (clamped to what the tables hold).
std::vector<ResidualReport> toda_check(const TGrid& grid, int n_max);

/// Quartic: the a-form 4a^3 a'' = (3a^4 + 2ta^2 - n)(a^4 + 2ta^2 + n) and the
/// P_IV form on u with alpha = -n/2, beta = -n^2/2. Maxwell: P_IV on the
/// folded u~_n with alpha = -n/2 - (2rho+1)(1+3(-1)^n)/4, beta = -r_n^2/2.
std::vector<ResidualReport> painleve4_check(const TGrid& grid, int n_max);

/// Generalized Jacobi: the vartheta' equation, the zeta relation, the omega'
/// and kappa' equations, the closed zeta' equation and the second-order P_VI
/// equation for vartheta_n. The zeta' equation is used in the form that
/// differentiates to the P_VI equation: its last term is
/// vartheta (nu + vartheta)(nu t + vartheta) / (4 t (t-1)) overall.
std::vector<ResidualReport> painleve6_check(const TGrid& grid, int n_max);

/// Quartic: y^2 = n/(2u) - u/2 - t -+ a'/a against u_{n+1} ('-') and u_{n-1}
/// ('+'), plus the algebraic part n/(2u) - u/2 - t = (u_{n-1} + u_{n+1})/2.
/// Negative radicands are counted as branch exits in the notes.
std::vector<ResidualReport> backlund_check(const TGrid& grid, int n_lo, int n_hi);

/// Indices of the recurrence coefficients carried by the flow.
struct FlowWindow {
  int lo = 1;
  int hi = 10;
  int buffer = 4;  // quartic: extra indices above hi closed by the string equation
};

/// Integrates the family's closed differential system from the seed table's
/// t to t_target with local tolerance 10^(-digits/2):
///   quartic  u_1..u_{hi+buffer} under u' = u (u_{n-1} - u_{n+1}), top closed by
///            the string equation;
///   cubic    (u_n, b_n) for n in [lo, hi] under the P_II system;
///   sextic   (u_{lo}, .., u_{lo+3}) under the four-variable system (n = lo+1).
/// The returned table holds u, b for indices lo..hi (zero elsewhere).
/// StepUnderflow at a pole; WindowClosureFailure when the closure divides by ~0.
RecurrenceTable flow_integrate(const WeightSpec& spec, const RecurrenceTable& seed, const Real& t_target,
                               const FlowWindow& window, const PrecisionContext& ctx);

/// The P_IV form of the quartic relation with n replaced by a real index nu,
/// seeded at seed_t from the asymptotic series u ~ nu/(2t) + ... and
/// integrated to t_target. Returns u_nu(t_target).
struct FractionalFlowResult {
  Real u;
  Real seed_u;
  Real seed_residual;  // size of the smallest series term used at the seed
  int terms = 0;
  int steps = 0;
};
FractionalFlowResult fractional_flow(const Real& nu, const Real& seed_t, const Real& t_target,
                                     const PrecisionContext& ctx);

/// Coefficients c_k of u_nu(t) ~ sum_k c_k t^{-(2k+1)} for the P_IV form.
std::vector<Real> fractional_asymptotic_series(const Real& nu, int terms);

struct Figure7Sample {
  int n = 0;
  Real scaled_t;
  Real scaled_a;
};
struct EnvelopePoint {
  Real scaled_t;
  int branch = 0;  // 0: 3a^4 + 2ta^2 - 1 = 0; 1, 2: a^4 + 2ta^2 + 1 = 0 (larger, smaller root)
  Real scaled_a;
};
struct Figure7Data {
  std::vector<Figure7Sample> samples;
  std::vector<EnvelopePoint> envelope;
};

/// scaled_a = n^{-1/4} a_n at t = scaled_t sqrt(n), Lew-Quarles with warm
/// starts along the grid; envelope of the zeros of the right-hand side of the
/// scaled a-form.
Figure7Data figure7_dataset(const std::vector<int>& ns, const std::vector<Real>& scaled_t,
                            const PrecisionContext& ctx);

}  // namespace semiortho
