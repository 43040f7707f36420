#pragma once

#include "semiortho/ortho.hpp"
#include "semiortho/residual.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semiortho {

/// The Laguerre-Freud (string) relations of a family, in u_n = a_n^2:
///   quartic:  u_n (u_{n-1} + u_n + u_{n+1} + 2t) = n
///   folded:   same with right-hand side n + (2 rho + 1) odd(n)
///   cubic:    u_n + u_{n+1} + b_n^2 + t = 0,  n + u_n (b_n + b_{n-1}) = 0
///   sextic:   u_n (6 P_n + 2t) = n,  P_n the ten-term path sum
/// The folded system belongs to |u|^{2rho+1} exp(-u^4/4 - t u^2), obtained
/// from the Maxwell weight by x = t + u^2/2; rho = -1/2 is the quartic.
struct StringSystem {
  enum class Kind { Quartic, Cubic, Folded, Sextic };
  Kind kind;
  Real t;
  Real rho;  // Folded only

  /// Maxwell maps to its folded system. GenJacobi has no hand-coded string
  /// equation: UnsupportedFamily.
  static StringSystem for_weight(const WeightSpec& spec);

  std::string name() const;
  /// Right-hand side n + (2 rho + 1) odd(n) (just n for the quartic).
  Real rhs(int n) const;
  /// Smallest n whose relation needs an index above `top`.
  int last_checkable(int top) const;
};

struct StringSeeds {
  std::vector<Real> u;  // u[0] = 0, then u_1, ...
  std::vector<Real> b;  // b_0, ...
};

/// Seeds the propagation needs, read off an oracle table:
/// quartic/folded u_1; cubic u_1, b_0; sextic u_1..u_4.
StringSeeds seeds_from(const StringSystem& sys, const RecurrenceTable& rt);

/// Solves each relation forward for its highest-index unknown.
/// DivisionByNearZero when a divisor drops below tol; ComplexityBreakdown when
/// redundant seeds (cubic u_1, sextic u_3, u_4) contradict the relations.
RecurrenceTable propagate(const StringSystem& sys, const StringSeeds& seeds, int N, const PrecisionContext& ctx);

/// Per-n residual of every relation; the table must hold the system's own
/// unknowns (fold Maxwell tables first).
ResidualReport residual_check(const StringSystem& sys, const RecurrenceTable& rt, const PrecisionContext& ctx);

/// Maxwell (a_n, b_n) on [t, inf) -> folded u~_1..u~_{2N+1}:
///   u~_1 = 2(b_0 - t), u~_{2n} = 4 u_n / u~_{2n-1}, u~_{2n+1} = 2(b_n - t) - u~_{2n}.
RecurrenceTable unfold_maxwell(const RecurrenceTable& maxwell);

struct LewQuarlesOptions {
  std::optional<Real> rho;          // folded variant when set
  int buffer = 20;                  // initial truncation buffer, doubled until stable
  int max_sweeps = 20000;
  const std::vector<Real>* warm_start = nullptr;  // u[0..] guess, e.g. from a nearby t
};

/// The all-positive solution u_1..u_N of the quartic (or folded) string
/// equation: damped fixed point u_n <- (u_n + r_n / (u_{n-1}+u_n+u_{n+1}+2t)) / 2
/// on a zero-tail truncation, polished by Newton on the tridiagonal system.
/// When the iteration leaves the positive cone (t < 0), continuation in t from
/// t = 0 takes over. NegativeIterate / NonConvergence if both fail.
RecurrenceTable lew_quarles(const Real& t, int N, const PrecisionContext& ctx, const LewQuarlesOptions& opt = {});

}  // namespace semiortho
