#pragma once

#include "semiortho/laurent.hpp"
#include "semiortho/weights.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semiortho {

enum class RecurrenceMethod { HankelRatio, Stieltjes };

std::string method_name(RecurrenceMethod m);

/// Recurrence coefficients of the monic polynomials
///   pi_{n+1} = (z - b_n) pi_n - u_n pi_{n-1},  u_n = a_n^2,
/// for the functional normalized to mu_0 = 1. Working with u instead of a
/// keeps the cubic family real even where a_n^2 < 0.
struct RecurrenceTable {
  std::string family;
  Real t;
  int N = 0;
  std::vector<Real> u;  // u[0] = 0 (a_0 = 0), u[1..N]
  std::vector<Real> b;  // b[0..N]
  std::vector<double> certified_digits;  // per n, empty until estimated
  RecurrenceMethod method = RecurrenceMethod::HankelRatio;

  /// a_n = sqrt(u_n); nullopt when u_n <= 0.
  std::optional<Real> a(int n) const;
  /// h_n = <pi_n, pi_n> = u_1 ... u_n.
  Real h(int n) const;
  /// Leading coefficient of the orthonormal p_n, h_n^{-1/2}; nullopt when h_n <= 0.
  std::optional<Real> gamma(int n) const;
  /// Smallest certified digit count over n <= upto (the whole table if -1).
  double min_certified(int upto = -1) const;
};

/// u_1..u_N and b_0..b_N from m_0..m_{2N+1}.
///
/// HankelRatio: LU elimination of the Hankel matrix (Chebyshev's moment
/// algorithm); the pivots are h_k = D_k / D_{k-1}. SingularHankel when a pivot
/// falls below tol relative to its diagonal entry.
/// Stieltjes: discretized inner products on the table's quadrature rule.
RecurrenceTable recurrence_from_moments(const MomentTable& m, int N, RecurrenceMethod method);

/// Orthonormality residuals on the quadrature rule:
///   r_ij = |<pi_i, pi_j> - delta_ij h_i| / sqrt|h_i h_j|,
///   certified(n) = -log10(max_{i,j<=n} r_ij) - guard.
std::vector<double> estimate_certified_digits(const RecurrenceTable& rt, const MomentTable& m);

/// Both routes, cross-checked: MethodDisagreement when some u_n or b_n differs
/// by more than 10^(2 - certified). Returns the Stieltjes table with the
/// per-entry minimum of the two certified-digit estimates; PrecisionExhausted
/// when no digit of u_1 survives.
RecurrenceTable oracle_recurrence(const MomentTable& m, int N);

/// Monic polynomials and their Laurent companions:
///   f pi_n = sigma_n + eps_n,
/// sigma_n the polynomial part (degree n-1, the associated polynomial) and
/// eps_n = h_n z^{-n-1} + ... the tail.
struct PolySystem {
  std::vector<Poly> pi;      // pi_0..pi_N
  std::vector<Poly> sigma;   // sigma_0 = 0, sigma_1 = 1, ...
  std::vector<LaurentTail> eps;
};

/// `depth` tail terms of every eps_n; InsufficientMoments if the table is too
/// short for that.
PolySystem build_poly_system(const RecurrenceTable& rt, const MomentTable& m, int N, int depth);

/// Same polynomials obtained from the recurrence on both sides:
/// sigma_{n+1} = (z - b_n) sigma_n - u_n sigma_{n-1}.
std::vector<Poly> associated_by_recurrence(const RecurrenceTable& rt, int N);

}  // namespace semiortho
