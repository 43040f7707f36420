#pragma once

#include "semiortho/ortho.hpp"
#include "semiortho/residual.hpp"

#include <vector>

namespace semiortho {

/// U = W f' - 2 V f (polynomial part). The negative-power part must vanish;
/// PearsonInconsistency otherwise.
Poly compute_U(const WeightSpec& spec, const MomentTable& m);

/// max(deg W - 2, deg V - 1)
int theta_degree_bound(const WeightSpec& spec);
/// max(deg W - 1, deg V); equals deg W - 1 in the generic case.
int omega_degree_bound(const WeightSpec& spec);

struct ThetaResult {
  Poly theta;      // truncated to the degree bound
  Real overflow;   // largest dropped coefficient, relative to the term sizes
};

/// Theta_n = (1/h_n) [W (sigma_n' pi_n - pi_n' sigma_n) - 2 V sigma_n pi_n - U pi_n^2]
/// (monic form). DegreeOverflow if a coefficient above the bound exceeds
/// `threshold` relative to the size of the terms that cancelled.
ThetaResult theta_from_definition(const PolySystem& ps, const RecurrenceTable& rt, const WeightSpec& spec,
                                  const Poly& U, int n, const Real& threshold);

/// Omega_n from its closed expression (monic form, n >= 1):
/// (1/h_{n-1}) [W (sigma_n' pi_{n-1} - pi_n' sigma_{n-1}) - V (sigma_n pi_{n-1} + pi_n sigma_{n-1}) - U pi_n pi_{n-1}]
Poly omega_from_definition(const PolySystem& ps, const RecurrenceTable& rt, const WeightSpec& spec, const Poly& U,
                           int n);

/// Omega_0 = V, Omega_{n+1} = (z - b_n) Theta_n - Omega_n.
std::vector<Poly> omega_recursion(const std::vector<Poly>& theta, const RecurrenceTable& rt, const Poly& V);

struct ThetaOmegaSequence {
  WeightSpec spec;
  Real t;
  int N = 0;
  Poly U;
  std::vector<Poly> theta;  // Theta_0..Theta_N
  std::vector<Poly> omega;  // Omega_0..Omega_{N+1}
  std::vector<Real> theta_overflow;
};

/// Theta_0..Theta_N from the definition and Omega by recursion. Needs
/// ps built to N.
ThetaOmegaSequence build_theta_omega(const WeightSpec& spec, const MomentTable& m, const RecurrenceTable& rt,
                                     const PolySystem& ps, int N);

struct GenJacobiScalars {
  Real nu, vartheta, kappa, omega, zeta;
};

/// (nu, vartheta, kappa, omega, zeta) read off Theta_n, Omega_n.
GenJacobiScalars genjacobi_from_polys(const ThetaOmegaSequence& tos, int n);
/// The same from the closed forms in sums of b_i and a_i^2.
GenJacobiScalars genjacobi_from_sums(const GenJacobi& params, const RecurrenceTable& rt, int n);

/// Both routes; RouteDisagreement if any scalar differs by more than `tol`
/// relative to its size.
GenJacobiScalars genjacobi_scalars(const ThetaOmegaSequence& tos, const RecurrenceTable& rt, int n, const Real& tol);

/// Residual reports, one per identity, over n <= upto:
///   theta-degree, omega-closed-form, omega-step, omega-square, derivative-relation,
///   K-polynomial, second-order-ode
/// and for the generalized Jacobi family also the scalar routes and the
/// eliminations of a_n^2 vartheta_{n-1}, a_n^2 nu_{n-1} and omega_n.
/// Residuals are coefficient maxima relative to the largest term involved.
std::vector<ResidualReport> identity_suite(const ThetaOmegaSequence& tos, const PolySystem& ps,
                                           const RecurrenceTable& rt, int upto, const PrecisionContext& ctx);

}  // namespace semiortho
