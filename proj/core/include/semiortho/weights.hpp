#pragma once

#include "semiortho/poly.hpp"
#include "semiortho/quadrature.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace semiortho {

struct Quartic {
  Real t;
};
struct Cubic {
  Real t;
};
struct Maxwell {
  Real rho;
  Real t;
};
struct Sextic {
  Real t;
};
struct GenJacobi {
  Real alpha;
  Real beta;
  Real gamma;
  Real t;
};

using Family = std::variant<Quartic, Cubic, Maxwell, Sextic, GenJacobi>;

enum class Support {
  RealLine,      // (-inf, inf)
  CubicRays,     // inf e^{-i pi/3} -> 0 -> inf e^{i pi/3}
  HalfLine,      // [t, inf)
  UnitInterval,  // [0, 1]
};

/// exp(-x^4/4 - t x^2), exp(x^3/3 + t x), (x-t)^rho exp(-x^2),
/// exp(-x^6 - t x^2), (1-x)^alpha x^beta (t-x)^gamma.
///
/// Construction validates the parameter domain and checks the Pearson pair
/// (W w' = 2 V w) against the closed-form logarithmic derivative.
class WeightSpec {
 public:
  explicit WeightSpec(Family family);

  const Family& family() const { return family_; }
  std::string name() const;
  const Real& t() const;
  /// Same family and shape parameters at another t.
  WeightSpec with_t(const Real& t) const;

  const Poly& W() const { return W_; }
  const Poly& V() const { return V_; }
  Support support() const;
  /// Quartic and Sextic: all odd moments vanish.
  bool is_even() const;
  /// The normalized functional is real but the measure is complex.
  bool is_contour() const { return support() == Support::CubicRays; }

  /// w'(x)/w(x) from the closed form of w, independent of W and V.
  Real log_derivative(const Real& x) const;

 private:
  Family family_;
  Poly W_;
  Poly V_;
};

/// sum_{j=0}^{D} (k xi_j + eta_{j-1}) mu_{k-1+j} = 0 for k >= 0, obtained by
/// integrating (x^k W w)' over the support. xi are the coefficients of W,
/// eta those of W' + 2V.
class MomentRecursion {
 public:
  explicit MomentRecursion(const WeightSpec& spec);

  /// D: mu_{k-1+D} is the highest moment in relation k.
  int order() const { return D_; }
  /// Number of moments that must be supplied: D - 1.
  int seeds() const { return D_ - 1; }
  Real coefficient(int j, int k) const;
  /// Extends mu_0..mu_{seeds-1} to `count` entries.
  std::vector<Real> extend(std::vector<Real> seeds, int count) const;

 private:
  int D_;
  std::vector<Real> xi_;
  std::vector<Real> eta_;
};

using AnyRule = std::variant<RealRule, ContourRule>;

/// A quadrature rule for the weight that integrates x^0..x^max_power to
/// relative accuracy ctx.tol().
AnyRule weight_rule(const WeightSpec& spec, int max_power, const PrecisionContext& ctx);

/// mu_0..mu_{count-1} by quadrature (raw, unnormalized). Contour moments are
/// complex; for the cubic they are purely imaginary.
std::vector<Complex> seed_moments(const WeightSpec& spec, int count, const PrecisionContext& ctx);

enum class MomentOrigin { Quadrature, Recursion, Symmetry };

struct MomentTable {
  WeightSpec spec;
  PrecisionContext ctx;
  std::vector<Real> m;  // m_k = mu_k / mu_0
  std::vector<MomentOrigin> origin;
  /// Rule with weights divided by mu_0, so it integrates the normalized
  /// functional. Shared by the Stieltjes route and digit estimation.
  std::shared_ptr<const AnyRule> rule;
  /// Largest |recursion - quadrature| seen in the spot check.
  Real spot_check_error;

  int size() const { return static_cast<int>(m.size()); }
};

/// m_0..m_K. Moments are seeded by quadrature, extended by the recursion,
/// and every k <= 12 is compared with direct quadrature at 10^(-digits/2).
MomentTable build_moment_table(const WeightSpec& spec, int K, const PrecisionContext& ctx);

}  // namespace semiortho
