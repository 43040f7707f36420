#pragma once

#include "semiortho/precision.hpp"

#include <vector>

namespace semiortho {

/// Right-hand side of x' = f(t, x) as an expression graph, so that Taylor
/// coefficients of every intermediate follow from O(k) recurrences.
class TaylorSystem {
 public:
  using Node = int;

  explicit TaylorSystem(int dimension);

  int dimension() const { return dim_; }
  Node var(int i) const { return i; }
  Node time();
  Node constant(const Real& c);
  Node add(Node a, Node b);
  Node sub(Node a, Node b);
  Node mul(Node a, Node b);
  Node div(Node a, Node b);
  Node scale(const Real& c, Node a);
  /// x_i' = node
  void set_derivative(int i, Node rhs);

  /// Taylor coefficients c[i][k] of x_i about t0, k = 0..order.
  std::vector<std::vector<Real>> coefficients(const Real& t0, const std::vector<Real>& x0, int order) const;

  /// f(t, x) evaluated directly.
  std::vector<Real> rhs(const Real& t, const std::vector<Real>& x) const;

 private:
  enum class Op { Var, Time, Const, Add, Sub, Mul, Div, Scale };
  struct Item {
    Op op;
    int a = -1;
    int b = -1;
    Real c;
  };
  Node push(Item item);

  int dim_;
  std::vector<Item> nodes_;
  std::vector<Node> rhs_;
};

struct TaylorOptions {
  Real tol;            // local error per step (absolute, scaled by max(1, |x|))
  int order = 0;       // 0: chosen from tol
  Real min_step;       // StepUnderflow below this
  int max_steps = 200000;
};

struct TaylorResult {
  std::vector<Real> x;
  int steps = 0;
};

/// Integrates from t0 to t1 (either direction). Step size from the last two
/// coefficients (Jorba-Zou). Throws StepUnderflow with an estimate of the
/// nearest singularity when the step collapses.
TaylorResult taylor_integrate(const TaylorSystem& sys, const Real& t0, std::vector<Real> x0, const Real& t1,
                              const TaylorOptions& opt);

}  // namespace semiortho
