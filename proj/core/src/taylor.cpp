#include "semiortho/taylor.hpp"

#include "semiortho/errors.hpp"

#include <algorithm>
#include <cmath>

namespace semiortho {

namespace mp = boost::multiprecision;

TaylorSystem::TaylorSystem(int dimension) : dim_(dimension), rhs_(dimension, -1) {
  for (int i = 0; i < dimension; ++i) nodes_.push_back({Op::Var, i, -1, Real(0)});
}

TaylorSystem::Node TaylorSystem::push(Item item) {
  nodes_.push_back(std::move(item));
  return static_cast<Node>(nodes_.size()) - 1;
}

TaylorSystem::Node TaylorSystem::time() { return push({Op::Time, -1, -1, Real(0)}); }
TaylorSystem::Node TaylorSystem::constant(const Real& c) { return push({Op::Const, -1, -1, c}); }
TaylorSystem::Node TaylorSystem::add(Node a, Node b) { return push({Op::Add, a, b, Real(0)}); }
TaylorSystem::Node TaylorSystem::sub(Node a, Node b) { return push({Op::Sub, a, b, Real(0)}); }
TaylorSystem::Node TaylorSystem::mul(Node a, Node b) { return push({Op::Mul, a, b, Real(0)}); }
TaylorSystem::Node TaylorSystem::div(Node a, Node b) { return push({Op::Div, a, b, Real(0)}); }
TaylorSystem::Node TaylorSystem::scale(const Real& c, Node a) { return push({Op::Scale, a, -1, c}); }

void TaylorSystem::set_derivative(int i, Node rhs) { rhs_.at(i) = rhs; }

std::vector<std::vector<Real>> TaylorSystem::coefficients(const Real& t0, const std::vector<Real>& x0,
                                                          int order) const {
  const std::size_t M = nodes_.size();
  std::vector<std::vector<Real>> c(M, std::vector<Real>(order + 1, Real(0)));
  for (int k = 0; k <= order; ++k) {
    for (std::size_t j = 0; j < M; ++j) {
      const Item& it = nodes_[j];
      Real& out = c[j][k];
      switch (it.op) {
        case Op::Var:
          out = k == 0 ? x0[it.a] : c[rhs_[it.a]][k - 1] / k;
          break;
        case Op::Time:
          out = k == 0 ? t0 : (k == 1 ? Real(1) : Real(0));
          break;
        case Op::Const:
          out = k == 0 ? it.c : Real(0);
          break;
        case Op::Add:
          out = c[it.a][k] + c[it.b][k];
          break;
        case Op::Sub:
          out = c[it.a][k] - c[it.b][k];
          break;
        case Op::Scale:
          out = it.c * c[it.a][k];
          break;
        case Op::Mul: {
          Real s(0);
          for (int i = 0; i <= k; ++i) s += c[it.a][i] * c[it.b][k - i];
          out = s;
          break;
        }
        case Op::Div: {
          const auto& bb = c[it.b];
          if (bb[0] == 0) throw Error(ErrorKind::StepUnderflow, "division by zero in the right-hand side");
          Real s = c[it.a][k];
          for (int i = 1; i <= k; ++i) s -= bb[i] * c[j][k - i];
          out = s / bb[0];
          break;
        }
      }
    }
  }
  std::vector<std::vector<Real>> vars(dim_);
  for (int i = 0; i < dim_; ++i) vars[i] = std::move(c[i]);
  return vars;
}

std::vector<Real> TaylorSystem::rhs(const Real& t, const std::vector<Real>& x) const {
  auto c = coefficients(t, x, 1);
  std::vector<Real> out(dim_);
  for (int i = 0; i < dim_; ++i) out[i] = c[i][1];
  return out;
}

TaylorResult taylor_integrate(const TaylorSystem& sys, const Real& t0, std::vector<Real> x, const Real& t1,
                              const TaylorOptions& opt) {
  const double lt = -static_cast<double>(mp::log(opt.tol));
  const int p = opt.order > 0 ? opt.order : std::clamp(static_cast<int>(std::ceil(lt / 2)) + 1, 10, 60);
  const Real dir = t1 >= t0 ? Real(1) : Real(-1);
  Real t = t0;
  TaylorResult res;
  while (t != t1) {
    if (res.steps >= opt.max_steps) throw Error(ErrorKind::StepUnderflow, "step budget exhausted");
    const auto c = sys.coefficients(t, x, p);
    Real scale(1);
    for (const auto& xi : x) scale = std::max(scale, mp::abs(xi));
    Real top1(0), top2(0);
    for (const auto& ci : c) {
      top1 = std::max(top1, mp::abs(ci[p - 1]));
      top2 = std::max(top2, mp::abs(ci[p]));
    }
    const Real eps = opt.tol * scale;
    Real h = mp::pow(Real(10), 6);
    if (top1 > 0) h = std::min(h, mp::pow(eps / top1, Real(1) / (p - 1)));
    if (top2 > 0) h = std::min(h, mp::pow(eps / top2, Real(1) / p));
    h *= Real("0.8");
    if (h < opt.min_step) {
      // Radius of convergence from the coefficient ratio locates the singularity.
      Real radius = top2 > 0 ? top1 / top2 : Real(0);
      throw Error(ErrorKind::StepUnderflow, "step collapsed at t=" + to_decimal(t, 12) +
                                                "; nearest singularity estimated at distance " +
                                                to_decimal(radius, 4) + " (t~" + to_decimal(t + dir * radius, 8) +
                                                ")");
    }
    if (mp::abs(t1 - t) <= h) {
      h = mp::abs(t1 - t);
    }
    const Real step = dir * h;
    for (std::size_t i = 0; i < x.size(); ++i) {
      Real acc = c[i][p];
      for (int k = p - 1; k >= 0; --k) acc = acc * step + c[i][k];
      x[i] = std::move(acc);
    }
    t = (mp::abs(t1 - t) <= h) ? t1 : t + step;
    ++res.steps;
  }
  res.x = std::move(x);
  return res;
}

}  // namespace semiortho
