#include "semiortho/residual.hpp"

#include <algorithm>
#include <cmath>

namespace semiortho {

namespace mp = boost::multiprecision;

Real ResidualReport::max_residual() const {
  Real m(0);
  for (const auto& e : entries) m = std::max(m, mp::abs(e.residual));
  return m;
}

bool ResidualReport::order_ok(double expected, double slack) const {
  if (observed_orders.empty()) return precision_floor;
  for (double p : observed_orders) {
    if (std::isfinite(p) && std::abs(p - expected) > slack) return false;
  }
  return true;
}

void summarize_orders(ResidualReport& report) {
  report.per_h.assign(report.h_ladder.size(), Real(0));
  for (const auto& e : report.entries) {
    if (!e.h) continue;
    for (std::size_t k = 0; k < report.h_ladder.size(); ++k) {
      if (*e.h == report.h_ladder[k]) report.per_h[k] = std::max(report.per_h[k], mp::abs(e.residual));
    }
  }
  report.observed_orders.clear();
  for (std::size_t k = 0; k + 1 < report.per_h.size(); ++k) {
    const Real& a = report.per_h[k];
    const Real& b = report.per_h[k + 1];
    if (a == 0 || b == 0) continue;
    const Real ratio = report.h_ladder[k] / report.h_ladder[k + 1];
    report.observed_orders.push_back(static_cast<double>(mp::log(a / b) / mp::log(ratio)));
  }
}

}  // namespace semiortho
