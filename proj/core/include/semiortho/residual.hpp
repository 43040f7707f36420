#pragma once

#include "semiortho/precision.hpp"

#include <optional>
#include <string>
#include <vector>

namespace semiortho {

struct ResidualEntry {
  int n = 0;
  Real t;
  Real residual;
  std::optional<Real> h;  // finite-difference step, when one was used
};

/// Residuals of one named identity over a grid of (n, t[, h]).
struct ResidualReport {
  std::string identity;
  std::vector<ResidualEntry> entries;
  /// Finite-difference ladder and the worst residual seen at each step.
  std::vector<Real> h_ladder;
  std::vector<Real> per_h;
  /// log2(r(h)/r(h/2)) for consecutive rungs.
  std::vector<double> observed_orders;
  /// Largest residual the identity is allowed at this precision.
  Real tolerance;
  /// Residuals already at the precision floor, so the order is meaningless.
  bool precision_floor = false;
  /// Non-fatal observations (branch exits, skipped rungs).
  std::vector<std::string> notes;

  Real max_residual() const;
  /// Worst observed order deviation from `expected`, skipping rungs at the floor.
  bool order_ok(double expected, double slack) const;
  bool within_tolerance() const { return max_residual() <= tolerance; }
};

/// Fills per_h and observed_orders from the entries' h values.
void summarize_orders(ResidualReport& report);

}  // namespace semiortho
