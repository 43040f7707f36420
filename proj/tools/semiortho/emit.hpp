#pragma once

#include "semiortho/ortho.hpp"
#include "semiortho/residual.hpp"

#include "json.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace cli {

using nlohmann::json;

/// Decimal string at the working precision of the current scope.
std::string num(const semiortho::Real& x);
void set_output_digits(int digits);

/// FD reports pass on order 2 +- 0.3 and the tolerance; algebraic ones on the
/// tolerance alone.
bool report_passes(const semiortho::ResidualReport& r);

json to_json(const semiortho::ResidualReport& r);
json to_json(const semiortho::RecurrenceTable& rt);

void reports_csv(std::ostream& os, const std::vector<semiortho::ResidualReport>& reports);
void table_csv(std::ostream& os, const semiortho::RecurrenceTable& rt);

}  // namespace cli
