#include "emit.hpp"

namespace cli {

namespace {
int g_digits = 50;
}

void set_output_digits(int digits) { g_digits = digits; }

std::string num(const semiortho::Real& x) { return semiortho::to_decimal(x, g_digits); }

bool report_passes(const semiortho::ResidualReport& r) {
  if (!r.within_tolerance()) return false;
  return r.h_ladder.empty() || r.order_ok(2.0, 0.3);
}

json to_json(const semiortho::ResidualReport& r) {
  json j;
  j["identity"] = r.identity;
  j["max_residual"] = num(r.max_residual());
  j["tolerance"] = num(r.tolerance);
  j["pass"] = report_passes(r);
  j["precision_floor"] = r.precision_floor;
  j["notes"] = r.notes;
  json entries = json::array();
  for (const auto& e : r.entries) {
    json x{{"n", e.n}, {"t", num(e.t)}, {"residual", num(e.residual)}};
    if (e.h) x["h"] = num(*e.h);
    entries.push_back(std::move(x));
  }
  j["entries"] = std::move(entries);
  if (!r.h_ladder.empty()) {
    json per = json::array();
    for (std::size_t k = 0; k < r.h_ladder.size(); ++k)
      per.push_back({{"h", num(r.h_ladder[k])}, {"max_residual", num(r.per_h[k])}});
    j["per_h"] = std::move(per);
    j["observed_orders"] = r.observed_orders;
  }
  return j;
}

json to_json(const semiortho::RecurrenceTable& rt) {
  json rows = json::array();
  for (int n = 0; n <= rt.N; ++n) {
    json row{{"n", n}, {"a_squared", num(rt.u[n])}, {"b", num(rt.b[n])}};
    if (auto a = rt.a(n)) row["a"] = num(*a);
    if (n < static_cast<int>(rt.certified_digits.size())) row["certified_digits"] = rt.certified_digits[n];
    rows.push_back(std::move(row));
  }
  return {{"family", rt.family}, {"t", num(rt.t)}, {"N", rt.N}, {"method", semiortho::method_name(rt.method)},
          {"rows", std::move(rows)}};
}

void reports_csv(std::ostream& os, const std::vector<semiortho::ResidualReport>& reports) {
  os << "identity,n,t,h,residual\n";
  for (const auto& r : reports)
    for (const auto& e : r.entries)
      os << r.identity << ',' << e.n << ',' << num(e.t) << ',' << (e.h ? num(*e.h) : std::string()) << ','
         << num(e.residual) << '\n';
}

void table_csv(std::ostream& os, const semiortho::RecurrenceTable& rt) {
  os << "n,a_squared,b,certified_digits\n";
  for (int n = 0; n <= rt.N; ++n) {
    os << n << ',' << num(rt.u[n]) << ',' << num(rt.b[n]) << ',';
    if (n < static_cast<int>(rt.certified_digits.size())) os << rt.certified_digits[n];
    os << '\n';
  }
}

}  // namespace cli
