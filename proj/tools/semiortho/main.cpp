#include "emit.hpp"

#include "semiortho/errors.hpp"
#include "semiortho/painleve.hpp"
#include "semiortho/string_equations.hpp"
#include "semiortho/theta_omega.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace semiortho;
using cli::json;
using cli::num;

namespace {

namespace mp = boost::multiprecision;

// Exit statuses: 0 all checks within tolerance, 1 some check outside it,
// 2 output could not be written, 10 + ErrorKind for library errors.
constexpr int kChecksFailed = 1;
constexpr int kIoError = 2;
constexpr int kErrorBase = 10;

struct RunConfig {
  std::string command;
  std::string family = "quartic";
  std::vector<std::string> t{"0"};
  std::string rho = "0";
  std::string alpha = "-1/4";
  std::string beta = "-1/3";
  std::string gamma = "-1/2";
  int n = 10;
  int n_lo = 1;
  int digits = 50;
  int guard = 10;
  std::vector<std::string> h;
  std::string output;
  std::string format = "json";
  // command specific
  int count = 20;
  std::string method = "oracle";
  bool folded = false;
  std::string t1 = "1";
  std::string window = "1..10";
  int buffer = 4;
  std::string nu;
  std::string seed_t = "100";
  std::string n_range = "1..10";
  std::string scaled_t = "-3..3";
  int steps = 61;
  std::string out_dir = ".";

  json to_json() const {
    return {{"command", command}, {"family", family}, {"t", t},         {"rho", rho},
            {"alpha", alpha},     {"beta", beta},     {"gamma", gamma}, {"n", n},
            {"n_lo", n_lo},       {"digits", digits}, {"guard", guard}, {"h", h},
            {"format", format},   {"count", count},   {"method", method}, {"t1", t1},
            {"window", window},   {"buffer", buffer}, {"nu", nu},       {"seed_t", seed_t},
            {"n_range", n_range}, {"scaled_t", scaled_t}, {"steps", steps}};
  }
};

struct Outcome {
  json result;
  bool pass = true;
  std::function<void(std::ostream&)> csv;
};

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(ErrorKind::ConfigError, "bad range '" + s + "'");
  }
}

std::pair<Real, Real> parse_real_range(const std::string& s) {
  // The first '..' after position 0 separates the bounds; "-3..3" has it at 2.
  const auto dots = s.find("..", 1);
  if (dots == std::string::npos) return {parse_real(s), parse_real(s)};
  return {parse_real(s.substr(0, dots)), parse_real(s.substr(dots + 2))};
}

WeightSpec make_spec(const RunConfig& c, const Real& t) {
  if (c.family == "quartic") return WeightSpec(Quartic{t});
  if (c.family == "cubic") return WeightSpec(Cubic{t});
  if (c.family == "maxwell") return WeightSpec(Maxwell{parse_real(c.rho), t});
  if (c.family == "sextic") return WeightSpec(Sextic{t});
  if (c.family == "genjacobi")
    return WeightSpec(GenJacobi{parse_real(c.alpha), parse_real(c.beta), parse_real(c.gamma), t});
  throw Error(ErrorKind::ConfigError, "unknown family '" + c.family + "'");
}

std::vector<Real> t_values(const RunConfig& c) {
  std::vector<Real> ts;
  for (const auto& s : c.t) ts.push_back(parse_real(s));
  std::sort(ts.begin(), ts.end());
  return ts;
}

std::vector<Real> h_ladder(const RunConfig& c) {
  std::vector<Real> hs;
  if (c.h.empty()) return {Real("0.01"), Real("0.005"), Real("0.0025")};
  if (c.h.size() == 1) {
    const Real h = parse_real(c.h[0]);
    return {h, h / 2, h / 4};
  }
  for (const auto& s : c.h) hs.push_back(parse_real(s));
  std::sort(hs.begin(), hs.end(), std::greater<>());
  return hs;
}

RecurrenceTable oracle_table(const WeightSpec& spec, int N, const PrecisionContext& ctx) {
  const MomentTable mt = build_moment_table(spec, 2 * N + 4, ctx);
  return oracle_recurrence(mt, N);
}

Outcome reports_outcome(std::vector<ResidualReport> reports) {
  Outcome o;
  json arr = json::array();
  for (const auto& r : reports) {
    o.pass = o.pass && cli::report_passes(r);
    arr.push_back(cli::to_json(r));
  }
  o.result = {{"reports", std::move(arr)}};
  o.csv = [reports = std::move(reports)](std::ostream& os) { cli::reports_csv(os, reports); };
  return o;
}

Outcome cmd_moments(const RunConfig& c, const PrecisionContext& ctx) {
  const WeightSpec spec = make_spec(c, t_values(c).front());
  const MomentTable mt = build_moment_table(spec, c.count, ctx);
  static const char* origins[] = {"quadrature", "recursion", "symmetry"};
  json rows = json::array();
  for (int k = 0; k < mt.size(); ++k)
    rows.push_back({{"k", k}, {"m", num(mt.m[k])}, {"origin", origins[static_cast<int>(mt.origin[k])]}});
  Outcome o;
  o.result = {{"family", spec.name()}, {"t", num(spec.t())}, {"spot_check_error", num(mt.spot_check_error)},
              {"moments", std::move(rows)}};
  o.csv = [mt](std::ostream& os) {
    os << "k,m\n";
    for (int k = 0; k < mt.size(); ++k) os << k << ',' << num(mt.m[k]) << '\n';
  };
  return o;
}

Outcome cmd_recurrence(const RunConfig& c, const PrecisionContext& ctx) {
  const WeightSpec spec = make_spec(c, t_values(c).front());
  RecurrenceTable rt;
  if (c.method == "oracle") {
    rt = oracle_table(spec, c.n, ctx);
  } else {
    const MomentTable mt = build_moment_table(spec, 2 * c.n + 4, ctx);
    if (c.method == "hankel") {
      rt = recurrence_from_moments(mt, c.n, RecurrenceMethod::HankelRatio);
    } else if (c.method == "stieltjes") {
      rt = recurrence_from_moments(mt, c.n, RecurrenceMethod::Stieltjes);
    } else {
      throw Error(ErrorKind::ConfigError, "method must be oracle, hankel or stieltjes");
    }
    rt.certified_digits = estimate_certified_digits(rt, mt);
  }
  Outcome o;
  o.result = cli::to_json(rt);
  o.csv = [rt](std::ostream& os) { cli::table_csv(os, rt); };
  return o;
}

ResidualReport difference_report(const std::string& name, const RecurrenceTable& x, const RecurrenceTable& ref,
                                 int lo, int hi, const Real& tol) {
  ResidualReport r;
  r.identity = name;
  r.tolerance = tol;
  for (int n = lo; n <= hi; ++n) {
    Real d = mp::abs(x.u[n] - ref.u[n]);
    if (n < static_cast<int>(x.b.size()) && n < static_cast<int>(ref.b.size()))
      d = std::max(d, mp::abs(x.b[n] - ref.b[n]));
    r.entries.push_back({n, ref.t, d, {}});
  }
  return r;
}

Outcome cmd_lf_check(const RunConfig& c, const PrecisionContext& ctx) {
  std::vector<ResidualReport> reports;
  const Real agree = ctx.pow10(ctx.digits() / 10);
  for (const Real& t : t_values(c)) {
    const WeightSpec spec = make_spec(c, t);
    const StringSystem sys = StringSystem::for_weight(spec);
    const bool maxwell = std::holds_alternative<Maxwell>(spec.family());
    const RecurrenceTable direct = oracle_table(spec, maxwell ? c.n / 2 + 2 : c.n + 1, ctx);
    RecurrenceTable rt = maxwell ? unfold_maxwell(direct) : direct;
    auto res = residual_check(sys, rt, ctx);
    res.identity += " t=" + to_decimal(t, 6);
    reports.push_back(std::move(res));
    const int top = std::min(c.n, rt.N);
    const RecurrenceTable prop = propagate(sys, seeds_from(sys, rt), top, ctx);
    reports.push_back(difference_report("propagation-vs-oracle t=" + to_decimal(t, 6), prop, rt, 1, top, agree));
    if (sys.kind == StringSystem::Kind::Quartic || sys.kind == StringSystem::Kind::Folded) {
      LewQuarlesOptions opt;
      if (sys.kind == StringSystem::Kind::Folded) opt.rho = sys.rho;
      const RecurrenceTable lq = lew_quarles(t, top, ctx, opt);
      reports.push_back(difference_report("lew-quarles-vs-oracle t=" + to_decimal(t, 6), lq, rt, 1, top, agree));
    }
  }
  return reports_outcome(std::move(reports));
}

Outcome cmd_lew_quarles(const RunConfig& c, const PrecisionContext& ctx) {
  LewQuarlesOptions opt;
  if (c.folded) opt.rho = parse_real(c.rho);
  const RecurrenceTable rt = lew_quarles(t_values(c).front(), c.n, ctx, opt);
  Outcome o;
  o.result = cli::to_json(rt);
  o.csv = [rt](std::ostream& os) { cli::table_csv(os, rt); };
  return o;
}

Outcome cmd_theta_omega(const RunConfig& c, const PrecisionContext& ctx) {
  const WeightSpec spec = make_spec(c, t_values(c).front());
  const int N = c.n + 1;
  const MomentTable mt = build_moment_table(spec, 2 * N + 6, ctx);
  const RecurrenceTable rt = oracle_recurrence(mt, N + 1);
  const PolySystem ps = build_poly_system(rt, mt, N, 3);
  const ThetaOmegaSequence tos = build_theta_omega(spec, mt, rt, ps, N);
  Outcome o = reports_outcome(identity_suite(tos, ps, rt, c.n, ctx));
  json polys = json::array();
  for (int n = 0; n <= c.n; ++n) {
    json th = json::array(), om = json::array();
    for (const auto& x : tos.theta[n].coeffs()) th.push_back(num(x));
    for (const auto& x : tos.omega[n].coeffs()) om.push_back(num(x));
    polys.push_back({{"n", n}, {"theta", std::move(th)}, {"omega", std::move(om)}});
  }
  o.result["polynomials"] = std::move(polys);
  return o;
}

int grid_size(const RunConfig& c) {
  if (c.family == "maxwell") return c.n / 2 + 3;
  return c.n + 3;
}

Outcome cmd_fd(const RunConfig& c, const PrecisionContext& ctx) {
  const std::vector<Real> ts = t_values(c);
  const TGrid grid = make_tgrid(make_spec(c, ts.front()), ts, h_ladder(c), grid_size(c), ctx);
  if (c.command == "toda-check") return reports_outcome(toda_check(grid, c.n));
  if (c.command == "backlund-check") return reports_outcome(backlund_check(grid, c.n_lo, c.n));
  if (c.family == "genjacobi") return reports_outcome(painleve6_check(grid, c.n));
  return reports_outcome(painleve4_check(grid, c.n));
}

Outcome cmd_flow(const RunConfig& c, const PrecisionContext& ctx) {
  const Real t0 = t_values(c).front();
  const Real t1 = parse_real(c.t1);
  Outcome o;
  if (!c.nu.empty()) {
    const FractionalFlowResult r = fractional_flow(parse_real(c.nu), parse_real(c.seed_t), t1, ctx);
    o.result = {{"nu", c.nu},
                {"seed_t", c.seed_t},
                {"t", num(t1)},
                {"a_squared", num(r.u)},
                {"seed_a_squared", num(r.seed_u)},
                {"seed_truncation", num(r.seed_residual)},
                {"series_terms", r.terms},
                {"steps", r.steps}};
    o.csv = [r, t1](std::ostream& os) { os << "t,a_squared\n" << num(t1) << ',' << num(r.u) << '\n'; };
    return o;
  }
  const auto [lo, hi] = parse_range(c.window);
  const FlowWindow win{lo, hi, c.family == "quartic" ? c.buffer : 0};
  const WeightSpec spec = make_spec(c, t0);
  const RecurrenceTable seed = oracle_table(spec, hi + win.buffer, ctx);
  const RecurrenceTable end = flow_integrate(spec, seed, t1, win, ctx);
  const RecurrenceTable ref = oracle_table(spec.with_t(t1), hi, ctx);
  o = reports_outcome({difference_report("flow-vs-oracle", end, ref, lo, hi, ctx.pow10(ctx.digits() / 4))});
  o.result["table"] = cli::to_json(end);
  return o;
}

std::vector<Real> linspace(const Real& a, const Real& b, int steps) {
  if (steps < 1) throw Error(ErrorKind::ConfigError, "steps must be positive");
  std::vector<Real> v;
  for (int i = 0; i < steps; ++i) v.push_back(steps == 1 ? a : a + (b - a) * i / (steps - 1));
  return v;
}

Outcome cmd_figure7(const RunConfig& c, const PrecisionContext& ctx) {
  const auto [nlo, nhi] = parse_range(c.n_range);
  std::vector<int> ns;
  for (int n = nlo; n <= nhi; ++n) ns.push_back(n);
  const auto [a, b] = parse_real_range(c.scaled_t);
  const Figure7Data d = figure7_dataset(ns, linspace(a, b, c.steps), ctx);
  namespace fs = std::filesystem;
  fs::create_directories(c.out_dir);
  const fs::path samples = fs::path(c.out_dir) / "samples.csv";
  const fs::path envelope = fs::path(c.out_dir) / "envelope.csv";
  {
    std::ofstream os(samples);
    os << "n,scaled_t,scaled_a\n";
    for (const auto& s : d.samples) os << s.n << ',' << num(s.scaled_t) << ',' << num(s.scaled_a) << '\n';
    if (!os) throw std::ios_base::failure("cannot write " + samples.string());
  }
  {
    std::ofstream os(envelope);
    os << "scaled_t,branch,scaled_a\n";
    for (const auto& e : d.envelope) os << num(e.scaled_t) << ',' << e.branch << ',' << num(e.scaled_a) << '\n';
    if (!os) throw std::ios_base::failure("cannot write " + envelope.string());
  }
  Outcome o;
  o.result = {{"samples", samples.string()},
              {"envelope", envelope.string()},
              {"sample_rows", d.samples.size()},
              {"envelope_rows", d.envelope.size()}};
  return o;
}

Outcome dispatch(const RunConfig& c, const PrecisionContext& ctx) {
  if (c.command == "moments") return cmd_moments(c, ctx);
  if (c.command == "recurrence") return cmd_recurrence(c, ctx);
  if (c.command == "lf-check") return cmd_lf_check(c, ctx);
  if (c.command == "lew-quarles") return cmd_lew_quarles(c, ctx);
  if (c.command == "theta-omega") return cmd_theta_omega(c, ctx);
  if (c.command == "toda-check" || c.command == "painleve-check" || c.command == "backlund-check")
    return cmd_fd(c, ctx);
  if (c.command == "flow") return cmd_flow(c, ctx);
  if (c.command == "figure7") return cmd_figure7(c, ctx);
  throw Error(ErrorKind::ConfigError, "unknown command " + c.command);
}

/// SEMIORTHO_DIGITS if set, else 60 + 4 n_max (Hankel ratios lose O(n) digits).
int default_digits(int n_max) {
  if (const char* env = std::getenv("SEMIORTHO_DIGITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
    }
  }
  return 60 + 4 * std::max(n_max, 0);
}

void add_family(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "quartic, cubic, maxwell, sextic or genjacobi")->capture_default_str();
  sub->add_option("--rho", c.rho, "Maxwell exponent")->capture_default_str();
  sub->add_option("--alpha", c.alpha, "generalized Jacobi exponent at 1")->capture_default_str();
  sub->add_option("--beta", c.beta, "generalized Jacobi exponent at 0")->capture_default_str();
  sub->add_option("--gamma", c.gamma, "generalized Jacobi exponent at t")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig c;
  CLI::App app{"Semi-classical orthogonal polynomials: recurrences, string equations and Painleve checks"};
  app.require_subcommand(1);
  app.fallthrough();
  auto* digits_opt =
      app.add_option("--digits", c.digits, "working precision (default: SEMIORTHO_DIGITS or 60 + 4 n)");
  app.add_option("--guard", c.guard, "guard digits")->capture_default_str();
  app.add_option("-o,--output", c.output, "write the report here instead of stdout");
  app.add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* moments = app.add_subcommand("moments", "normalized moments m_0..m_{count-1}");
  add_family(moments, c);
  moments->add_option("--t", c.t)->expected(1);
  moments->add_option("--count", c.count)->capture_default_str();

  auto* recurrence = app.add_subcommand("recurrence", "recurrence coefficients from the moment oracle");
  add_family(recurrence, c);
  recurrence->add_option("--t", c.t)->expected(1);
  recurrence->add_option("--n", c.n, "largest index")->capture_default_str();
  recurrence->add_option("--method", c.method, "oracle, hankel or stieltjes")->capture_default_str();

  auto* lf = app.add_subcommand("lf-check", "string equations on oracle data, propagation, Lew-Quarles");
  add_family(lf, c);
  lf->add_option("--t", c.t)->expected(1, -1);
  lf->add_option("--n", c.n)->capture_default_str();

  auto* lq = app.add_subcommand("lew-quarles", "positive solution of the quartic string equation");
  lq->add_option("--t", c.t)->expected(1);
  lq->add_option("--n", c.n)->capture_default_str();
  lq->add_option("--rho", c.rho, "folded Maxwell variant with this exponent")->capture_default_str();
  lq->add_flag("--folded", c.folded, "use the folded equation with --rho");

  auto* to = app.add_subcommand("theta-omega", "Theta_n, Omega_n and their identities");
  add_family(to, c);
  to->add_option("--t", c.t)->expected(1);
  to->add_option("--n", c.n, "identities checked for n <= this")->capture_default_str();

  for (auto [name, what] : {std::pair{"toda-check", "Toda-type t-flows by finite differences"},
                            std::pair{"painleve-check", "Painleve IV / VI equations by finite differences"},
                            std::pair{"backlund-check", "Backlund shift n -> n+-1 of the quartic"}}) {
    auto* fd = app.add_subcommand(name, what);
    fd->set_help_flag("--help");  // frees -h for the step option
    add_family(fd, c);
    fd->add_option("--t", c.t)->expected(1, -1);
    fd->add_option("--n", c.n, "largest n checked")->capture_default_str();
    fd->add_option("--h", c.h, "one step (ladder h, h/2, h/4) or the full ladder")->expected(1, -1);
    if (std::string(name) == "backlund-check") fd->add_option("--n-lo", c.n_lo)->capture_default_str();
  }

  auto* flow = app.add_subcommand("flow", "integrate the t-flow from t to t1");
  add_family(flow, c);
  flow->add_option("--t", c.t, "start")->expected(1);
  flow->add_option("--t1", c.t1, "end")->capture_default_str();
  flow->add_option("--window", c.window, "indices lo..hi")->capture_default_str();
  flow->add_option("--buffer", c.buffer, "quartic closure buffer")->capture_default_str();
  flow->add_option("--nu", c.nu, "fractional index: integrate the P_IV form from --seed-t down to --t1");
  flow->add_option("--seed-t", c.seed_t)->capture_default_str();

  auto* fig = app.add_subcommand("figure7", "scaled Lew-Quarles coefficients and the envelope");
  fig->add_option("--n", c.n_range, "lo..hi")->capture_default_str();
  fig->add_option("--scaled-t", c.scaled_t, "a..b")->capture_default_str();
  fig->add_option("--steps", c.steps)->capture_default_str();
  fig->add_option("--out", c.out_dir, "directory for samples.csv and envelope.csv")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  c.command = app.get_subcommands().front()->get_name();
  if (digits_opt->count() == 0) c.digits = default_digits(c.n);
  if (c.command == "figure7") c.family = "quartic";

  try {
    const PrecisionContext ctx(c.digits, c.guard);
    ScopedPrecision scope(ctx);
    cli::set_output_digits(c.digits);
    Outcome out = dispatch(c, ctx);
    std::ostringstream text;
    if (c.format == "csv" && out.csv) {
      out.csv(text);
    } else {
      json doc{{"schema", 1}, {"config", c.to_json()}, {"pass", out.pass}, {"result", std::move(out.result)}};
      text << doc.dump(2) << '\n';
    }
    if (c.output.empty()) {
      std::cout << text.str();
    } else {
      std::ofstream os(c.output);
      os << text.str();
      if (!os) {
        std::cerr << "cannot write " << c.output << '\n';
        return kIoError;
      }
    }
    return out.pass ? 0 : kChecksFailed;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kErrorBase + static_cast<int>(e.kind());
  } catch (const std::ios_base::failure& e) {
    std::cerr << e.what() << '\n';
    return kIoError;
  }
}
