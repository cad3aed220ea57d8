#include "qbarrier_cli/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qbarrier/closed_form.hpp"
#include "qbarrier/critical_energy.hpp"
#include "qbarrier/evaluate.hpp"
#include "qbarrier/linear_solver.hpp"
#include "qbarrier/ode_oracle.hpp"
#include "qbarrier/parallel.hpp"
#include "qbarrier/resonance.hpp"
#include "qbarrier/version.hpp"
#include "qbarrier_cli/output.hpp"
#include "qbarrier_cli/verify.hpp"

namespace qbarrier::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUnitCircleTolerance = 1e-9;
constexpr std::size_t kMaxSweepPoints = 20'000'000;

// Raised inside a command to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void invalid(const std::string& msg) { throw Exit{kExitInvalid, msg}; }

struct Globals {
  std::string format = "csv";
  std::string out_path;
  std::uint64_t seed = 42;
};

// (Vc, Vq) within 1e-9 of the unit circle, projected onto it.
Potential make_potential(double vc, std::optional<double> vq, double theta, std::string label) {
  if (!std::isfinite(vc) || !std::isfinite(theta)) invalid("potential: non-finite value");
  if (!vq) {
    if (std::abs(vc) > 1.0 + kUnitCircleTolerance) invalid("potential: |Vc| must not exceed 1");
    vq = std::sqrt(std::max(0.0, 1.0 - vc * vc));
  }
  if (!std::isfinite(*vq) || *vq < 0.0) invalid("potential: Vq must be non-negative");
  const double r = std::hypot(vc, *vq);
  if (std::abs(r - 1.0) > kUnitCircleTolerance) {
    invalid("potential: Vc^2 + Vq^2 must equal 1 (got " + format_number(r * r) + ")");
  }
  if (label.empty()) label = "(" + format_number(vc) + "," + format_number(*vq) + ")";
  return {vc / r, *vq / r, theta, std::move(label)};
}

// "vc,vq" or "vc,vq,theta"
Potential parse_potential(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      invalid("potential '" + text + "': expected vc,vq[,theta]");
    }
  }
  if (v.size() < 2 || v.size() > 3) invalid("potential '" + text + "': expected vc,vq[,theta]");
  return make_potential(v[0], v[1], v.size() == 3 ? v[2] : 0.0, "");
}

std::vector<Potential> potentials_from(const std::string& set, const std::vector<std::string>& custom) {
  std::vector<Potential> out;
  if (!custom.empty()) {
    for (const auto& c : custom) out.push_back(parse_potential(c));
    return out;
  }
  if (set != "table") invalid("--potentials: only 'table' is known");
  return table_potentials();
}

Format format_of(const Globals& g) { return g.format == "json" ? Format::json : Format::csv; }

void add_complex(std::vector<Cell>& row, cplx z) {
  row.emplace_back(z.real());
  row.emplace_back(z.imag());
}

// Holds --lambda / --lambda-pi for a subcommand.
struct WidthOption {
  double lambda = 0.0;
  double lambda_pi = 0.0;
  CLI::Option* plain = nullptr;
  CLI::Option* in_pi = nullptr;

  void attach(CLI::App* app, const std::string& what) {
    plain = app->add_option("--lambda", lambda, "reduced width " + what);
    in_pi = app->add_option("--lambda-pi", lambda_pi, "reduced width in units of pi");
    plain->excludes(in_pi);
  }
  bool given() const { return plain->count() + in_pi->count() > 0; }
  double value(double fallback) const {
    if (plain->count()) return lambda;
    if (in_pi->count()) return lambda_pi * kPi;
    return fallback;
  }
};

// ---------------------------------------------------------------- point

struct PointArgs {
  double vc = 1.0;
  double vq = 0.0;
  double theta = 0.0;
  double eps = 0.0;
  WidthOption width;
  bool physical = false;
  BarrierSpec spec;
  bool oracle = false;
  int steps = kDefaultOracleSteps;
  CLI::Option* vq_opt = nullptr;
  CLI::Option* eps_opt = nullptr;
  CLI::Option* vc_opt = nullptr;
  CLI::Option* theta_opt = nullptr;
};

std::string degenerate_hint(double eps, const AdimensionalBarrier& b) {
  if (is_critical_quaternionic(eps, b)) {
    return "; eps = 1 with (Vc, Vq) = (0, 1) has an exact solution: run `qbarrier critical --case q --lambda " +
           format_number(b.lambda) + "`";
  }
  if (is_critical_complex(eps, b)) {
    return "; eps = 1 with (Vc, Vq) = (1, 0) has an exact solution: run `qbarrier critical --case c --lambda " +
           format_number(b.lambda) + "`";
  }
  return "; rerun with --oracle to integrate the equations directly";
}

Table cmd_point(const PointArgs& a, const Globals&) {
  AdimensionalBarrier b;
  double eps = 0.0;
  if (a.physical) {
    if (a.vc_opt->count() || a.vq_opt->count() || a.eps_opt->count() || a.width.given() || a.theta_opt->count()) {
      invalid("--physical takes --v1 --v2 --v3 --length --mass --hbar --energy only");
    }
    try {
      const auto reduced = adimensionalize(a.spec);
      b = reduced.barrier;
      eps = reduced.eps;
    } catch (const InvalidParameter& e) {
      invalid(e.what());
    }
  } else {
    if (!a.eps_opt->count()) invalid("point: --eps is required");
    if (!a.width.given()) invalid("point: --lambda or --lambda-pi is required");
    const auto pot = make_potential(a.vc, a.vq_opt->count() ? std::optional(a.vq) : std::nullopt, a.theta, "");
    b = pot.barrier(a.width.value(0.0));
    eps = a.eps;
  }
  if (!(eps > 0.0) || !std::isfinite(eps)) invalid("point: eps must be positive");
  if (!(b.lambda >= 0.0) || !std::isfinite(b.lambda)) invalid("point: lambda must be non-negative");

  cplx t, r, rt, tt;
  std::string method;
  if (a.oracle) {
    OracleOptions opts;
    opts.steps = a.steps;
    OracleResult o;
    try {
      o = oracle_amplitudes(eps, b, opts);
    } catch (const InvalidParameter& e) {
      invalid(e.what());
    }
    t = o.t;
    r = o.r;
    rt = o.rt;
    tt = o.tt;
    method = to_string(Method::ode_oracle);
  } else {
    try {
      if (is_critical_complex(eps, b) || is_critical_quaternionic(eps, b)) {
        throw DegenerateParameters("critical energy eps = 1");
      }
      const auto amps = solve(eps, b);
      const bool closed = closed_form_reliable(eps, b);
      t = closed ? transmission(eps, b).t : amps.t;
      r = amps.r;
      rt = amps.rt;
      tt = amps.tt;
      method = to_string(closed ? Method::closed_form : Method::linear_solver);
    } catch (const DegenerateParameters& e) {
      throw Exit{kExitDegenerate, std::string("degenerate point: ") + e.what() + degenerate_hint(eps, b)};
    } catch (const ZeroAlphaMinus& e) {
      throw Exit{kExitDegenerate, std::string("degenerate point: ") + e.what() + degenerate_hint(eps, b)};
    } catch (const IllConditioned& e) {
      throw Exit{kExitDegenerate, std::string("degenerate point: ") + e.what() + degenerate_hint(eps, b)};
    }
  }

  const auto res = make_transmission_result(t);
  Table table;
  table.add_meta("command", "point");
  table.columns = {"eps",  "vc",    "vq",    "theta", "lambda", "method", "re_t",  "im_t",  "prob",
                   "phase", "re_r", "im_r", "re_rt", "im_rt", "re_tt", "im_tt", "balance"};
  std::vector<Cell> row{eps, b.vc, b.vq, b.theta, b.lambda, method};
  add_complex(row, t);
  row.emplace_back(res.prob);
  row.emplace_back(res.phase);
  add_complex(row, r);
  add_complex(row, rt);
  add_complex(row, tt);
  row.emplace_back(1.0 - std::norm(r) - std::norm(t));
  table.rows.push_back(std::move(row));
  return table;
}

// ---------------------------------------------------------------- sweep

struct SweepArgs {
  std::string mode;
  double fixed = 0.0;
  double fixed_pi = 0.0;
  CLI::Option* fixed_opt = nullptr;
  CLI::Option* fixed_pi_opt = nullptr;
  double start = 0.0;
  double stop = 0.0;
  double step = 0.0;
  bool pi_units = false;
  std::string potential_set = "table";
  std::vector<std::string> potentials;
};

Table cmd_sweep(const SweepArgs& a, const Globals&) {
  const bool energy = a.mode == "energy";
  if (!a.fixed_opt->count() && !a.fixed_pi_opt->count()) invalid("sweep: --fixed or --fixed-pi is required");
  const double fixed = a.fixed_opt->count() ? a.fixed : a.fixed_pi * kPi;
  if (!energy && a.fixed_pi_opt->count()) invalid("sweep: --fixed-pi applies to the width of an energy sweep");
  if (energy && !(fixed >= 0.0)) invalid("sweep: fixed width must be non-negative");
  if (!energy && !(fixed > 0.0)) invalid("sweep: fixed energy must be positive");
  if (!std::isfinite(fixed)) invalid("sweep: fixed value must be finite");
  if (!(a.step > 0.0) || !std::isfinite(a.step)) invalid("sweep: step must be positive");
  if (!std::isfinite(a.start) || !std::isfinite(a.stop)) invalid("sweep: range must be finite");
  if (a.start > a.stop) invalid("sweep: start must not exceed stop");
  if (a.start < 0.0) invalid("sweep: range must be non-negative");
  if (energy && a.pi_units) invalid("sweep: --pi-units applies to width sweeps");
  const double unit = a.pi_units ? kPi : 1.0;

  const double span = (a.stop - a.start) / a.step;
  if (span > static_cast<double>(kMaxSweepPoints)) invalid("sweep: too many grid points");
  const auto count = static_cast<std::size_t>(std::floor(span + 1e-9));
  std::vector<double> xs;
  xs.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) xs.push_back(a.start + static_cast<double>(k) * a.step);

  const auto pots = potentials_from(a.potential_set, a.potentials);

  Table table;
  table.add_meta("command", "sweep");
  table.add_meta("mode", a.mode);
  table.add_meta(energy ? "lambda" : "eps", format_number(fixed));
  table.add_meta("start", format_number(a.start));
  table.add_meta("stop", format_number(a.stop));
  table.add_meta("step", format_number(a.step));
  table.add_meta("variable_unit", a.pi_units ? "pi" : "1");
  table.columns = {"variable", "vc", "vq", "prob", "re_t", "im_t", "phase"};

  for (const auto& pot : pots) {
    const auto results = parallel_map<TransmissionResult>(xs.size(), [&](std::size_t k) {
      const double x = xs[k];
      try {
        if (energy) return evaluate_transmission(x, pot.barrier(fixed)).result;
        return evaluate_transmission(fixed, pot.barrier(x * unit)).result;
      } catch (const std::exception& e) {
        throw Exit{kExitDegenerate, "sweep: cannot evaluate " + a.mode + " = " + format_number(x) + " for " +
                                        pot.label + ": " + e.what()};
      }
    });
    for (std::size_t k = 0; k < xs.size(); ++k) {
      const auto& r = results[k];
      table.rows.push_back({xs[k], pot.vc, pot.vq, r.prob, r.t.real(), r.t.imag(), r.phase});
    }
  }
  return table;
}

// ---------------------------------------------------------------- resonances

struct ResonanceArgs {
  std::string mode = "energy";
  WidthOption width;
  double eps = std::numbers::sqrt2;
  std::string potential_set = "table";
  std::vector<std::string> potentials;
  double step = 1e-3;
  double tolerance = 1e-6;
};

Table cmd_resonances(const ResonanceArgs& a, const Globals&, std::ostream& err) {
  const bool energy = a.mode == "energy";
  const auto pots = potentials_from(a.potential_set, a.potentials);
  ScanOptions opts;
  opts.step = a.step;
  opts.tolerance = a.tolerance;
  if (!(opts.step > 0.0) || !(opts.tolerance > 0.0)) invalid("resonances: step and tolerance must be positive");

  Table table;
  table.add_meta("command", "resonances");
  table.add_meta("mode", a.mode);
  table.columns = {"potential", "vc", "vq", "x1", "x2", "dx1", "x3", "dx2"};
  std::vector<ResonanceRow> rows;
  std::array<double, 5> closed{};
  try {
    if (energy) {
      const double lambda = a.width.value(3.0 * kPi);
      if (!(lambda > 0.0)) invalid("resonances: lambda must be positive");
      table.add_meta("lambda", format_number(lambda));
      table.add_meta("unit", "eps");
      const auto c = complex_resonance_energies(lambda, 3);
      closed = {c[0].eps, c[1].eps, c[0].delta_eps, c[2].eps, c[1].delta_eps};
      rows = energy_resonance_table(lambda, pots, opts);
    } else {
      if (!(a.eps > 1.0)) invalid("resonances: eps must exceed 1 for a width scan");
      table.add_meta("eps", format_number(a.eps));
      table.add_meta("unit", "pi");
      const auto c = complex_resonance_widths(a.eps, 4);
      closed = {c[1].lambda / kPi, c[2].lambda / kPi, c[1].delta_lambda / kPi, c[3].lambda / kPi,
                c[2].delta_lambda / kPi};
      rows = width_resonance_table(a.eps, pots, opts);
    }
  } catch (const InvalidParameter& e) {
    invalid(e.what());
  }

  std::vector<Cell> first{std::string("complex_closed_form"), 1.0, 0.0};
  for (double v : closed) first.emplace_back(v);
  table.rows.push_back(std::move(first));
  for (const auto& r : rows) {
    std::vector<Cell> row{r.potential.label, r.potential.vc, r.potential.vq};
    for (double v : r.values) row.emplace_back(r.complete ? v : std::nan(""));
    if (!r.complete) err << "warning: fewer than three peaks found for " << r.potential.label << '\n';
    table.rows.push_back(std::move(row));
  }
  return table;
}

// ---------------------------------------------------------------- critical

struct CriticalArgs {
  std::string which;
  WidthOption width;
  double theta = 0.0;
};

Table cmd_critical(const CriticalArgs& a, const Globals&, std::ostream& err) {
  if (!a.width.given()) invalid("critical: --lambda or --lambda-pi is required");
  const double lambda = a.width.value(0.0);
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) invalid("critical: lambda must be non-negative");
  const bool quaternionic = a.which == "q" || a.which == "quaternionic";
  const auto which = quaternionic ? CriticalCase::pure_quaternionic : CriticalCase::complex_potential;
  const auto amps = quaternionic ? critical_quaternionic(lambda, a.theta) : critical_complex(lambda);
  const auto thin = asymptotic_moduli(lambda, SeriesRegime::thin, which);
  const auto thick = asymptotic_moduli(lambda, SeriesRegime::thick, which);
  if (thin.outside_regime && thick.outside_regime) {
    err << "warning: lambda = " << format_number(lambda)
        << " lies outside both series regimes (thin < 0.3, thick > 10)\n";
  }

  Table table;
  table.add_meta("command", "critical");
  table.columns = {"case",  "lambda", "theta",  "re_r",   "im_r",   "re_t",           "im_t",
                   "re_rt", "im_rt",  "re_tt",  "im_tt",  "abs_r",  "abs_t",          "balance",
                   "thin_r", "thin_t", "thin_in_regime", "thick_r", "thick_t", "thick_in_regime"};
  std::vector<Cell> row{std::string(quaternionic ? "pure_quaternionic" : "complex"), lambda,
                        quaternionic ? a.theta : 0.0};
  add_complex(row, amps.r);
  add_complex(row, amps.t);
  add_complex(row, amps.rt);
  add_complex(row, amps.tt);
  row.emplace_back(std::abs(amps.r));
  row.emplace_back(std::abs(amps.t));
  row.emplace_back(1.0 - std::norm(amps.r) - std::norm(amps.t));
  row.emplace_back(thin.r);
  row.emplace_back(thin.t);
  row.emplace_back(static_cast<long long>(!thin.outside_regime));
  row.emplace_back(thick.r);
  row.emplace_back(thick.t);
  row.emplace_back(static_cast<long long>(!thick.outside_regime));
  table.rows.push_back(std::move(row));
  return table;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::size_t samples = 500;
  std::size_t oracle_samples = 500;
};

Table cmd_verify(const VerifyArgs& a, const Globals& g, int& failures) {
  VerifyOptions opts;
  opts.samples = a.samples;
  opts.oracle_samples = a.oracle_samples;
  opts.seed = g.seed;
  if (opts.samples == 0) invalid("verify: --samples must be positive");
  const auto checks = run_verification(opts);

  Table table;
  table.add_meta("command", "verify");
  table.add_meta("seed", std::to_string(g.seed));
  table.add_meta("samples", std::to_string(a.samples));
  table.columns = {"check", "status", "worst", "tolerance", "samples", "detail"};
  failures = 0;
  for (const auto& c : checks) {
    if (!c.passed) ++failures;
    table.rows.push_back({c.name, std::string(c.passed ? "PASS" : "FAIL"), c.worst, c.tolerance,
                          static_cast<long long>(c.samples), c.detail});
  }
  return table;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Transmission through a one-dimensional quaternionic square barrier", "qbarrier"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("qbarrier ") + kVersion);

  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", g.out_path, "write output to PATH instead of stdout");
  app.add_option("--seed", g.seed, "seed for randomized grids");

  PointArgs pa;
  auto* point = app.add_subcommand("point", "evaluate T, R, R~, T~ at one parameter point");
  pa.vc_opt = point->add_option("--vc", pa.vc, "complex potential part Vc");
  pa.vq_opt = point->add_option("--vq", pa.vq, "quaternionic part Vq (default sqrt(1 - Vc^2))");
  pa.theta_opt = point->add_option("--theta", pa.theta, "quaternionic phase theta");
  pa.eps_opt = point->add_option("--eps", pa.eps, "reduced energy sqrt(E / V0)");
  pa.width.attach(point, "sqrt(2 m V0) L / hbar");
  point->add_flag("--physical", pa.physical, "take physical inputs (--v1 ... --energy)");
  point->add_option("--v1", pa.spec.v1);
  point->add_option("--v2", pa.spec.v2);
  point->add_option("--v3", pa.spec.v3);
  point->add_option("--length", pa.spec.length);
  point->add_option("--mass", pa.spec.mass)->capture_default_str();
  point->add_option("--hbar", pa.spec.hbar)->capture_default_str();
  point->add_option("--energy", pa.spec.energy);
  point->add_flag("--oracle", pa.oracle, "integrate the equations instead of using the closed formula");
  point->add_option("--steps", pa.steps, "oracle RK4 steps")->capture_default_str();

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "|T|^2 along an energy or width grid for several potentials");
  sweep->add_option("--mode", sa.mode, "energy or width")->required()->check(CLI::IsMember({"energy", "width"}));
  sa.fixed_opt = sweep->add_option("--fixed", sa.fixed, "width (energy mode) or eps (width mode)");
  sa.fixed_pi_opt = sweep->add_option("--fixed-pi", sa.fixed_pi, "fixed width in units of pi");
  sa.fixed_opt->excludes(sa.fixed_pi_opt);
  sweep->add_option("--start", sa.start, "grid starts after this value")->required();
  sweep->add_option("--stop", sa.stop, "last grid value")->required();
  sweep->add_option("--step", sa.step, "grid spacing")->required();
  sweep->add_flag("--pi-units", sa.pi_units, "width range and output in units of pi");
  sweep->add_option("--potentials", sa.potential_set, "named potential set")->capture_default_str();
  sweep->add_option("--potential", sa.potentials, "vc,vq[,theta]; repeatable, replaces the set");

  ResonanceArgs ra;
  auto* res = app.add_subcommand("resonances", "resonance tables from peak search");
  res->add_option("--mode", ra.mode, "energy or width")->capture_default_str()->check(
      CLI::IsMember({"energy", "width"}));
  ra.width.attach(res, "for the energy scan (default 3 pi)");
  res->add_option("--eps", ra.eps, "energy for the width scan")->capture_default_str();
  res->add_option("--potentials", ra.potential_set, "named potential set")->capture_default_str();
  res->add_option("--potential", ra.potentials, "vc,vq[,theta]; repeatable, replaces the set");
  res->add_option("--step", ra.step, "coarse grid step")->capture_default_str();
  res->add_option("--tolerance", ra.tolerance, "golden-section tolerance")->capture_default_str();

  CriticalArgs ca;
  auto* crit = app.add_subcommand("critical", "exact amplitudes at eps = 1 and their series");
  crit->add_option("--case", ca.which, "c (complex) or q (pure quaternionic)")->required()->check(
      CLI::IsMember({"c", "q", "complex", "quaternionic"}));
  ca.width.attach(crit, "");
  crit->add_option("--theta", ca.theta, "quaternionic phase")->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "cross-check the independent computations on a random grid");
  verify->add_option("--samples", va.samples, "random grid points")->capture_default_str();
  verify->add_option("--oracle-samples", va.oracle_samples, "points also checked against the oracle")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  std::ofstream file;
  if (!g.out_path.empty()) {
    file.open(g.out_path, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!file) {
      err << "error: cannot write " << g.out_path << '\n';
      return kExitUnwritable;
    }
  }
  std::ostream& sink = g.out_path.empty() ? out : file;

  int code = kExitOk;
  try {
    Table table;
    if (point->parsed()) {
      table = cmd_point(pa, g);
    } else if (sweep->parsed()) {
      table = cmd_sweep(sa, g);
    } else if (res->parsed()) {
      table = cmd_resonances(ra, g, err);
    } else if (crit->parsed()) {
      table = cmd_critical(ca, g, err);
    } else {
      int failures = 0;
      table = cmd_verify(va, g, failures);
      code = std::min(failures, kExitMaxFailures);
    }
    write_table(table, format_of(g), sink);
  } catch (const Exit& e) {
    err << "error: " << e.message << '\n';
    return e.code;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const DegenerateParameters& e) {
    err << "error: " << e.what() << '\n';
    return kExitDegenerate;
  }
  sink.flush();
  if (!sink) {
    err << "error: failed writing output\n";
    return kExitUnwritable;
  }
  return code;
}

}  // namespace qbarrier::cli
