/* Copyright 2026 The rieszpol Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rpl/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "rpl/constants.hpp"
#include "rpl/domain.hpp"
#include "rpl/energy.hpp"
#include "rpl/error.hpp"
#include "rpl/experiments.hpp"
#include "rpl/polarization.hpp"
#include "rpl/report.hpp"

namespace rpl::cli {

namespace {

constexpr double kDefaultPolarizeTol = 1e-9;

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names = {
      "wiener", "tau",   "beta",   "sphere-area", "gamma",   "zeta",           "epstein",           "energy-constant",
      "bound",  "bounds", "chebyshev", "sigma",   "cap",     "annulus",        "equally-spaced",    "discrete-optimum"};
  return names;
}

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_real(const std::string& flag, const std::string& text) {
  const char* b = text.c_str();
  char* e = nullptr;
  errno = 0;
  const double v = std::strtod(b, &e);
  if (text.empty() || *e != '\0' || errno == ERANGE || !std::isfinite(v)) {
    throw UsageError(flag + ": expected a finite number, got '" + text + "'");
  }
  return v;
}

// Integers may be written as 1000000 or 1e6.
long parse_count(const std::string& what, const std::string& text) {
  const double v = parse_real(what, text);
  if (v != std::floor(v) || std::abs(v) > 1e15) throw UsageError(what + ": expected an integer, got '" + text + "'");
  return static_cast<long>(v);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

OutputFormat format_from(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "svg") return OutputFormat::svg;
  throw UsageError("--format: expected json, csv or svg, got '" + name + "'");
}

// Raw flag text as parsed by CLI11; converted and validated afterwards so
// error messages stay uniform.
struct RawFlags {
  std::string domain, d, p, n, seed, tol, restarts, format, out, input, method, suite, what, kind, x, r, delta, x_col,
      y_col;
  bool exact = false;
};

struct FlagDef {
  const char* name;
  std::string RawFlags::*field;
  const char* help;
  std::set<Command> commands;
};

const std::vector<FlagDef>& flag_defs() {
  using C = Command;
  const std::set<C> all = {C::polarize, C::energy, C::oracle, C::sweep, C::verify, C::explore, C::net};
  const std::set<C> solvers = {C::polarize, C::energy, C::sweep, C::explore};
  static const std::vector<FlagDef> defs = {
      {"--domain", &RawFlags::domain, "circle, sphere, ball or segment", {C::polarize, C::energy, C::oracle, C::sweep, C::explore, C::net}},
      {"--d", &RawFlags::d, "dimension of the sphere or ball", {C::polarize, C::energy, C::oracle, C::sweep, C::explore, C::net}},
      {"--p", &RawFlags::p, "Riesz exponent (> 0)", {C::polarize, C::energy, C::oracle, C::sweep, C::explore}},
      {"--n", &RawFlags::n, "point count or lo:hi[:lin|log[:count]]", {C::polarize, C::energy, C::oracle, C::sweep, C::explore}},
      {"--seed", &RawFlags::seed, "random seed", {C::polarize, C::energy, C::sweep, C::explore, C::net}},
      {"--tol", &RawFlags::tol, "relative certificate gap", {C::polarize, C::sweep, C::explore}},
      {"--restarts", &RawFlags::restarts, "multistart count", solvers},
      {"--format", &RawFlags::format, "json, csv or svg", all},
      {"--out", &RawFlags::out, "output path (default: standard output)", all},
      {"--input", &RawFlags::input, "configuration JSON file", {C::polarize, C::energy}},
      {"--method", &RawFlags::method, "exact or optimizer", {C::sweep}},
      {"--suite", &RawFlags::suite, "verification suite (default: all)", {C::verify}},
      {"--what", &RawFlags::what, "quantity to evaluate", {C::oracle}},
      {"--kind", &RawFlags::kind, "bound kind: lower or upper", {C::oracle}},
      {"--x", &RawFlags::x, "argument of gamma or zeta", {C::oracle}},
      {"--r", &RawFlags::r, "radius for cap or annulus", {C::oracle}},
      {"--delta", &RawFlags::delta, "net separation", {C::net}},
      {"--x-col", &RawFlags::x_col, "svg x column", {C::sweep, C::explore}},
      {"--y-col", &RawFlags::y_col, "svg y columns, comma separated (at most two)", {C::sweep, C::explore}},
  };
  return defs;
}

const char* command_help(Command c) {
  switch (c) {
    case Command::polarize: return "max-min polarization, or the certified minimum of a given configuration";
    case Command::energy: return "minimal Riesz energy, or the energy of a given configuration";
    case Command::oracle: return "closed-form constants and bounds";
    case Command::sweep: return "table of polarization values over a range of n";
    case Command::verify: return "run verification suites";
    case Command::explore: return "exploratory sweep against a conjectured limit";
    case Command::net: return "maximal delta-net";
  }
  return "";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

RunSpec convert(Command cmd, const RawFlags& f) {
  RunSpec s;
  s.command = cmd;
  if (!f.domain.empty()) {
    static const std::set<std::string> kinds = {"circle", "sphere", "ball", "segment"};
    require(kinds.count(f.domain) > 0, "--domain: expected circle, sphere, ball or segment, got '" + f.domain + "'");
    s.domain = f.domain;
  }
  if (!f.d.empty()) {
    const long d = parse_count("--d", f.d);
    require(d >= 1 && d < kMaxAmbientDim, "--d: dimension must be between 1 and " + std::to_string(kMaxAmbientDim - 1));
    s.d = static_cast<int>(d);
  }
  if (!f.p.empty()) {
    s.p = parse_real("--p", f.p);
    require(*s.p > 0.0, "--p: p must be positive");
  }
  if (!f.n.empty()) s.n = NSpec::parse(f.n);
  if (!f.seed.empty()) {
    const long seed = parse_count("--seed", f.seed);
    require(seed >= 0, "--seed: must be non-negative");
    s.seed = static_cast<std::uint64_t>(seed);
  }
  if (!f.tol.empty()) {
    s.tol = parse_real("--tol", f.tol);
    require(*s.tol > 0.0 && *s.tol < 1.0, "--tol: must lie in (0, 1)");
  }
  if (!f.restarts.empty()) {
    const long r = parse_count("--restarts", f.restarts);
    require(r >= 1 && r <= 100000, "--restarts: must be a positive integer");
    s.restarts = static_cast<int>(r);
  }
  if (!f.format.empty()) s.format = format_from(f.format);
  s.out = f.out;
  s.exact = f.exact;
  s.input = f.input;
  if (!f.method.empty()) {
    require(f.method == "exact" || f.method == "optimizer", "--method: expected exact or optimizer");
    s.method = f.method;
  }
  if (!f.suite.empty() && f.suite != "all") {
    const auto names = suite_names();
    require(std::find(names.begin(), names.end(), f.suite) != names.end(), "--suite: unknown suite '" + f.suite + "'");
    s.suite = f.suite;
  }
  if (!f.what.empty()) {
    const auto& names = oracle_names();
    require(std::find(names.begin(), names.end(), f.what) != names.end(), "--what: unknown quantity '" + f.what + "'");
    s.what = f.what;
  }
  if (!f.kind.empty()) {
    require(f.kind == "lower" || f.kind == "upper", "--kind: expected lower or upper");
    s.kind = f.kind;
  }
  if (!f.x.empty()) s.x = parse_real("--x", f.x);
  if (!f.r.empty()) {
    s.r = parse_real("--r", f.r);
    require(*s.r >= 0.0, "--r: radius must be non-negative");
  }
  if (!f.delta.empty()) {
    s.delta = parse_real("--delta", f.delta);
    require(*s.delta > 0.0, "--delta: must be positive");
  }
  s.x_col = f.x_col;
  if (!f.y_col.empty()) {
    s.y_cols = split(f.y_col, ',');
    require(s.y_cols.size() <= 2, "--y-col: at most two columns");
  }
  for (const std::string& c : s.y_cols) require(!c.empty(), "--y-col: empty column name");

  // Per-command requirements.
  const bool has_input = !s.input.empty();
  switch (cmd) {
    case Command::polarize:
    case Command::energy:
      require(s.p.has_value(), "--p is required");
      require(has_input || s.n.has_value(), "--n is required (or --input)");
      require(!(has_input && s.n.has_value()), "--n and --input are mutually exclusive");
      require(!s.n || s.n->scale == NSpec::Scale::single, "--n: " + to_string(cmd) + " takes a single n");
      require(!s.exact || s.domain == "circle", "--exact: only available on the circle");
      require(!(s.exact && has_input), "--exact and --input are mutually exclusive");
      require(s.format == OutputFormat::json, "--format: " + to_string(cmd) + " emits json only");
      break;
    case Command::sweep:
    case Command::explore:
      require(s.p.has_value(), "--p is required");
      require(s.n.has_value(), "--n is required");
      require(s.method != "exact" || s.domain == "circle", "--method: exact requires --domain circle");
      break;
    case Command::oracle:
      require(!s.what.empty(), "--what is required");
      require(s.format == OutputFormat::json, "--format: oracle emits json only");
      require(s.what != "bound" || !s.kind.empty(), "--kind is required for --what bound");
      break;
    case Command::verify:
      require(s.format == OutputFormat::json, "--format: verify emits json only");
      break;
    case Command::net:
      require(s.delta.has_value(), "--delta is required");
      require(s.format == OutputFormat::json, "--format: net emits json only");
      break;
  }
  if (s.format != OutputFormat::svg) {
    require(s.x_col.empty() && s.y_cols.empty(), "--x-col/--y-col: only used with --format svg");
  }
  return s;
}

Domain make_domain(const RunSpec& s) { return Domain::from_name(s.domain, s.resolved_dim()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw UsageError(std::string(flag) + " is required for this quantity");
  return *v;
}

long need_single_n(const RunSpec& s) {
  if (!s.n) throw UsageError("--n is required for this quantity");
  if (s.n->scale != NSpec::Scale::single) throw UsageError("--n: this quantity takes a single n");
  return s.n->lo;
}

double oracle_value(const RunSpec& s) {
  const std::string& w = s.what;
  if (w == "wiener") return wiener_constant(make_domain(s), need(s.p, "--p"));
  if (w == "tau") return tau(s.resolved_dim());
  if (w == "beta") return unit_ball_volume(s.resolved_dim());
  if (w == "sphere-area") return sphere_area(s.resolved_dim());
  if (w == "gamma") return gamma(need(s.x, "--x"));
  if (w == "zeta") return riemann_zeta(s.x ? *s.x : need(s.p, "--p"));
  if (w == "epstein") return epstein_zeta_hex(need(s.p, "--p"));
  if (w == "energy-constant") return energy_constant(s.resolved_dim(), need(s.p, "--p")).value;
  if (w == "bound") {
    const BoundKind k = s.kind == "upper" ? BoundKind::upper : BoundKind::lower;
    return polarization_bound(make_domain(s), need(s.p, "--p"), need_single_n(s), k).value;
  }
  if (w == "chebyshev") {
    const double p = need(s.p, "--p");
    if (p != std::floor(p)) throw UnsupportedExponentError("chebyshev_closed_form: p must be 2 or 4");
    return chebyshev_closed_form(need_single_n(s), static_cast<int>(p));
  }
  if (w == "sigma") return conjectured_sigma_p1(need(s.p, "--p"));
  if (w == "cap") return cap_measure(s.resolved_dim(), need(s.r, "--r"));
  if (w == "annulus") return annulus_potential_integral(s.resolved_dim(), need(s.p, "--p"), need(s.r, "--r"));
  if (w == "equally-spaced") return equally_spaced_value(static_cast<std::size_t>(need_single_n(s)), need(s.p, "--p"));
  if (w == "discrete-optimum") return discrete_optimum(static_cast<std::size_t>(need_single_n(s)), need(s.p, "--p"));
  throw UsageError("--what: unknown quantity '" + w + "'");
}

MaxMinOptions maxmin_options(const RunSpec& s) {
  MaxMinOptions o;
  o.seed = s.seed;
  if (s.restarts) o.restarts = *s.restarts;
  if (s.tol) o.certify_tol = *s.tol;
  return o;
}

std::string default_y(const SweepTable& t) {
  if (!t.reference_column.empty()) return t.reference_column;
  const double d = t.domain.dim();
  return t.p > d ? "norm_pow" : t.p == d ? "norm_nlogn" : "norm_n";
}

std::string emit_table(const RunSpec& s, const SweepTable& t) {
  switch (s.format) {
    case OutputFormat::json: return report::to_json(t);
    case OutputFormat::csv: return report::to_csv(t);
    case OutputFormat::svg: {
      const std::vector<std::string> ys = s.y_cols.empty() ? std::vector<std::string>{default_y(t)} : s.y_cols;
      return report::to_svg(t, s.x_col.empty() ? "n" : s.x_col, ys);
    }
  }
  return {};
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Outcome execute(const RunSpec& s) {
  switch (s.command) {
    case Command::polarize: {
      const double p = *s.p;
      if (!s.input.empty()) {
        const Configuration c = report::configuration_from_json(read_file(s.input));
        const double rel = s.tol.value_or(kDefaultPolarizeTol);
        const double estimate = local_minima(c, p).front().value;
        return {report::to_json(inner_min(c, p, rel * std::max(estimate, 1e-300)))};
      }
      const std::size_t n = static_cast<std::size_t>(s.n->lo);
      if (s.exact) {
        // Roots of unity are optimal on the circle; the minimum sits at the
        // midpoint of any gap.
        const double t = std::numbers::pi / static_cast<double>(n);
        MaxMinResult r{circle_configuration(equally_spaced_angles(n)), equally_spaced_value(n, p), 0, true, {}, {}};
        r.certificate.value = r.value;
        r.certificate.argmin = {std::cos(t), std::sin(t)};
        return {report::to_json(r)};
      }
      const MaxMinResult r = maximize_polarization(make_domain(s), n, p, maxmin_options(s));
      return {report::to_json(r), r.converged ? kExitOk : kExitNonconvergence};
    }
    case Command::energy: {
      const double p = *s.p;
      if (!s.input.empty()) {
        const Configuration c = report::configuration_from_json(read_file(s.input));
        const double e = energy(c, p);
        return {report::to_json(EnergyResult{c, e, 0, std::numeric_limits<double>::quiet_NaN()})};
      }
      EnergyOptions o;
      o.seed = s.seed;
      if (s.restarts) o.restarts = *s.restarts;
      return {report::to_json(minimize_energy(make_domain(s), static_cast<std::size_t>(s.n->lo), *s.p, o))};
    }
    case Command::oracle:
      if (s.what == "bounds") return {report::to_json(all_bounds(make_domain(s), need(s.p, "--p"), need_single_n(s)))};
      return {report::number(oracle_value(s))};
    case Command::sweep: {
      const Domain dom = make_domain(s);
      const std::string method = s.method.empty() ? (dom.kind() == DomainKind::circle ? "exact" : "optimizer") : s.method;
      const auto ns = s.n->values();
      const SweepTable t =
          sweep(dom, *s.p, ns, method == "exact" ? SweepMethod::exact_circle : SweepMethod::optimizer, maxmin_options(s));
      return {emit_table(s, t)};
    }
    case Command::explore: {
      const auto ns = s.n->values();
      return {emit_table(s, conjecture_explore(make_domain(s), *s.p, ns, maxmin_options(s)))};
    }
    case Command::verify: {
      if (!s.suite.empty()) {
        const VerificationReport r = verify_suite(s.suite);
        return {report::to_json(r), r.passed() ? kExitOk : kExitVerifyFailed};
      }
      std::vector<VerificationReport> all;
      bool ok = true;
      for (const auto& name : suite_names()) {
        all.push_back(verify_suite(name));
        ok = ok && all.back().passed();
      }
      return {report::to_json(all), ok ? kExitOk : kExitVerifyFailed};
    }
    case Command::net:
      return {report::to_json(maximal_delta_net(make_domain(s), *s.delta, s.seed))};
  }
  return {};
}

}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::polarize: return "polarize";
    case Command::energy: return "energy";
    case Command::oracle: return "oracle";
    case Command::sweep: return "sweep";
    case Command::verify: return "verify";
    case Command::explore: return "explore";
    case Command::net: return "net";
  }
  return "";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::svg: return "svg";
  }
  return "";
}

NSpec NSpec::parse(const std::string& text) {
  const auto parts = split(text, ':');
  const std::string where = "--n: malformed range '" + text + "'";
  NSpec s;
  if (parts.size() == 1) {
    s.lo = s.hi = parse_count("--n", parts[0]);
    require(s.lo >= 1, "--n: must be positive");
    return s;
  }
  require(parts.size() <= 4, where);
  s.lo = parse_count("--n", parts[0]);
  s.hi = parse_count("--n", parts[1]);
  s.scale = Scale::lin;
  if (parts.size() >= 3) {
    require(parts[2] == "lin" || parts[2] == "log", where + " (scale must be lin or log)");
    if (parts[2] == "log") s.scale = Scale::log;
  }
  if (parts.size() == 4) {
    s.count = parse_count("--n", parts[3]);
    require(s.count >= 2, where + " (count must be at least 2)");
  }
  require(s.lo >= 1 && s.hi > s.lo, where + " (need 1 <= lo < hi)");
  return s;
}

std::string NSpec::print() const {
  if (scale == Scale::single) return std::to_string(lo);
  std::string out = std::to_string(lo) + ":" + std::to_string(hi) + ":" + (scale == Scale::log ? "log" : "lin");
  if (count > 0) out += ":" + std::to_string(count);
  return out;
}

std::vector<long> NSpec::values() const {
  std::vector<long> out;
  if (scale == Scale::single) return {lo};
  if (scale == Scale::lin && count == 0) {
    for (long n = lo; n <= hi; ++n) out.push_back(n);
    return out;
  }
  long k = count;
  if (k == 0) k = 1 + static_cast<long>(std::ceil(4.0 * std::log10(static_cast<double>(hi) / lo)));
  k = std::max(k, 2L);
  for (long i = 0; i < k; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(k - 1);
    const double v = scale == Scale::log ? lo * std::pow(static_cast<double>(hi) / lo, f) : lo + f * (hi - lo);
    const long n = std::clamp(std::lround(v), lo, hi);
    if (out.empty() || n > out.back()) out.push_back(n);
  }
  return out;
}

int RunSpec::resolved_dim() const {
  if (d != 0) return d;
  return (domain == "sphere" || domain == "ball") ? 2 : 1;
}

RunSpec parse_args(std::span<const std::string> args) {
  CLI::App app{"Riesz polarization and energy toolkit", "rpl"};
  app.require_subcommand(1, 1);
  RawFlags raw;
  std::vector<std::pair<Command, CLI::App*>> subs;
  for (Command c : {Command::polarize, Command::energy, Command::oracle, Command::sweep, Command::verify,
                    Command::explore, Command::net}) {
    CLI::App* sub = app.add_subcommand(to_string(c), command_help(c));
    for (const FlagDef& def : flag_defs()) {
      if (def.commands.count(c)) sub->add_option(def.name, raw.*(def.field), def.help);
    }
    if (c == Command::polarize) sub->add_flag("--exact", raw.exact, "use the roots of unity (circle)");
    subs.emplace_back(c, sub);
  }
  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    const bool known = std::any_of(subs.begin(), subs.end(), [&](const auto& cs) { return to_string(cs.first) == args[0]; });
    if (!known) throw UsageError("unknown command '" + args[0] + "'");
  }
  std::vector<std::string> storage = {"rpl"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    for (const auto& [c, sub] : subs) {
      if (sub->parsed()) throw HelpRequested(sub->help());
    }
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  for (const auto& [c, sub] : subs) {
    if (sub->parsed()) return convert(c, raw);
  }
  throw UsageError("a command is required");
}

std::vector<std::string> print_args(const RunSpec& s) {
  std::vector<std::string> a = {to_string(s.command)};
  auto add = [&](const char* flag, const std::string& v) {
    a.push_back(flag);
    a.push_back(v);
  };
  if (s.domain != "circle") add("--domain", s.domain);
  if (s.d != 0) add("--d", std::to_string(s.d));
  if (s.p) add("--p", fmt(*s.p));
  if (s.n) add("--n", s.n->print());
  if (s.seed != 1) add("--seed", std::to_string(s.seed));
  if (s.tol) add("--tol", fmt(*s.tol));
  if (s.restarts) add("--restarts", std::to_string(*s.restarts));
  if (s.format != OutputFormat::json) add("--format", to_string(s.format));
  if (!s.out.empty()) add("--out", s.out);
  if (s.exact) a.push_back("--exact");
  if (!s.input.empty()) add("--input", s.input);
  if (!s.method.empty()) add("--method", s.method);
  if (!s.suite.empty()) add("--suite", s.suite);
  if (!s.what.empty()) add("--what", s.what);
  if (!s.kind.empty()) add("--kind", s.kind);
  if (s.x) add("--x", fmt(*s.x));
  if (s.r) add("--r", fmt(*s.r));
  if (s.delta) add("--delta", fmt(*s.delta));
  if (!s.x_col.empty()) add("--x-col", s.x_col);
  if (!s.y_cols.empty()) {
    std::string y;
    for (const auto& c : s.y_cols) y += (y.empty() ? "" : ",") + c;
    add("--y-col", y);
  }
  return a;
}

int run(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  Outcome result;
  try {
    result = execute(spec);
  } catch (const NonconvergenceError& e) {
    err << "rpl: " << e.what() << "\n";
    return kExitNonconvergence;
  } catch (const std::exception& e) {
    err << "rpl: " << e.what() << "\n";
    return kExitError;
  }
  if (spec.out.empty()) {
    out << result.text;
    out.flush();
  } else {
    std::ofstream f(spec.out, std::ios::binary);
    f << result.text;
    if (!f) {
      err << "rpl: cannot write '" << spec.out << "'\n";
      return kExitError;
    }
  }
  if (result.code == kExitNonconvergence) err << "rpl: multistart did not converge (restarts disagree)\n";
  if (result.code == kExitVerifyFailed) err << "rpl: verification failed\n";
  return result.code;
}

int main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  if (const char* t = std::getenv("RPL_THREADS")) {
    const int threads = std::atoi(t);
    if (threads < 1) {
      err << "rpl: RPL_THREADS must be a positive integer\n";
      return kExitError;
    }
    omp_set_num_threads(threads);
  }
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  RunSpec spec;
  try {
    spec = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "rpl: " << e.what() << "\nRun 'rpl --help' for usage.\n";
    return kExitError;
  }
  return run(spec, out, err);
}

}  // namespace rpl::cli
