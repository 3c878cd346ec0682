// lemnis: command-line driver for the certification library.
//
// Exit codes: 0 certified / pass, 1 definite negative, 2 operational error.

#include "lemnis/criterion.hpp"
#include "lemnis/errors.hpp"
#include "lemnis/families.hpp"
#include "lemnis/identities.hpp"
#include "lemnis/io.hpp"
#include "lemnis/thresholds.hpp"
#include "lemnis/verifier.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace {

using namespace lemnis;

constexpr int exit_pass = 0;
constexpr int exit_negative = 1;
constexpr int exit_error = 2;

struct Common
{
  std::string config;
  std::string out;
  std::string manifest;
  bool plot_data = false;
  std::optional<double> tol;
};

struct FamilyOpts
{
  std::string family;
  std::optional<double> b, kappa, kappa_im, eta, eta_im, nu, kappa_s;
  std::string variant = "auto";
  double c = 1.0;
};

void
add_common(CLI::App* sub, Common& o)
{
  sub->add_option("--config", o.config, "flat key = value file; keys are option names");
  sub->add_option("--out", o.out, "output path (stdout when omitted)");
  sub->add_option("--manifest", o.manifest, "run manifest path (default <out>.run.json, else stderr)");
  sub->add_flag("--plot-data", o.plot_data, "also write CSV/SVG plot artifacts");
  sub->add_option("--tol", o.tol, "numerical tolerance");
}

void
add_family(CLI::App* sub, FamilyOpts& o, bool need_c = true)
{
  sub->add_option("--family", o.family, "f1, f2, f3, cpb, struve, f5, f6");
  sub->add_option("--b", o.b, "f2 parameter b; struve parameter b when --nu is used");
  sub->add_option("--kappa", o.kappa, "f3: Re kappa");
  sub->add_option("--kappa-im", o.kappa_im, "f3: Im kappa");
  sub->add_option("--eta", o.eta, "f3 / struve: Re eta (default 1)");
  sub->add_option("--eta-im", o.eta_im, "f3 / struve: Im eta");
  sub->add_option("--nu", o.nu, "cpb order; f3 uses kappa = nu + 1; struve kappa_s = nu + (b+2)/2");
  sub->add_option("--kappa-s", o.kappa_s, "struve parameter kappa_s");
  sub->add_option("--variant", o.variant, "f3 variant: real, complex or auto")
    ->check(CLI::IsMember({"auto", "real", "complex"}));
  if (need_c)
    sub->add_option("--c", o.c, "lemniscate parameter c in (0, 1]");
}

/// Builds a registry spec; parameters the family does not use are rejected.
families::FamilySpec
build_spec(const FamilyOpts& o)
{
  using families::FamilyId;
  if (o.family.empty())
    throw argument_error("--family is required");
  families::FamilySpec spec;
  spec.id = families::parse_family_id(o.family);

  std::set<std::string> used;
  auto take = [&](const char* name, const std::optional<double>& v) {
    used.insert(name);
    return v;
  };
  auto require = [&](const char* name, const std::optional<double>& v) {
    if (!take(name, v))
      throw argument_error(fmt::format("family {} needs --{}", o.family, name));
    return *v;
  };
  auto eta = [&] {
    return Complex(take("eta", o.eta).value_or(1.0), take("eta-im", o.eta_im).value_or(0.0));
  };

  switch (spec.id) {
    case FamilyId::f1_exp:
    case FamilyId::f5_erf:
    case FamilyId::f6_erf_hadamard: break;
    case FamilyId::f2_conf_hyp: spec.params["b"] = require("b", o.b); break;
    case FamilyId::cpb_cross_bessel: spec.params["nu"] = require("nu", o.nu); break;
    case FamilyId::f3_gen_bessel: {
      Complex kappa;
      if (o.nu && o.kappa)
        throw argument_error("give either --kappa or --nu for f3, not both");
      if (o.nu)
        kappa = take("nu", o.nu).value() + 1.0;
      else
        kappa = require("kappa", o.kappa);
      kappa += Complex(0.0, take("kappa-im", o.kappa_im).value_or(0.0));
      spec.params["kappa"] = kappa;
      spec.params["eta"] = eta();
      if (o.variant == "complex" || (o.variant == "auto" && kappa.imag() != 0.0))
        spec.variant = families::BesselVariant::complex_kappa;
      break;
    }
    case FamilyId::w_gen_struve: {
      if (o.nu && o.kappa_s)
        throw argument_error("give either --kappa-s or --nu for struve, not both");
      if (o.nu)
        spec.params["kappa_s"] =
          families::struve_kappa_s(take("nu", o.nu).value(), take("b", o.b).value_or(1.0));
      else
        spec.params["kappa_s"] = require("kappa-s", o.kappa_s);
      spec.params["eta"] = eta();
      break;
    }
  }

  const std::pair<const char*, const std::optional<double>*> all[] = {
    {"b", &o.b},     {"kappa", &o.kappa},     {"kappa-im", &o.kappa_im}, {"eta", &o.eta},
    {"eta-im", &o.eta_im}, {"nu", &o.nu}, {"kappa-s", &o.kappa_s}};
  for (const auto& [name, value] : all)
    if (value->has_value() && !used.count(name))
      throw argument_error(fmt::format("--{} does not apply to family {}", name, o.family));
  return spec;
}

json
family_json(const families::FamilySpec& spec)
{
  json j;
  j["family"] = std::string(families::family_id_name(spec.id));
  j["params"] = params_to_json(spec.params);
  if (spec.id == families::FamilyId::f3_gen_bessel)
    j["variant"] = spec.variant == families::BesselVariant::complex_kappa ? "complex" : "real";
  return j;
}

std::string
dump(const json& j)
{
  return j.dump(2) + "\n";
}

/// Per-invocation output bookkeeping.
class Run
{
public:
  Run(std::string command, const Common& common, CLI::App* sub)
    : command_(std::move(command)), common_(common), sub_(sub),
      start_(std::chrono::steady_clock::now())
  {}

  /// Main artifact: file when --out is given, stdout otherwise.
  void emit(const std::string& text)
  {
    if (common_.out.empty()) {
      std::cout << text;
      return;
    }
    write(common_.out, text);
  }

  /// Side artifact next to the main output, e.g. "<stem>.image.svg".
  void emit_side(const std::string& suffix, const std::string& text)
  {
    write(stem() + suffix, text);
  }

  void finish()
  {
    RunManifest m;
    m.command = command_;
    m.inputs = echo();
    m.outputs = outputs_;
    m.library_version = library_version();
    m.wall_time_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start_)
                       .count();
    const json j = m;
    std::string path = common_.manifest;
    if (path.empty() && !common_.out.empty())
      path = common_.out + ".run.json";
    if (path.empty())
      std::cerr << j.dump() << "\n";
    else
      write_text_file(path, dump(j));
  }

private:
  std::string stem() const
  {
    if (common_.out.empty())
      return "lemnis-" + command_;
    const auto slash = common_.out.find_last_of('/');
    const auto dot = common_.out.find_last_of('.');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
      return common_.out.substr(0, dot);
    return common_.out;
  }

  void write(const std::string& path, const std::string& text)
  {
    write_text_file(path, text);
    outputs_.push_back(path);
  }

  /// Every option of the subcommand with its effective value.
  json echo() const
  {
    json j = json::object();
    for (const CLI::Option* opt : sub_->get_options()) {
      if (opt->get_lnames().empty() || opt->get_lnames().front() == "help")
        continue;
      const std::string& name = opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& res = opt->results();
        if (res.size() == 1)
          j[name] = res.front();
        else
          j[name] = res;
      } else {
        j[name] = opt->get_default_str();
      }
    }
    return j;
  }

  std::string command_;
  const Common& common_;
  CLI::App* sub_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> outputs_;
};

// ---------------------------------------------------------------- commands

int
cmd_certify(CLI::App* sub, const Common& common, const FamilyOpts& fo)
{
  Run run("certify", common, sub);
  const auto spec = build_spec(fo);
  const auto f = families::make_family(spec);
  const double tol = common.tol.value_or(default_series_tol);
  const auto report = criterion::certify(f, fo.c, tol);

  json j = family_json(spec);
  const json body = report;
  for (const auto& [k, v] : body.items())
    j[k] = v;
  run.emit(dump(j));

  if (common.plot_data && std::isfinite(report.s1) && std::isfinite(report.s2)) {
    // S2 is affine in c, so the whole margin curve follows from one report.
    std::vector<double> cs, margins;
    for (int i = 1; i <= 200; ++i) {
      const double cc = i / 200.0;
      cs.push_back(cc);
      const double s2 = report.s2 + (report.c - cc) * report.s1;
      margins.push_back(std::max(report.s1 - 1.0, s2 - cc));
    }
    run.emit_side(".margin.svg", curve_svg(cs, margins, "certification margin vs c", 0.0));
  }
  run.finish();
  return report.certified ? exit_pass : exit_negative;
}

struct VerifyOpts
{
  std::vector<double> radii;
  std::optional<std::size_t> points;
  std::optional<std::size_t> truncation;
};

int
cmd_verify(CLI::App* sub, const Common& common, const FamilyOpts& fo, const VerifyOpts& vo)
{
  Run run("verify", common, sub);
  const auto spec = build_spec(fo);
  const auto f = families::make_family(spec);

  verifier::SamplingGrid grid;
  if (!vo.radii.empty())
    grid.radii = vo.radii;
  if (vo.points)
    grid.points_per_circle = *vo.points;
  if (vo.truncation)
    grid.truncation_n = *vo.truncation;

  std::vector<verifier::Sample> samples;
  const auto report =
    verifier::verify_membership(f, fo.c, grid, common.plot_data ? &samples : nullptr);

  json j = family_json(spec);
  json g;
  g["radii"] = grid.radii;
  g["points_per_circle"] = grid.points_per_circle;
  g["truncation_n"] = grid.truncation_n;
  j["grid"] = g;
  const json body = report;
  for (const auto& [k, v] : body.items())
    j[k] = v;
  run.emit(dump(j));

  if (common.plot_data) {
    run.emit_side(".samples.csv", samples_csv(samples));
    run.emit_side(".image.svg", image_svg(samples, fo.c));
  }
  run.finish();
  return report.passes ? exit_pass : exit_negative;
}

struct ThresholdOpts
{
  std::string name;
  bool list = false;
  std::string free;
  std::string target = "margin";
  std::optional<double> lo, hi;
};

thresholds::Target
parse_target(const std::string& s)
{
  if (s == "s1")
    return thresholds::Target::s1_equals_one;
  if (s == "s2")
    return thresholds::Target::s2_equals_c;
  if (s == "margin")
    return thresholds::Target::certificate_boundary;
  throw argument_error(fmt::format("unknown target '{}' (s1, s2, margin)", s));
}

int
cmd_threshold(CLI::App* sub, const Common& common, const FamilyOpts& fo, const ThresholdOpts& to)
{
  Run run("threshold", common, sub);

  if (to.list) {
    json j = json::array();
    for (const auto& t : thresholds::threshold_manifest())
      j.push_back({{"name", t.name}, {"description", t.description}, {"value", number(t.reference)}});
    run.emit(dump(j));
    run.finish();
    return exit_pass;
  }

  thresholds::ThresholdQuery q;
  std::optional<double> reference;
  json j;
  if (!to.name.empty()) {
    if (!fo.family.empty() || !to.free.empty())
      throw argument_error("--name cannot be combined with a custom query");
    const auto& named = thresholds::find_threshold(to.name);
    q = named.query;
    reference = named.reference;
    j["name"] = named.name;
    j["description"] = named.description;
  } else {
    if (to.free.empty())
      throw argument_error("give --name, --list, or a custom query with --family and --free");
    if (!to.lo || !to.hi)
      throw argument_error("a custom query needs --lo and --hi");
    auto base_opts = fo;
    // The free parameter is supplied by the solver; seed it so build_spec passes.
    const std::string flag = to.free == "kappa_s" ? "kappa-s" : to.free;
    if (flag == "b") base_opts.b = base_opts.b.value_or(1.0);
    else if (flag == "kappa") base_opts.kappa = base_opts.kappa.value_or(1.0);
    else if (flag == "nu") base_opts.nu = base_opts.nu.value_or(0.0);
    else if (flag == "kappa-s") base_opts.kappa_s = base_opts.kappa_s.value_or(1.0);
    else throw argument_error(fmt::format("unsupported free parameter '{}'", to.free));
    auto spec = build_spec(base_opts);
    if (flag == "nu" && spec.id == families::FamilyId::w_gen_struve)
      spec.params["b"] = base_opts.b.value_or(1.0);
    const std::string free = flag == "kappa-s" ? "kappa_s" : flag;
    q = thresholds::family_query(spec, free, parse_target(to.target), fo.c, *to.lo, *to.hi);
    j["name"] = q.name;
    j["target"] = to.target;
    j["c"] = number(fo.c);
  }
  if (to.lo)
    q.lo = *to.lo;
  if (to.hi)
    q.hi = *to.hi;
  if (common.tol)
    q.tol = *common.tol;
  j["bracket"] = json::array({number(q.lo), number(q.hi)});
  j["tol"] = number(q.tol);

  const auto result = thresholds::solve_threshold(q);
  const json body = result;
  for (const auto& [k, v] : body.items())
    j[k] = v;

  int code = exit_pass;
  if (reference) {
    const double err = std::abs(result.root - *reference);
    const bool pass = err <= 1e-4;
    j["value"] = number(*reference);
    j["abs_err"] = number(err);
    j["pass"] = pass;
    code = pass ? exit_pass : exit_negative;
  }
  run.emit(dump(j));

  if (common.plot_data) {
    const auto g = thresholds::condition(q);
    std::vector<double> xs, ys;
    for (int i = 0; i <= 160; ++i) {
      const double x = q.lo + (q.hi - q.lo) * i / 160.0;
      double y;
      try {
        y = g(x);
      } catch (const error&) {
        y = std::numeric_limits<double>::quiet_NaN();
      }
      xs.push_back(x);
      ys.push_back(y);
    }
    run.emit_side(".curve.svg", curve_svg(xs, ys, fmt::format("threshold condition: {}", q.name), 0.0));
  }
  run.finish();
  return code;
}

struct TableOpts
{
  std::vector<double> cs;
  double b = 1.0;
  double eta = 1.0;
};

int
cmd_table(CLI::App* sub, const Common& common, const TableOpts& to)
{
  Run run("table", common, sub);
  const auto& reference = thresholds::table_nu1_reference();
  std::vector<double> cs = to.cs;
  const bool compare = cs.empty() && to.b == 1.0 && to.eta == 1.0;
  if (cs.empty())
    for (const auto& [c, nu] : reference)
      cs.push_back(c);

  const auto rows = thresholds::table_nu1(cs, to.b, to.eta,
                                          common.tol.value_or(thresholds::default_tol));
  run.emit(table_csv(rows));

  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].nu1) {
      std::cerr << fmt::format("c = {}: {}\n", rows[i].c, rows[i].error);
      ok = false;
    } else if (compare && std::abs(*rows[i].nu1 - reference[i].second) > 1e-4) {
      std::cerr << fmt::format("c = {}: nu1 = {} differs from {}\n", rows[i].c, *rows[i].nu1,
                               reference[i].second);
      ok = false;
    }
  }

  if (common.plot_data) {
    std::vector<double> xs, ys;
    for (const auto& r : rows) {
      xs.push_back(r.c);
      ys.push_back(r.nu1.value_or(std::numeric_limits<double>::quiet_NaN()));
    }
    run.emit_side(".svg", curve_svg(xs, ys, "nu1 vs c", ys.empty() ? 0.0 : ys.front()));
  }
  run.finish();
  return ok ? exit_pass : exit_negative;
}

struct IdentityOpts
{
  std::string lemma = "all";
  std::size_t n_max = 0;
};

int
cmd_identity(CLI::App* sub, const Common& common, const IdentityOpts& io)
{
  Run run("identity", common, sub);
  const auto results = identities::run_sweep(io.lemma, io.n_max);
  bool all = true;
  for (const auto& r : results)
    all = all && r.pass;
  json j;
  j["lemma"] = io.lemma;
  j["pass"] = all;
  j["results"] = results;
  run.emit(dump(j));
  run.finish();
  return all ? exit_pass : exit_negative;
}

int
cmd_constants(CLI::App* sub, const Common& common)
{
  Run run("constants", common, sub);
  const auto checks = thresholds::reference_constants();
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.pass;
    if (!c.pass)
      std::cerr << fmt::format("constant {}: reproduced {} vs {} (abs_err {} > {})\n", c.name,
                               c.reproduced, c.reference, c.abs_err, c.tolerance);
  }
  json j;
  j["version"] = thresholds::manifest_version;
  j["all_pass"] = all;
  j["constants"] = checks;
  run.emit(dump(j));
  run.finish();
  return all ? exit_pass : exit_negative;
}

// ------------------------------------------------------------- config file

std::string
trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos)
    return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Expands `--config path` into flags. Keys use the option names without
/// dashes; values may be quoted. Flags given on the command line win.
std::vector<std::string>
expand_config(std::vector<std::string> args)
{
  std::string path;
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == "--config")
      path = args[i + 1];
  for (const auto& a : args)
    if (a.rfind("--config=", 0) == 0)
      path = a.substr(9);
  if (path.empty())
    return args;

  std::ifstream in(path);
  if (!in)
    throw argument_error(fmt::format("cannot read config file '{}'", path));
  std::set<std::string> given;
  for (const auto& a : args)
    if (a.rfind("--", 0) == 0)
      given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line.substr(0, line.find('#')));
    if (text.empty())
      continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos)
      throw argument_error(fmt::format("{}:{}: expected key = value", path, lineno));
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    for (char& ch : key)
      if (ch == '_')
        ch = '-';
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
      value = value.substr(1, value.size() - 2);
    if (key == "config" || given.count(key))
      continue;
    if (value == "true")
      args.push_back("--" + key);
    else if (value != "false")
      args.push_back("--" + key + "=" + value);
  }
  return args;
}

} // namespace

int
main(int argc, char** argv)
{
  CLI::App app{"lemnis: lemniscate-starlikeness certificates for special-function families"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", std::string(library_version()));

  Common common;
  FamilyOpts fam;
  VerifyOpts vo;
  ThresholdOpts to;
  TableOpts tab;
  IdentityOpts ido;

  auto* certify = app.add_subcommand("certify", "check the coefficient criterion S1 < 1, S2 < c");
  add_common(certify, common);
  add_family(certify, fam);

  auto* verify = app.add_subcommand("verify", "sample |(z f'/f)^2 - 1| on circles in the disk");
  add_common(verify, common);
  add_family(verify, fam);
  verify->add_option("--radii", vo.radii, "sampling radii in (0, 1)")->delimiter(',');
  verify->add_option("--points", vo.points, "points per circle");
  verify->add_option("--truncation", vo.truncation, "series truncation degree");

  auto* threshold = app.add_subcommand("threshold", "solve a named or custom parameter threshold");
  add_common(threshold, common);
  add_family(threshold, fam);
  threshold->add_option("--name", to.name, "manifest threshold name");
  threshold->add_flag("--list", to.list, "list manifest thresholds");
  threshold->add_option("--free", to.free, "free parameter: b, kappa, nu, kappa_s");
  threshold->add_option("--target", to.target, "s1, s2 or margin")
    ->check(CLI::IsMember({"s1", "s2", "margin"}));
  threshold->add_option("--lo", to.lo, "bracket start");
  threshold->add_option("--hi", to.hi, "bracket end");

  auto* table = app.add_subcommand("table", "nu1 for fixed c (struve family) as CSV");
  add_common(table, common);
  table->add_option("--c", tab.cs, "c values (default: the ten reference values)")->delimiter(',');
  table->add_option("--b", tab.b, "struve parameter b");
  table->add_option("--eta", tab.eta, "|eta|");

  auto* identity = app.add_subcommand("identity", "run identity / inequality sweeps");
  add_common(identity, common);
  identity->add_option("--lemma", ido.lemma, "lemma id or 'all'");
  identity->add_option("--n-max", ido.n_max, "sweep bound (0: default)");

  auto* constants = app.add_subcommand("constants", "recompute every quoted constant");
  add_common(constants, common);

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(std::move(args));
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }

  try {
    if (*certify)
      return cmd_certify(certify, common, fam);
    if (*verify)
      return cmd_verify(verify, common, fam, vo);
    if (*threshold)
      return cmd_threshold(threshold, common, fam, to);
    if (*table)
      return cmd_table(table, common, tab);
    if (*identity)
      return cmd_identity(identity, common, ido);
    if (*constants)
      return cmd_constants(constants, common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}
