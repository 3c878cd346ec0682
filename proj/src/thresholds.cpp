#include "lemnis/thresholds.hpp"

#include "lemnis/errors.hpp"
#include "lemnis/identities.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace lemnis::thresholds {

namespace {

constexpr std::size_t max_bisections = 400;

double
evaluate(const std::function<double(double)>& g, double x)
{
  const double v = g(x);
  if (!std::isfinite(v))
    throw evaluation_error(fmt::format("condition is not finite at {}", x));
  return v;
}

bool
opposite(double a, double b)
{
  return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0);
}

} // namespace

std::function<double(double)>
condition(const ThresholdQuery& q)
{
  switch (q.target) {
    case Target::s1_equals_one:
      return [q](double p) { return criterion::s1(q.family(p)).value.real() - 1.0; };
    case Target::s2_equals_c:
      return [q](double p) { return criterion::s2(q.family(p), q.c).value.real() - q.c; };
    case Target::certificate_boundary:
      return [q](double p) { return criterion::certification_margin(q.family(p), q.c); };
    case Target::custom:
      return [q](double p) { return q.custom(p) - q.constant; };
  }
  throw argument_error("unknown threshold target");
}

ThresholdResult
solve_root(const std::function<double(double)>& g, double lo, double hi, double tol)
{
  if (!(lo < hi))
    throw bracket_error(fmt::format("empty bracket [{}, {}]", lo, hi));
  if (!(tol > 0.0))
    throw argument_error("solve_root: tolerance must be positive");

  const double g_lo = evaluate(g, lo);
  const double g_hi = evaluate(g, hi);
  if (!opposite(g_lo, g_hi) && g_lo != 0.0 && g_hi != 0.0)
    throw bracket_error(fmt::format(
      "no sign change on [{}, {}]: g = {} and {}", lo, hi, g_lo, g_hi));

  ThresholdResult r;

  // Pre-scan; bisect inside the first cell that changes sign.
  double a = lo, ga = g_lo, b = hi;
  bool found = false;
  double prev_x = lo, prev_g = g_lo;
  for (std::size_t i = 1; i < prescan_points; ++i) {
    const double x = (i + 1 == prescan_points)
                       ? hi
                       : lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(prescan_points - 1);
    const double gx = (i + 1 == prescan_points) ? g_hi : evaluate(g, x);
    if (opposite(prev_g, gx) || prev_g == 0.0) {
      ++r.sign_changes;
      if (!found) {
        a = prev_x, ga = prev_g, b = x;
        found = true;
      }
    }
    prev_x = x;
    prev_g = gx;
  }

  if (ga == 0.0) {
    r.root = r.bracket_lo = r.bracket_hi = a;
    return r;
  }

  double mid = 0.5 * (a + b);
  double gm = evaluate(g, mid);
  while (r.iterations < max_bisections) {
    ++r.iterations;
    if (gm == 0.0) {
      a = b = mid;
      break;
    }
    if (opposite(ga, gm)) {
      b = mid;
    } else {
      a = mid;
      ga = gm;
    }
    const double next = 0.5 * (a + b);
    if (next <= a || next >= b) // bracket is two adjacent doubles
      break;
    mid = next;
    gm = evaluate(g, mid);
    if (b - a <= tol && std::abs(gm) <= tol)
      break;
  }
  r.root = mid;
  r.residual = gm;
  r.bracket_lo = std::min(a, mid);
  r.bracket_hi = std::max(b, mid);
  return r;
}

ThresholdResult
solve_threshold(const ThresholdQuery& q)
{
  return solve_root(condition(q), q.lo, q.hi, q.tol);
}

ThresholdQuery
family_query(const families::FamilySpec& base,
             const std::string& free_param,
             Target target, double c,
             double lo, double hi, double tol)
{
  using families::FamilyId;
  ThresholdQuery q;
  q.name = fmt::format("{}:{}", families::family_id_name(base.id), free_param);
  q.target = target;
  q.c = c;
  q.lo = lo;
  q.hi = hi;
  q.tol = tol;

  if (free_param == "nu" && base.id == FamilyId::f3_gen_bessel) {
    q.family = [base](double nu) {
      auto spec = base;
      spec.params["kappa"] = nu + 1.0;
      return families::make_family(spec);
    };
  } else if (free_param == "nu" && base.id == FamilyId::w_gen_struve) {
    const auto it = base.params.find("b");
    const double b = it == base.params.end() ? 1.0 : it->second.real();
    q.family = [base, b](double nu) {
      auto spec = base;
      spec.params["kappa_s"] = families::struve_kappa_s(nu, b);
      return families::make_family(spec);
    };
  } else {
    q.family = [base, free_param](double value) {
      auto spec = base;
      spec.params[free_param] = value;
      return families::make_family(spec);
    };
  }
  return q;
}

namespace {

families::FamilySpec
spec_of(families::FamilyId id, std::map<std::string, Complex> params)
{
  families::FamilySpec s;
  s.id = id;
  s.params = std::move(params);
  return s;
}

ThresholdQuery
custom_query(std::string name, std::function<double(double)> fn, double constant,
             double lo, double hi)
{
  ThresholdQuery q;
  q.name = std::move(name);
  q.target = Target::custom;
  q.custom = std::move(fn);
  q.constant = constant;
  q.lo = lo;
  q.hi = hi;
  return q;
}

NamedThreshold
named(std::string name, std::string description, double reference, ThresholdQuery q)
{
  q.name = name;
  return NamedThreshold{std::move(name), std::move(description), reference, std::move(q)};
}

std::vector<NamedThreshold>
build_manifest()
{
  using families::FamilyId;
  const auto f2 = spec_of(FamilyId::f2_conf_hyp, {{"b", 3.0}});
  const auto f3 = spec_of(FamilyId::f3_gen_bessel, {{"kappa", 1.0}, {"eta", 1.0}});
  const auto cpb = spec_of(FamilyId::cpb_cross_bessel, {{"nu", 0.0}});
  const auto struve = spec_of(FamilyId::w_gen_struve, {{"kappa_s", 1.0}, {"eta", 1.0}, {"b", 1.0}});

  std::vector<NamedThreshold> m;
  m.push_back(named("cpb_nu0", "cross-product Bessel: certificate boundary at c = 1", -0.931564,
                    family_query(cpb, "nu", Target::certificate_boundary, 1.0, -0.99, -0.5)));
  m.push_back(named("cpb_nu1", "cross-product Bessel: S2(c=1) = 1", -0.933296,
                    family_query(cpb, "nu", Target::s2_equals_c, 1.0, -0.99, -0.5)));
  m.push_back(named("cpb_nu2", "cross-product Bessel: S1 = 1", -0.931564,
                    family_query(cpb, "nu", Target::s1_equals_one, 1.0, -0.99, -0.5)));
  m.push_back(named("f2_delta_root_b", "F2: delta(b) = S1 = 1", 2.75885,
                    family_query(f2, "b", Target::s1_equals_one, 1.0, 2.0, 4.0)));
  m.push_back(named("f2_lemniscate_b", "F2: certificate boundary at c = 1", 3.11423,
                    family_query(f2, "b", Target::certificate_boundary, 1.0, 2.5, 4.0)));
  m.push_back(named("kappa0_gen_bessel", "generalized Bessel, real kappa, |eta| = 1, c = 1", 0.694651,
                    family_query(f3, "kappa", Target::certificate_boundary, 1.0, 0.5, 2.0)));
  m.push_back(named("kappa_complex_bessel",
                    "exponential condition for complex kappa: e^(w/(2k)) - e^(1/(2k)) = 1", 0.840149,
                    custom_query("", [](double k) {
                      return families::complex_bessel_exp_condition(k, 1.0, 1.0);
                    }, 1.0, 0.75, 2.0)));
  m.push_back(named("nu0_classical_bessel", "classical Bessel, kappa = nu + 1, c = 1", -0.305349,
                    family_query(f3, "nu", Target::certificate_boundary, 1.0, -0.5, 1.0)));
  m.push_back(named("complex_bessel_k_root", "k(a) = 1 for kappa = 3/2 + ia", 1.15045,
                    custom_query("", families::complex_bessel_k, 1.0, 0.5, 2.0)));
  m.push_back(named("struve_c1_nu", "generalized Struve, b = 1, |eta| = 1: S2(c=1) = 1", -1.04226,
                    family_query(struve, "nu", Target::s2_equals_c, 1.0, -1.45, 0.0)));
  m.push_back(named("struve_rhs_nu", "generalized Struve, b = 1, |eta| = 1: S1 = 1", -1.06868,
                    family_query(struve, "nu", Target::s1_equals_one, 1.0, -1.45, 0.0)));
  m.push_back(named("exp_bound_threshold_kappa", "earlier bound (e^(1/k)-1)/(2-e^(1/(2k))) = 1", 1.6459,
                    custom_query("", [](double k) { return families::exp_ratio_bound(k, 1.0); },
                                 1.0, 1.2, 3.0)));
  std::sort(m.begin(), m.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  return m;
}

} // namespace

const std::vector<NamedThreshold>&
threshold_manifest()
{
  static const std::vector<NamedThreshold> manifest = build_manifest();
  return manifest;
}

const NamedThreshold&
find_threshold(const std::string& name)
{
  for (const auto& t : threshold_manifest())
    if (t.name == name)
      return t;
  throw argument_error(fmt::format("unknown threshold '{}'", name));
}

std::vector<TableRow>
table_nu1(const std::vector<double>& c_values, double b, double eta_abs, double tol)
{
  families::FamilySpec base;
  base.id = families::FamilyId::w_gen_struve;
  base.params = {{"kappa_s", 1.0}, {"eta", eta_abs}, {"b", b}};
  // kappa_s = nu + (b+2)/2 > 0
  const double lo = -(b + 2.0) / 2.0 + 0.02;
  const double hi = 10.0;

  std::vector<TableRow> rows;
  for (double c : c_values) {
    TableRow row;
    row.c = c;
    try {
      const auto q = family_query(base, "nu", Target::s2_equals_c, c, lo, hi, tol);
      row.nu1 = solve_threshold(q).root;
    } catch (const error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::pair<double, double>>&
table_nu1_reference()
{
  static const std::vector<std::pair<double, double>> rows{
    {0.1, 4.25508},   {0.2, 1.34049},   {0.3, 0.36084},   {0.4, -0.133344},
    {0.5, -0.432457}, {0.6, -0.633535}, {0.7, -0.778294}, {0.8, -0.887662},
    {0.9, -0.973308}, {1.0, -1.04226}};
  return rows;
}

std::vector<ConstantCheck>
reference_constants()
{
  using families::make_f1;
  using families::make_f5;
  using families::make_f6;

  std::vector<ConstantCheck> out;
  auto add = [&out](std::string name, double reference, double reproduced, double tolerance = 1e-4) {
    ConstantCheck c;
    c.name = std::move(name);
    c.reference = reference;
    c.reproduced = reproduced;
    c.abs_err = std::abs(reproduced - reference);
    c.tolerance = tolerance;
    c.pass = c.abs_err <= tolerance;
    out.push_back(std::move(c));
  };

  add("growth_weight_n1", 1.73801, identities::growth_weight(1));
  add("growth_weight_n2", 3.02069, identities::growth_weight(2));
  add("growth_weight_n3", 5.25, identities::growth_weight(3));
  add("h_gap_at_3", 1.08, identities::h_gap(3.0), 0.01);
  add("psi_max_n4", 8.0, identities::psi(4, 2));

  const double e = std::numbers::e;
  add("f1_s1", 0.71529, criterion::s1(make_f1()).value.real());
  add("f1_s1_closed_form", 0.71529, 4.0 * (56.0 - 45.0 * e + 9.0 * e * e));
  add("f1_c0", 0.990879, criterion::min_c(make_f1()).value_or(NAN));
  add("f5_s1", 1.13935, criterion::s1(make_f5()).value.real());
  add("f6_s1", 0.402721, criterion::s1(make_f6()).value.real());
  add("f6_s2_c1", 0.407896, criterion::s2(make_f6(), 1.0).value.real());
  add("f6_c0", 0.577889, criterion::min_c(make_f6()).value_or(NAN));
  add("complex_bessel_k0", 1.56809, families::complex_bessel_k(0.0));
  add("complex_bessel_h0", 0.389244, families::complex_bessel_h(0.0));
  add("struve_prior_kappa_ratio", 0.48524, (9.0 + std::sqrt(7.0)) / 24.0);

  for (const auto& t : threshold_manifest()) {
    double root = NAN;
    try {
      root = solve_threshold(t.query).root;
    } catch (const error&) {
    }
    add(t.name, t.reference, root);
  }

  for (auto& c : out)
    if (!std::isfinite(c.reproduced)) {
      c.abs_err = INFINITY;
      c.pass = false;
    }
  std::sort(out.begin(), out.end(),
            [](const ConstantCheck& a, const ConstantCheck& b) { return a.name < b.name; });
  return out;
}

} // namespace lemnis::thresholds
