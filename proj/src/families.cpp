#include "lemnis/families.hpp"

#include "lemnis/errors.hpp"
#include "lemnis/identities.hpp"

#include <cmath>
#include <fmt/format.h>
#include <numbers>

namespace lemnis::families {

namespace {

Complex
param(const FamilySpec& spec, const char* key)
{
  const auto it = spec.params.find(key);
  if (it == spec.params.end())
    throw argument_error(fmt::format("family '{}' needs parameter '{}'",
                                     family_id_name(spec.id), key));
  return it->second;
}

double
real_param(const FamilySpec& spec, const char* key)
{
  const Complex v = param(spec, key);
  if (v.imag() != 0.0)
    throw domain_error(fmt::format("family '{}': parameter '{}' must be real",
                                   family_id_name(spec.id), key));
  return v.real();
}

CoeffFamily
real_family(std::string name,
            std::map<std::string, Complex> params,
            std::function<double(std::size_t)> a)
{
  CoeffFamily f;
  f.name = std::move(name);
  f.params = std::move(params);
  f.coeff = [a](std::size_t n) { return Complex{a(n), 0.0}; };
  f.abs_coeff = [a](std::size_t n) { return std::abs(a(n)); };
  return f;
}

void
require_index(std::size_t n)
{
  if (n == 0)
    throw argument_error("coefficient index must be >= 1");
}

} // namespace

double
coeff_f1(std::size_t n)
{
  require_index(n);
  double a = 1.0;
  for (std::size_t j = 0; j + 1 < n; ++j)
    a /= 4.0 + static_cast<double>(j);
  return a;
}

double
coeff_f2(double b, std::size_t n)
{
  require_index(n);
  if (is_nonpositive_integer(b))
    throw pole_error(fmt::format("F2: b = {} lies in Z_0^-", b));
  double a = 1.0;
  for (std::size_t j = 0; j + 1 < n; ++j)
    a /= (static_cast<double>(j) + 1.0) * (b + static_cast<double>(j));
  return a;
}

Complex
coeff_f3(Complex kappa, Complex eta, std::size_t n)
{
  require_index(n);
  if (is_nonpositive_integer(kappa))
    throw pole_error("F3: kappa lies in Z_0^-");
  Complex a{1.0, 0.0};
  for (std::size_t j = 0; j + 1 < n; ++j)
    a *= -eta / (4.0 * (static_cast<double>(j) + 1.0) * (kappa + static_cast<double>(j)));
  return a;
}

double
coeff_cpb(double nu, std::size_t n)
{
  require_index(n);
  if (!(nu > -1.0))
    throw domain_error(fmt::format("cross-product Bessel: nu = {} must exceed -1", nu));
  double a = 1.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double dj = static_cast<double>(j);
    a /= -(dj + 1.0) * (nu + 1.0 + dj) * ((nu + 2.0) / 2.0 + dj) *
         ((nu + 3.0) / 2.0 + dj) * 64.0;
  }
  return a;
}

Complex
coeff_struve(double kappa_s, Complex eta, std::size_t n)
{
  require_index(n);
  if (!(kappa_s > 0.0))
    throw domain_error(fmt::format("Struve: kappa_s = {} must be positive", kappa_s));
  Complex a{1.0, 0.0};
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const double dj = static_cast<double>(j);
    a *= -eta / ((1.5 + dj) * (kappa_s + dj) * 4.0);
  }
  return a;
}

double
coeff_f5(std::size_t n)
{
  require_index(n);
  double inv_fact = 1.0;
  for (std::size_t k = 2; k < n; ++k)
    inv_fact /= static_cast<double>(k);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;
  return sign * inv_fact / (2.0 * static_cast<double>(n) - 1.0);
}

double
coeff_exp_shifted(std::size_t n)
{
  require_index(n);
  double a = 1.0;
  for (std::size_t j = 2; j <= n; ++j)
    a /= static_cast<double>(j);
  return a;
}

CoeffFamily
make_f1()
{
  auto f = real_family("F1_EXP", {}, coeff_f1);
  f.closed_square = [](double x) {
    // sum x^n / (4)_n = 6 (e^x - 1 - x - x^2/2) / x^3 = 1F1(1; 4; x)
    const double s = x < 0.1 ? pfq({1.0}, {4.0}, x)
                             : 6.0 * (std::expm1(x) - x - x * x / 2.0) / (x * x * x);
    return s * s;
  };
  return f;
}

CoeffFamily
make_f2(double b)
{
  if (is_nonpositive_integer(b))
    throw pole_error(fmt::format("F2: b = {} lies in Z_0^-", b));
  auto f = real_family("F2_CONF_HYP", {{"b", b}}, [b](std::size_t n) { return coeff_f2(b, n); });
  if (b > 0.0) {
    if (!is_nonpositive_integer(2.0 * b - 1.0))
      f.closed_square = [b](double x) { return pfq({b - 0.5}, {b, 2.0 * b - 1.0}, 4.0 * x); };
    else
      f.closed_square = [b](double x) {
        const double s = pfq({}, {b}, x);
        return s * s;
      };
  }
  return f;
}

CoeffFamily
make_f3(Complex kappa, Complex eta, BesselVariant variant)
{
  if (is_nonpositive_integer(kappa))
    throw pole_error("F3: kappa lies in Z_0^-");
  const double eta_abs = std::abs(eta);
  if (variant == BesselVariant::real_kappa) {
    if (kappa.imag() != 0.0 || !(kappa.real() > 0.0))
      throw domain_error(fmt::format(
        "F3 (real variant): kappa = {}{:+}i must be real and positive", kappa.real(), kappa.imag()));
  } else if (!(std::abs(kappa) > eta_abs / (2.0 * std::numbers::ln2))) {
    throw domain_error(fmt::format(
      "F3 (complex variant): |kappa| = {} must exceed |eta|/(2 ln 2) = {}",
      std::abs(kappa), eta_abs / (2.0 * std::numbers::ln2)));
  }

  CoeffFamily f;
  f.name = "F3_GEN_BESSEL";
  f.params = {{"kappa", kappa}, {"eta", eta}};
  f.coeff = [kappa, eta](std::size_t n) { return coeff_f3(kappa, eta, n); };
  f.abs_coeff = [kappa, eta_abs](std::size_t n) {
    double a = 1.0;
    for (std::size_t j = 0; j + 1 < n; ++j)
      a *= eta_abs / (4.0 * (static_cast<double>(j) + 1.0) * std::abs(kappa + static_cast<double>(j)));
    return a;
  };
  if (variant == BesselVariant::real_kappa) {
    const double k = kappa.real();
    if (!is_nonpositive_integer(2.0 * k - 1.0))
      f.closed_square = [k, eta_abs](double x) {
        return pfq({k - 0.5}, {k, 2.0 * k - 1.0}, eta_abs * x);
      };
    else
      f.closed_square = [k, eta_abs](double x) {
        const double s = pfq({}, {k}, eta_abs * x / 4.0);
        return s * s;
      };
  }
  return f;
}

CoeffFamily
make_cpb(double nu)
{
  if (!(nu > -1.0))
    throw domain_error(fmt::format("cross-product Bessel: nu = {} must exceed -1", nu));
  auto f = real_family("CPB_CROSS_BESSEL", {{"nu", nu}}, [nu](std::size_t n) { return coeff_cpb(nu, n); });
  f.closed_square = [nu](double x) {
    const double s = pfq({}, {nu + 1.0, (nu + 2.0) / 2.0, (nu + 3.0) / 2.0}, x / 64.0);
    return s * s;
  };
  return f;
}

CoeffFamily
make_struve(double kappa_s, Complex eta)
{
  if (!(kappa_s > 0.0))
    throw domain_error(fmt::format("Struve: kappa_s = {} must be positive", kappa_s));
  const double eta_abs = std::abs(eta);
  CoeffFamily f;
  f.name = "W_GEN_STRUVE";
  f.params = {{"kappa_s", kappa_s}, {"eta", eta}};
  f.coeff = [kappa_s, eta](std::size_t n) { return coeff_struve(kappa_s, eta, n); };
  f.abs_coeff = [kappa_s, eta_abs](std::size_t n) {
    double a = 1.0;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double dj = static_cast<double>(j);
      a *= eta_abs / ((1.5 + dj) * (kappa_s + dj) * 4.0);
    }
    return a;
  };
  f.closed_square = [kappa_s, eta_abs](double x) {
    const double s = pfq({1.0}, {1.5, kappa_s}, eta_abs * x / 4.0);
    return s * s;
  };
  return f;
}

CoeffFamily
make_f5()
{
  auto f = real_family("F5_ERF", {}, coeff_f5);
  f.closed_square = [](double x) {
    const double s = pfq({0.5}, {1.5}, x);
    return s * s;
  };
  return f;
}

CoeffFamily
make_exp_shifted()
{
  return real_family("EXP_SHIFTED", {}, coeff_exp_shifted);
}

CoeffFamily
make_identity()
{
  auto f = real_family("IDENTITY", {}, [](std::size_t n) { return n == 1 ? 1.0 : 0.0; });
  f.degree = 1;
  f.closed_square = [](double) { return 1.0; };
  return f;
}

CoeffFamily
hadamard(const CoeffFamily& f, const CoeffFamily& g)
{
  CoeffFamily h;
  h.name = f.name + "*" + g.name;
  for (const auto& [k, v] : f.params)
    h.params[f.name + "." + k] = v;
  for (const auto& [k, v] : g.params)
    h.params[g.name + "." + k] = v;
  h.coeff = [fc = f.coeff, gc = g.coeff](std::size_t n) { return fc(n) * gc(n); };
  auto abs_of = [](const CoeffFamily& c) {
    return c.abs_coeff ? c.abs_coeff : [cc = c.coeff](std::size_t n) { return std::abs(cc(n)); };
  };
  h.abs_coeff = [fa = abs_of(f), ga = abs_of(g)](std::size_t n) { return fa(n) * ga(n); };
  if (f.degree && g.degree)
    h.degree = std::min(*f.degree, *g.degree);
  else if (f.degree)
    h.degree = f.degree;
  else if (g.degree)
    h.degree = g.degree;
  return h;
}

CoeffFamily
make_f6()
{
  auto f = hadamard(make_f5(), make_exp_shifted());
  f.name = "F6_ERF_HADAMARD";
  f.closed_square = [](double x) {
    const double s = pfq({0.5}, {1.5, 2.0}, x);
    return s * s;
  };
  return f;
}

double
struve_kappa_s(double nu, double b)
{
  return nu + (b + 2.0) / 2.0;
}

FamilyId
parse_family_id(std::string_view text)
{
  if (text == "f1")
    return FamilyId::f1_exp;
  if (text == "f2")
    return FamilyId::f2_conf_hyp;
  if (text == "f3")
    return FamilyId::f3_gen_bessel;
  if (text == "cpb")
    return FamilyId::cpb_cross_bessel;
  if (text == "struve" || text == "w")
    return FamilyId::w_gen_struve;
  if (text == "f5")
    return FamilyId::f5_erf;
  if (text == "f6")
    return FamilyId::f6_erf_hadamard;
  throw argument_error(fmt::format("unknown family '{}'", text));
}

std::string_view
family_id_name(FamilyId id)
{
  switch (id) {
    case FamilyId::f1_exp: return "f1";
    case FamilyId::f2_conf_hyp: return "f2";
    case FamilyId::f3_gen_bessel: return "f3";
    case FamilyId::cpb_cross_bessel: return "cpb";
    case FamilyId::w_gen_struve: return "struve";
    case FamilyId::f5_erf: return "f5";
    case FamilyId::f6_erf_hadamard: return "f6";
  }
  return "unknown";
}

CoeffFamily
make_family(const FamilySpec& spec)
{
  switch (spec.id) {
    case FamilyId::f1_exp: return make_f1();
    case FamilyId::f2_conf_hyp: return make_f2(real_param(spec, "b"));
    case FamilyId::f3_gen_bessel:
      return make_f3(param(spec, "kappa"), param(spec, "eta"), spec.variant);
    case FamilyId::cpb_cross_bessel: return make_cpb(real_param(spec, "nu"));
    case FamilyId::w_gen_struve:
      return make_struve(real_param(spec, "kappa_s"), param(spec, "eta"));
    case FamilyId::f5_erf: return make_f5();
    case FamilyId::f6_erf_hadamard: return make_f6();
  }
  throw argument_error("unknown family id");
}

double
exp_ratio_bound(Complex kappa, Complex eta)
{
  const double ratio = std::abs(eta / kappa);
  const double den = 2.0 - std::exp(ratio / 2.0);
  if (!(den > 0.0))
    throw domain_error(fmt::format(
      "exp_ratio_bound: e^(|eta/(2 kappa)|) = {} is not below 2", std::exp(ratio / 2.0)));
  return std::expm1(ratio) / den;
}

double
complex_bessel_exp_condition(Complex kappa, Complex eta, double c)
{
  const double kabs = std::abs(kappa);
  const double eabs = std::abs(eta);
  if (!(kabs > eabs / (2.0 * std::numbers::ln2)))
    throw domain_error(fmt::format(
      "complex Bessel condition: |kappa| = {} must exceed |eta|/(2 ln 2) = {}",
      kabs, eabs / (2.0 * std::numbers::ln2)));
  const double x = eabs / (2.0 * kabs);
  return std::exp(identities::weight_ratio() * x) - c * std::exp(x);
}

double
complex_bessel_h(double a)
{
  return complex_bessel_exp_condition({1.5, a}, 1.0, 1.0);
}

double
complex_bessel_k(double a)
{
  return exp_ratio_bound({1.5, a}, 1.0);
}

} // namespace lemnis::families
