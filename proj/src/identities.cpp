#include "lemnis/identities.hpp"

#include "lemnis/errors.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <random>

namespace lemnis::identities {

namespace {

constexpr double growth_base = 21.0 / 4.0;

void
require_not_pole(Complex b, const char* who)
{
  if (is_nonpositive_integer(b))
    throw pole_error(fmt::format("{}: parameter {}{:+}i lies in Z_0^-",
                                 who, b.real(), b.imag()));
}

double
rel_err(Complex got, Complex want)
{
  const double scale = std::abs(want);
  const double diff = std::abs(got - want);
  return scale == 0.0 ? diff : diff / scale;
}

// mt19937_64 output is fixed by the standard; the distributions are not,
// so map raw bits to [0, 1) by hand.
double
unit_uniform(std::mt19937_64& gen)
{
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

double
uniform(std::mt19937_64& gen, double lo, double hi)
{
  return lo + (hi - lo) * unit_uniform(gen);
}

// u_k = 1 / (k! (b)_k) for k = 0..n.
std::vector<Complex>
inverse_factorial_pochhammer(Complex b, std::size_t n)
{
  std::vector<Complex> u(n + 1);
  u[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k)
    u[k] = u[k - 1] / (static_cast<double>(k) * (b + static_cast<double>(k - 1)));
  return u;
}

} // namespace

double
weight_ratio()
{
  return std::cbrt(growth_base);
}

double
growth_weight(std::size_t n)
{
  return std::pow(growth_base, static_cast<double>(n) / 3.0);
}

double
psi(std::size_t n, std::size_t k)
{
  if (k > n)
    throw argument_error(fmt::format("psi: k = {} exceeds n = {}", k, n));
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  return dn * (dk + 1.0) - dk * dk;
}

WeightProfile
growth_bound(std::size_t n)
{
  if (n == 0)
    throw argument_error("growth_bound: n must be positive");
  WeightProfile w;
  const double dn = static_cast<double>(n);
  w.n = n;
  w.weight = growth_weight(n);
  w.quad_max = dn * dn / 4.0 + dn;
  w.margin = w.weight - w.quad_max;
  if (std::isfinite(w.weight))
    w.holds = w.margin >= -equality_tolerance;
  else
    w.holds = dn / 3.0 * std::log(growth_base) >= std::log(w.quad_max);
  w.equality = std::abs(w.margin) <= equality_tolerance;
  return w;
}

double
h_gap(double x)
{
  if (!(x >= 3.0))
    throw argument_error(fmt::format("h_gap: x = {} is below 3", x));
  return std::pow(growth_base, (x + 1.0) / 3.0) -
         std::pow(growth_base, x / 3.0) - x / 2.0 - 1.25;
}

double
h_gap_slope(double x)
{
  const double b = std::log(growth_base) / 3.0;
  const double c = weight_ratio() - 1.0;
  return b * c * std::pow(growth_base, x / 3.0) - 0.5;
}

double
cauchy_weight_closed_form(double b, std::size_t n)
{
  require_not_pole(b, "cauchy_weight_closed_form");
  require_not_pole(2.0 * b - 1.0, "cauchy_weight_closed_form");
  double value = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double dj = static_cast<double>(j);
    value *= 4.0 * (b - 0.5 + dj) / ((dj + 1.0) * (b + dj) * (2.0 * b - 1.0 + dj));
  }
  return value;
}

double
cauchy_weight_sum(double b, std::size_t n)
{
  require_not_pole(b, "cauchy_weight_sum");
  const auto u = inverse_factorial_pochhammer(b, n);
  double sum = 0.0;
  for (std::size_t k = 0; k <= n; ++k)
    sum += (u[k] * u[n - k]).real();
  return sum;
}

Complex
chu_vandermonde(std::size_t n, Complex alpha, Complex beta)
{
  Complex value{1.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const Complex den = beta + static_cast<double>(j);
    if (std::abs(den) <= pole_tolerance)
      throw pole_error(fmt::format("chu_vandermonde: (beta)_{} vanishes", j + 1));
    value *= (beta - alpha + static_cast<double>(j)) / den;
  }
  return value;
}

Complex
chu_vandermonde_sum(std::size_t n, Complex alpha, Complex beta)
{
  const double dn = static_cast<double>(n);
  Complex term{1.0, 0.0};
  Complex sum{0.0, 0.0};
  for (std::size_t k = 0; k <= n; ++k) {
    sum += term;
    if (k == n)
      break;
    const double dk = static_cast<double>(k);
    const Complex den = (beta + dk) * (dk + 1.0);
    if (std::abs(beta + dk) <= pole_tolerance)
      throw pole_error(fmt::format("chu_vandermonde_sum: (beta)_{} vanishes", k + 1));
    term *= (-dn + dk) * (alpha + dk) / den;
  }
  return sum;
}

ModulusBound
modulus_bound(Complex b, std::size_t n)
{
  if (b.real() < -0.5)
    throw domain_error(fmt::format("modulus_bound: Re(b) = {} < -1/2", b.real()));
  require_not_pole(b, "modulus_bound");
  const auto u = inverse_factorial_pochhammer(b, n);
  ModulusBound m;
  for (std::size_t k = 0; k <= n; ++k)
    m.lhs += std::abs(u[k]) * std::abs(u[n - k]);
  m.rhs = 1.0;
  const double babs = std::abs(b);
  for (std::size_t j = 0; j < n; ++j)
    m.rhs *= 2.0 / ((static_cast<double>(j) + 1.0) * babs);
  m.holds = m.lhs <= m.rhs + equality_tolerance;
  return m;
}

bool
modulus_bound_holds(Complex b, std::size_t n)
{
  return modulus_bound(b, n).holds;
}

SweepResult
sweep_growth(std::size_t n_max)
{
  SweepResult r;
  r.lemma = "basic1";
  r.metric = "min_margin";
  r.tolerance = equality_tolerance;
  r.worst = std::numeric_limits<double>::infinity();
  bool all_hold = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const auto w = growth_bound(n);
    ++r.cases;
    all_hold = all_hold && w.holds;
    r.worst = std::min(r.worst, w.margin);
    if (w.equality)
      r.equality_at.push_back(n);
  }
  const bool equality_only_at_3 =
    n_max < 3 ? r.equality_at.empty()
              : r.equality_at == std::vector<std::size_t>{3};
  r.pass = all_hold && equality_only_at_3;
  r.detail = fmt::format("n in [1, {}]; equality expected only at n = 3", n_max);
  return r;
}

SweepResult
sweep_psi(std::size_t n_max)
{
  SweepResult r;
  r.lemma = "basic2";
  r.metric = "min_margin";
  r.worst = std::numeric_limits<double>::infinity();
  bool ok = true;
  for (std::size_t n = 2; n <= n_max; ++n) {
    const double weight = growth_weight(n);
    for (std::size_t k = 0; k <= n; ++k) {
      const double value = psi(n, k);
      ++r.cases;
      r.worst = std::min(r.worst, weight - value);
      if (value > weight || (k >= 1 && value <= 0.0))
        ok = false;
    }
  }
  r.pass = ok;
  r.detail = fmt::format("n in [2, {}], k in [0, n]", n_max);
  return r;
}

SweepResult
sweep_h_gap(double x_max)
{
  SweepResult r;
  r.lemma = "hgap";
  r.metric = "min_margin";
  const double h3 = h_gap(3.0);
  r.worst = h3;
  bool ok = h3 > 0.0;
  double prev = h3;
  for (double x = 3.25; x <= x_max; x += 0.25) {
    const double h = h_gap(x);
    ++r.cases;
    ok = ok && h > prev && h_gap_slope(x) > 0.0;
    prev = h;
  }
  ok = ok && h_gap_slope(3.0) > 0.0;
  r.pass = ok;
  r.detail = fmt::format("H(3) = {:.17g}; increasing on [3, {}]", h3, x_max);
  return r;
}

SweepResult
sweep_cauchy_weight(const std::vector<double>& bs, std::size_t n_max, double rel_tol)
{
  SweepResult r;
  r.lemma = "identity1";
  r.metric = "rel_err";
  r.tolerance = rel_tol;
  for (double b : bs)
    for (std::size_t n = 0; n <= n_max; ++n) {
      const double e = rel_err(cauchy_weight_closed_form(b, n), cauchy_weight_sum(b, n));
      r.worst = std::max(r.worst, e);
      ++r.cases;
    }
  r.pass = r.worst <= rel_tol;
  r.detail = fmt::format("{} values of b, n in [0, {}]", bs.size(), n_max);
  return r;
}

SweepResult
sweep_chu_vandermonde(std::size_t n_max, std::size_t samples, std::uint64_t seed, double rel_tol)
{
  SweepResult r;
  r.lemma = "chu-vandermonde";
  r.metric = "rel_err";
  r.tolerance = rel_tol;
  std::mt19937_64 gen(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const Complex alpha{uniform(gen, -5.0, 0.0), uniform(gen, -1.0, 1.0)};
    const Complex beta{uniform(gen, 1.0, 6.0), uniform(gen, -1.0, 1.0)};
    for (std::size_t n = 0; n <= n_max; ++n) {
      const double e = rel_err(chu_vandermonde_sum(n, alpha, beta),
                               chu_vandermonde(n, alpha, beta));
      r.worst = std::max(r.worst, e);
      ++r.cases;
    }
  }
  r.pass = r.worst <= rel_tol;
  r.detail = fmt::format("{} random (alpha, beta), n in [0, {}], seed {}", samples, n_max, seed);
  return r;
}

SweepResult
sweep_modulus_bound(std::size_t n_max)
{
  SweepResult r;
  r.lemma = "identity2";
  r.metric = "min_margin";
  r.tolerance = equality_tolerance;
  r.worst = std::numeric_limits<double>::infinity();
  std::vector<Complex> bs;
  for (double im : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0}) {
    bs.emplace_back(-0.5, im);
    if (im != 0.0)
      bs.emplace_back(-0.5, -im);
  }
  for (Complex b : {Complex{0.5, 0.0}, Complex{1.0, 0.0}, Complex{1.5, 1.0},
                    Complex{3.0, -2.0}, Complex{0.1, 0.1}, Complex{10.0, 0.0}})
    bs.push_back(b);

  bool ok = true;
  for (const Complex b : bs) {
    const double log_b = std::log(std::abs(b));
    for (std::size_t n = 1; n <= n_max; ++n) {
      const auto m = modulus_bound(b, n);
      ok = ok && m.holds;
      r.worst = std::min(r.worst, (m.rhs - m.lhs) / m.rhs);
      // |(b)_n| >= |b|^n
      ok = ok && pochhammer_abs_log(b, n) >= static_cast<double>(n) * log_b - 1e-12;
      ++r.cases;
    }
  }
  r.pass = ok;
  r.detail = fmt::format("{} values of b with Re(b) >= -1/2, n in [1, {}]; worst is min (rhs-lhs)/rhs",
                         bs.size(), n_max);
  return r;
}

SweepResult
sweep_duplication(std::size_t n_max)
{
  SweepResult r;
  r.lemma = "duplication";
  r.metric = "rel_err";
  r.tolerance = 1e-12;
  for (double a : {0.5, 1.0, 2.7, 3.1})
    for (std::size_t n = 0; n <= n_max; ++n) {
      const double lhs = pochhammer(a, 2 * n);
      const double rhs = std::ldexp(pochhammer(a / 2.0, n) * pochhammer((a + 1.0) / 2.0, n),
                                    static_cast<int>(2 * n));
      r.worst = std::max(r.worst, rel_err(lhs, rhs));
      ++r.cases;
    }
  r.pass = r.worst <= r.tolerance;
  r.detail = fmt::format("a in {{0.5, 1, 2.7, 3.1}}, n in [0, {}]", n_max);
  return r;
}

const std::vector<std::string>&
lemma_ids()
{
  static const std::vector<std::string> ids{
    "basic1", "basic2", "hgap", "identity1", "chu-vandermonde", "identity2", "duplication"};
  return ids;
}

std::vector<SweepResult>
run_sweep(const std::string& id, std::size_t n_max)
{
  if (id == "all") {
    std::vector<SweepResult> all;
    for (const auto& each : lemma_ids())
      all.push_back(run_sweep(each, n_max).front());
    return all;
  }
  auto pick = [n_max](std::size_t fallback) { return n_max == 0 ? fallback : n_max; };
  if (id == "basic1")
    return {sweep_growth(pick(10'000))};
  if (id == "basic2")
    return {sweep_psi(pick(500))};
  if (id == "hgap")
    return {sweep_h_gap(n_max == 0 ? 60.0 : static_cast<double>(n_max))};
  if (id == "identity1")
    return {sweep_cauchy_weight({0.6, 1.0, 1.5, 2.75885, 5.0}, pick(30))};
  if (id == "chu-vandermonde")
    return {sweep_chu_vandermonde(pick(25))};
  if (id == "identity2")
    return {sweep_modulus_bound(pick(40))};
  if (id == "duplication")
    return {sweep_duplication(pick(20))};
  throw argument_error(fmt::format("unknown lemma id '{}'", id));
}

} // namespace lemnis::identities
