#include "lemnis/specfun.hpp"

#include "lemnis/errors.hpp"

#include <cmath>
#include <fmt/format.h>

namespace lemnis {

bool
is_nonpositive_integer(Complex z, double tol)
{
  if (std::abs(z.imag()) > tol || z.real() > tol)
    return false;
  return std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex
pochhammer(Complex a, std::size_t n)
{
  Complex product{1.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    product *= a + static_cast<double>(j);
    if (!std::isfinite(product.real()) || !std::isfinite(product.imag()))
      throw range_error(fmt::format(
        "pochhammer({}{:+}i, {}) overflows; use pochhammer_abs_log",
        a.real(), a.imag(), n));
  }
  return product;
}

double
pochhammer(double a, std::size_t n)
{
  return pochhammer(Complex{a, 0.0}, n).real();
}

double
pochhammer_abs_log(Complex a, std::size_t n)
{
  double sum = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double modulus_sq = std::norm(a + static_cast<double>(j));
    if (modulus_sq == 0.0)
      throw pole_error(fmt::format(
        "pochhammer_abs_log: factor a+{} vanishes", j));
    sum += 0.5 * std::log(modulus_sq);
  }
  return sum;
}

namespace {

double
term_ratio_factor(const HyperSeries& s, std::size_t n, Complex& factor)
{
  const double dn = static_cast<double>(n);
  factor = s.argument / (dn + 1.0);
  for (const auto& a : s.num_params)
    factor *= a + dn;
  for (const auto& b : s.den_params)
    factor /= b + dn;
  return std::abs(factor);
}

} // namespace

SeriesValue
eval_pfq(const HyperSeries& s, double tol)
{
  if (!(tol > 0.0))
    throw argument_error("eval_pfq: tolerance must be positive");
  for (const auto& b : s.den_params)
    if (is_nonpositive_integer(b))
      throw pole_error(fmt::format(
        "eval_pfq: denominator parameter {}{:+}i is a nonpositive integer",
        b.real(), b.imag()));

  const std::size_t p = s.num_params.size();
  const std::size_t q = s.den_params.size();
  const double zabs = std::abs(s.argument);

  SeriesValue out;
  if (zabs == 0.0) {
    out.value = 1.0;
    out.terms_used = 1;
    out.converged = true;
    return out;
  }
  if (p > q + 1)
    throw divergence_error("eval_pfq: p > q+1 diverges for nonzero argument");
  if (p == q + 1 && zabs >= 1.0)
    throw divergence_error(
      "eval_pfq: p = q+1 requires |argument| < 1 (no analytic continuation)");

  const double ratio_floor = (p == q + 1) ? zabs : 0.0;

  Complex term{1.0, 0.0};
  Complex sum{0.0, 0.0};
  for (std::size_t n = 0; n < max_pfq_terms; ++n) {
    sum += term;
    Complex factor;
    const double r = term_ratio_factor(s, n, factor);
    const Complex next = term * factor;
    const double tabs = std::abs(term);

    // Terminating series: every later term is zero.
    if (next == Complex{0.0, 0.0}) {
      out.value = sum;
      out.terms_used = n + 1;
      out.tail_bound = 0.0;
      out.converged = true;
      return out;
    }
    const double rmaj = std::max(r, ratio_floor);
    if (rmaj < 1.0) {
      const double tail = tabs * rmaj / (1.0 - rmaj);
      if (tail < tol) {
        out.value = sum;
        out.terms_used = n + 1;
        out.tail_bound = tail;
        out.converged = true;
        return out;
      }
    }
    term = next;
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag()))
      throw range_error("eval_pfq: term overflow");
  }
  throw convergence_error(fmt::format(
    "eval_pfq: tail bound above {} after {} terms", tol, max_pfq_terms));
}

double
pfq(const std::vector<double>& num,
    const std::vector<double>& den,
    double z,
    double tol)
{
  HyperSeries s;
  s.num_params.assign(num.begin(), num.end());
  s.den_params.assign(den.begin(), den.end());
  s.argument = z;
  return eval_pfq(s, tol).value.real();
}

} // namespace lemnis
