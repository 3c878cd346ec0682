#include "lemnis/criterion.hpp"

#include "lemnis/errors.hpp"
#include "lemnis/identities.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <limits>

namespace lemnis {

std::vector<Complex>
coefficients(const CoeffFamily& f, std::size_t n_max)
{
  std::vector<Complex> a(n_max + 1, Complex{0.0, 0.0});
  const std::size_t last = f.degree ? std::min(*f.degree, n_max) : n_max;
  for (std::size_t n = 1; n <= last; ++n)
    a[n] = f.coeff(n);
  return a;
}

namespace criterion {

namespace {

struct ScaledSum
{
  double scale = 0.0;
  double head = 0.0; // d_0
  double rest = 0.0; // sum_{n>=1} d_n scale^n
  double tail = 0.0;

  double total() const { return head + rest; }
  // (head + rest)^2 - 1 without cancelling the leading 1.
  double square_minus_one() const
  {
    return rest * (2.0 * head + rest) + (head * head - 1.0);
  }
  double square_tail() const { return tail * (2.0 * total() + tail); }
};

struct SharedSum
{
  std::vector<ScaledSum> sums;
  std::size_t terms_used = 0;
  bool converged = false;
};

double
abs_coefficient(const CoeffFamily& f, std::size_t n)
{
  if (f.degree && n > *f.degree)
    return 0.0;
  return f.abs_coeff ? f.abs_coeff(n) : std::abs(f.coeff(n));
}

// Sums d_n s^n, d_n = |a_{n+1}|, for every scale s over one truncation index.
// Stops when each squared-series tail is below tol / scales.size().
SharedSum
shared_sum(const CoeffFamily& f, const std::vector<double>& scales, double tol)
{
  if (!(tol > 0.0))
    throw argument_error("criterion: tolerance must be positive");
  SharedSum out;
  const double d0 = abs_coefficient(f, 1);
  for (double s : scales) {
    if (s < 0.0)
      throw argument_error("criterion: series argument must be nonnegative");
    out.sums.push_back(ScaledSum{s, d0, 0.0, 0.0});
  }
  const double s_max = *std::max_element(scales.begin(), scales.end());
  const double share = tol / static_cast<double>(scales.size());

  if (s_max == 0.0 || (f.degree && *f.degree <= 1)) {
    out.terms_used = 1;
    out.converged = true;
    return out;
  }

  for (std::size_t n = 1; n < max_terms; ++n) {
    const double d_next = abs_coefficient(f, n + 1);
    for (auto& sum : out.sums)
      sum.rest += d_next * std::pow(sum.scale, static_cast<double>(n));

    // Index of the last term added is n; the remaining tail starts at n+1.
    if (f.degree && n + 1 >= *f.degree) {
      out.terms_used = n + 1;
      out.converged = true;
      return out;
    }
    const double d_after = abs_coefficient(f, n + 2);
    if (d_next > 0.0 && d_after < d_next * 1e300) {
      const double coeff_ratio = d_after / d_next;
      bool all_small = true;
      for (auto& sum : out.sums) {
        const double r = coeff_ratio * sum.scale;
        if (r >= 1.0) {
          all_small = false;
          break;
        }
        const double next_term = d_after * std::pow(sum.scale, static_cast<double>(n + 1));
        sum.tail = next_term / (1.0 - r);
        all_small = all_small && sum.square_tail() < share;
      }
      if (all_small) {
        out.terms_used = n + 1;
        out.converged = true;
        return out;
      }
    }
    if (!std::isfinite(out.sums.back().rest))
      break;
  }
  out.terms_used = max_terms;
  out.converged = false;
  return out;
}

void
require_c(double c)
{
  if (!(c > 0.0 && c <= 1.0))
    throw argument_error(fmt::format("criterion: c = {} outside (0, 1]", c));
}

} // namespace

AbsSums
abs_sums(const CoeffFamily& f, double x, double tol)
{
  const auto shared = shared_sum(f, {x, identities::weight_ratio() * x}, tol);
  AbsSums out;
  out.plain = shared.sums[0].total();
  out.weighted = shared.sums[1].total();
  out.plain_tail = shared.sums[0].tail;
  out.weighted_tail = shared.sums[1].tail;
  out.terms_used = shared.terms_used;
  out.converged = shared.converged;
  return out;
}

SeriesValue
s1(const CoeffFamily& f, double tol)
{
  const auto shared = shared_sum(f, {1.0}, tol);
  SeriesValue v;
  v.value = shared.sums[0].square_minus_one();
  v.tail_bound = shared.sums[0].square_tail();
  v.terms_used = shared.terms_used;
  v.converged = shared.converged;
  return v;
}

SeriesValue
s2(const CoeffFamily& f, double c, double tol)
{
  require_c(c);
  const auto shared = shared_sum(f, {1.0, identities::weight_ratio()}, tol / (1.0 + c));
  const auto& plain = shared.sums[0];
  const auto& weighted = shared.sums[1];
  SeriesValue v;
  v.value = weighted.square_minus_one() - c * plain.square_minus_one();
  v.tail_bound = weighted.square_tail() + c * plain.square_tail();
  v.terms_used = shared.terms_used;
  v.converged = shared.converged;
  return v;
}

CertReport
certify(const CoeffFamily& f, double c, double tol)
{
  require_c(c);
  const auto shared = shared_sum(f, {1.0, identities::weight_ratio()}, tol / (1.0 + c));
  const auto& plain = shared.sums[0];
  const auto& weighted = shared.sums[1];

  CertReport r;
  r.c = c;
  r.s1 = plain.square_minus_one();
  r.s2 = weighted.square_minus_one() - c * r.s1;
  const double s1_tail = plain.square_tail();
  const double s2_tail = weighted.square_tail() + c * s1_tail;
  r.tail_bound = std::max(s1_tail, s2_tail);
  r.truncation_n = shared.terms_used;
  r.s1_ok = shared.converged && r.s1 + r.tail_bound < 1.0;
  r.s2_ok = shared.converged && r.s2 + r.tail_bound < c;
  r.certified = r.s1_ok && r.s2_ok;

  if (f.closed_square) {
    const double g1 = f.closed_square(1.0);
    const double gw = f.closed_square(identities::weight_ratio());
    r.closed_form_s1 = g1 - 1.0;
    r.closed_form_s2 = (gw - 1.0) - c * (g1 - 1.0);
  }
  return r;
}

double
squared_series(const CoeffFamily& f, double x, double tol)
{
  const auto shared = shared_sum(f, {x}, tol);
  if (!shared.converged)
    throw divergence_error(fmt::format(
      "squared_series: '{}' did not converge at x = {} within {} terms", f.name, x, max_terms));
  const double total = shared.sums[0].total();
  return total * total;
}

std::optional<double>
min_c(const CoeffFamily& f, double tol)
{
  const auto shared = shared_sum(f, {1.0, identities::weight_ratio()}, tol);
  const double s1_value = shared.sums[0].square_minus_one();
  if (!shared.converged || s1_value >= 1.0)
    throw hypothesis_error(fmt::format(
      "min_c: S1 = {} is not below 1 for '{}'", s1_value, f.name));
  const double c0 = shared.sums[1].square_minus_one() / (s1_value + 1.0);
  if (c0 > 1.0 + identities::equality_tolerance)
    return std::nullopt;
  return std::min(c0, 1.0);
}

double
certification_margin(const CoeffFamily& f, double c, double tol)
{
  require_c(c);
  const auto shared = shared_sum(f, {1.0, identities::weight_ratio()}, tol);
  if (!shared.converged)
    return std::numeric_limits<double>::infinity();
  const double s1_value = shared.sums[0].square_minus_one();
  const double s2_value = shared.sums[1].square_minus_one() - c * s1_value;
  return std::max(s1_value - 1.0, s2_value - c);
}

} // namespace criterion
} // namespace lemnis
