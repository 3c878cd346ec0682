#include "lemnis/verifier.hpp"

#include "lemnis/errors.hpp"

#include <cmath>
#include <fmt/format.h>
#include <limits>
#include <numbers>

namespace lemnis::verifier {

namespace {

constexpr double min_f_over_z = 1e-9;

// f(z)/z = sum_{n>=0} a_{n+1} z^n and f'(z) = sum_{n>=0} (n+1) a_{n+1} z^n.
void
horner(const std::vector<Complex>& a, Complex z, std::size_t n_max,
       Complex& f_over_z, Complex& fprime)
{
  f_over_z = 0.0;
  fprime = 0.0;
  for (std::size_t n = n_max; n >= 1; --n) {
    f_over_z = f_over_z * z + a[n];
    fprime = fprime * z + static_cast<double>(n) * a[n];
  }
}

double
remainder_bound(const std::vector<Complex>& a, double zabs, std::size_t n_max)
{
  if (a.size() < n_max + 3)
    return std::numeric_limits<double>::infinity();
  const double first = std::abs(a[n_max + 1]);
  const double second = std::abs(a[n_max + 2]);
  if (first == 0.0)
    return second == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  const double ratio = second / first * zabs;
  if (ratio >= 1.0)
    return std::numeric_limits<double>::infinity();
  return first * std::pow(zabs, static_cast<double>(n_max + 1)) / (1.0 - ratio);
}

} // namespace

void
validate(const SamplingGrid& grid)
{
  if (grid.radii.empty())
    throw argument_error("sampling grid has no radii");
  for (double r : grid.radii)
    if (!(r > 0.0 && r < 1.0))
      throw argument_error(fmt::format("sampling radius {} outside (0, 1)", r));
  if (grid.points_per_circle < 64)
    throw argument_error("sampling grid needs at least 64 points per circle");
  if (grid.truncation_n < 2)
    throw argument_error("truncation degree must be at least 2");
}

TruncatedValue
eval_truncated(const std::vector<Complex>& a, Complex z, std::size_t n_max)
{
  if (n_max < 2 || a.size() < n_max + 1)
    throw argument_error("eval_truncated: need n_max >= 2 and coefficients through n_max");
  Complex f_over_z, fprime;
  horner(a, z, n_max, f_over_z, fprime);
  TruncatedValue v;
  v.f = z * f_over_z;
  v.fprime = fprime;
  v.remainder = remainder_bound(a, std::abs(z), n_max);
  return v;
}

TruncatedValue
eval_truncated(const CoeffFamily& f, Complex z, std::size_t n_max)
{
  if (!(std::abs(z) < 1.0))
    throw argument_error("eval_truncated: |z| must be below 1");
  return eval_truncated(coefficients(f, n_max + 2), z, n_max);
}

VerifyReport
verify_membership(const CoeffFamily& f, double c, const SamplingGrid& grid,
                  std::vector<Sample>* dump)
{
  if (!(c > 0.0 && c <= 1.0))
    throw argument_error(fmt::format("verify_membership: c = {} outside (0, 1]", c));
  validate(grid);

  const auto a = coefficients(f, grid.truncation_n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(grid.points_per_circle);

  VerifyReport rep;
  rep.c = c;
  rep.max_lemniscate_value = -1.0;
  rep.min_re_ratio = std::numeric_limits<double>::infinity();
  for (double r : grid.radii) {
    double circle_max = 0.0;
    for (std::size_t j = 0; j < grid.points_per_circle; ++j) {
      const double theta = step * static_cast<double>(j);
      const Complex z = std::polar(r, theta);
      Complex f_over_z, fprime;
      horner(a, z, grid.truncation_n, f_over_z, fprime);
      if (std::abs(f_over_z) <= min_f_over_z)
        throw zero_of_f_error(fmt::format("f(z)/z vanishes near z = {}{:+}i", z.real(), z.imag()), z);
      const Complex w = fprime / f_over_z;
      const double value = std::abs(w * w - 1.0);
      circle_max = std::max(circle_max, value);
      if (value > rep.max_lemniscate_value) {
        rep.max_lemniscate_value = value;
        rep.worst_z = z;
      }
      rep.min_re_ratio = std::min(rep.min_re_ratio, w.real());
      ++rep.samples;
      if (dump)
        dump->push_back(Sample{theta, r, w, value});
    }
    rep.per_radius_max.push_back(circle_max);
  }
  rep.passes = rep.max_lemniscate_value < c && rep.min_re_ratio > 0.0;
  return rep;
}

} // namespace lemnis::verifier
