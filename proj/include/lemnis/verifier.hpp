#pragma once

#include "lemnis/criterion.hpp"

#include <cstddef>
#include <vector>

namespace lemnis::verifier {

/// Sample circles |z| = r with M equally spaced angles 2 pi j / M.
struct SamplingGrid
{
  std::vector<double> radii{0.5, 0.9, 0.99, 0.999};
  std::size_t points_per_circle = 2048;
  std::size_t truncation_n = 120;
};

/// Throws argument_error unless radii lie in (0, 1), points_per_circle >= 64
/// and truncation_n >= 2.
void validate(const SamplingGrid& grid);

/// Partial sums of f and f' through degree n_max.
struct TruncatedValue
{
  Complex f;
  Complex fprime;
  /// Geometric-majorant bound on sum_{n > n_max} |a_n| |z|^n.
  double remainder = 0.0;
};

TruncatedValue eval_truncated(const CoeffFamily& f, Complex z, std::size_t n_max);

/// Same evaluation from a precomputed coefficient vector a_0..a_{n_max+2}
/// (a_0 ignored); the two extra entries feed the remainder bound.
TruncatedValue eval_truncated(const std::vector<Complex>& a, Complex z, std::size_t n_max);

/// One sampled point w = z f'(z) / f(z).
struct Sample
{
  double theta = 0.0;
  double r = 0.0;
  Complex w;
  double lemniscate_value = 0.0; // |w^2 - 1|
};

struct VerifyReport
{
  double c = 1.0;
  double max_lemniscate_value = 0.0;
  double min_re_ratio = 0.0;
  Complex worst_z;
  bool passes = false;
  /// max |w^2 - 1| on each circle, in grid order.
  std::vector<double> per_radius_max;
  std::size_t samples = 0;
};

/// Evaluates |(z f'/f)^2 - 1| and Re(z f'/f) on the grid. passes(c) is
/// max < c and min Re > 0. Throws zero_of_f_error when |f(z)/z| <= 1e-9.
/// When `dump` is non-null every sample is appended to it.
VerifyReport verify_membership(const CoeffFamily& f, double c,
                               const SamplingGrid& grid = {},
                               std::vector<Sample>* dump = nullptr);

} // namespace lemnis::verifier
