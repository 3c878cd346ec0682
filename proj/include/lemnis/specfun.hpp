#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lemnis {

using Complex = std::complex<double>;

/// Default absolute tolerance for series evaluation.
inline constexpr double default_series_tol = 1e-12;

/// Hard cap on the number of terms summed by eval_pfq.
inline constexpr std::size_t max_pfq_terms = 1'000'000;

/// Band around a nonpositive integer inside which a denominator
/// parameter is treated as a pole.
inline constexpr double pole_tolerance = 1e-12;

/// True when z lies within pole_tolerance of {0, -1, -2, ...}.
bool is_nonpositive_integer(Complex z, double tol = pole_tolerance);

/// Rising factorial (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
/// Throws range_error when the product overflows.
Complex pochhammer(Complex a, std::size_t n);
double pochhammer(double a, std::size_t n);

/// ln|(a)_n|, overflow safe. Throws pole_error if some a+j vanishes.
double pochhammer_abs_log(Complex a, std::size_t n);

/// Specification of pFq(a_1..a_p; b_1..b_q; z).
struct HyperSeries
{
  std::vector<Complex> num_params;
  std::vector<Complex> den_params;
  Complex argument;
};

/// Result of a truncated series summation.
struct SeriesValue
{
  Complex value{};
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

/// Sums the pFq series by forward term recurrence.
///
/// Summation stops at the first index N whose successor ratio
/// r = |t_{N+1}/t_N| is below one and whose geometric tail
/// |t_N| r / (1 - r) is below `tol`. For p = q + 1 the ratio tends to |z|
/// from either side, so the majorant uses max(r, |z|).
///
/// Throws divergence_error for p > q + 1 with z != 0 and for p = q + 1
/// with |z| >= 1, pole_error for a denominator parameter in Z_0^-,
/// convergence_error when more than max_pfq_terms are required.
SeriesValue eval_pfq(const HyperSeries& s, double tol = default_series_tol);

/// Real-valued convenience wrapper around eval_pfq.
double pfq(const std::vector<double>& num,
           const std::vector<double>& den,
           double z,
           double tol = default_series_tol);

} // namespace lemnis
