#pragma once

#include "lemnis/specfun.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lemnis {

/// Coefficient sequence a_n (n >= 1, a_1 = 1) of a normalized analytic
/// function f(z) = z + sum_{n>=2} a_n z^n.
struct CoeffFamily
{
  std::string name;
  std::map<std::string, Complex> params;

  /// a_n for n >= 1.
  std::function<Complex(std::size_t)> coeff;
  /// |a_n|; may be a closed form cheaper or more accurate than |coeff(n)|.
  std::function<double(std::size_t)> abs_coeff;
  /// When set, a_n = 0 for every n > degree.
  std::optional<std::size_t> degree;
  /// Closed form of x -> (sum_{n>=0} |a_{n+1}| x^n)^2, when the family has one.
  std::function<double(double)> closed_square;
};

/// Coefficient vector a_0..a_n_max with a_0 = 0.
std::vector<Complex> coefficients(const CoeffFamily& f, std::size_t n_max);

namespace criterion {

/// Cap on the single-series index used for S1/S2.
inline constexpr std::size_t max_terms = 100'000;

/// Outcome of the coefficient test for membership in S*(q_c).
struct CertReport
{
  double s1 = 0.0;
  double s2 = 0.0;
  double c = 1.0;
  bool s1_ok = false;
  bool s2_ok = false;
  bool certified = false;
  std::size_t truncation_n = 0;
  double tail_bound = 0.0;
  std::optional<double> closed_form_s1;
  std::optional<double> closed_form_s2;
};

/// sum_{n>=0} |a_{n+1}| x^n and sum_{n>=0} |a_{n+1}| (w x)^n evaluated over
/// one shared truncation index, w = (21/4)^{1/3}.
struct AbsSums
{
  double plain = 0.0;
  double weighted = 0.0;
  double plain_tail = 0.0;
  double weighted_tail = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;

  /// (plain)^2 and (weighted)^2 with propagated tail bounds.
  double square_plain() const { return plain * plain; }
  double square_weighted() const { return weighted * weighted; }
  double square_plain_tail() const { return plain_tail * (2.0 * plain + plain_tail); }
  double square_weighted_tail() const { return weighted_tail * (2.0 * weighted + weighted_tail); }
};

/// Shared-truncation sums; stops once both squared tails are below tol.
AbsSums abs_sums(const CoeffFamily& f, double x, double tol);

/// S1 = sum_{n>=1} sum_{k=0}^n |a_{k+1}||a_{n-k+1}|, computed as the
/// square of the single series minus one. converged = false flags a family
/// whose coefficients do not decay fast enough (likely S1 = inf).
SeriesValue s1(const CoeffFamily& f, double tol = default_series_tol);

/// S2(c) = sum_{n>=1} ((21/4)^{n/3} - c) sum_k |a_{k+1}||a_{n-k+1}|.
SeriesValue s2(const CoeffFamily& f, double c, double tol = default_series_tol);

/// Conservative certificate: S1 + tail < 1 and S2 + tail < c.
CertReport certify(const CoeffFamily& f, double c, double tol = default_series_tol);

/// (sum_{n>=0} |a_{n+1}| x^n)^2, x >= 0.
double squared_series(const CoeffFamily& f, double x, double tol = default_series_tol);

/// Smallest c with S2(c) < c, i.e. c0 = (G(w) - 1) / G(1) with
/// G(x) = squared_series(f, x). Returns nullopt when c0 > 1.
/// Throws hypothesis_error when S1 >= 1.
std::optional<double> min_c(const CoeffFamily& f, double tol = default_series_tol);

/// max(S1 - 1, S2(c) - c): negative exactly when the certificate holds
/// (up to truncation). Continuous in the family parameters.
double certification_margin(const CoeffFamily& f, double c, double tol = default_series_tol);

} // namespace criterion
} // namespace lemnis
