#pragma once

#include "lemnis/specfun.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lemnis::identities {

/// Absolute tolerance used to detect equality in the growth inequality.
inline constexpr double equality_tolerance = 1e-12;

/// The growth weight (21/4)^{n/3} next to the concave maximum n^2/4 + n.
struct WeightProfile
{
  std::size_t n = 0;
  double weight = 0.0;   // (21/4)^{n/3}; +inf once it overflows
  double quad_max = 0.0; // n^2/4 + n
  double margin = 0.0;   // weight - quad_max
  bool holds = false;    // weight >= quad_max (decided in log space)
  bool equality = false; // |margin| <= equality_tolerance
};

/// (21/4)^{1/3}, the per-index growth ratio of the weight.
double weight_ratio();

/// (21/4)^{n/3}.
double growth_weight(std::size_t n);

/// Psi_n(k) = n(k+1) - k^2, 0 <= k <= n.
double psi(std::size_t n, std::size_t k);

/// Checks n^2/4 + n <= (21/4)^{n/3} for one n >= 1.
WeightProfile growth_bound(std::size_t n);

/// H(x) = (21/4)^{(x+1)/3} - (21/4)^{x/3} - x/2 - 5/4, x >= 3.
double h_gap(double x);

/// H'(x) = B C (21/4)^{x/3} - 1/2 with B = ln(21/4)/3, C = (21/4)^{1/3} - 1.
double h_gap_slope(double x);

/// Closed form 4^n (b-1/2)_n / (n! (b)_n (2b-1)_n) of the Cauchy weight
/// sum_{k=0}^n 1/(k!(b)_k (n-k)!(b)_{n-k}).
double cauchy_weight_closed_form(double b, std::size_t n);

/// The same Cauchy weight by direct summation over k.
double cauchy_weight_sum(double b, std::size_t n);

/// (beta - alpha)_n / (beta)_n.
Complex chu_vandermonde(std::size_t n, Complex alpha, Complex beta);

/// sum_{k=0}^n (-n)_k (alpha)_k / ((beta)_k k!).
Complex chu_vandermonde_sum(std::size_t n, Complex alpha, Complex beta);

/// Left and right sides of the modulus bound for complex b.
struct ModulusBound
{
  double lhs = 0.0; // sum_k |1/(k!(b)_k)| |1/((n-k)!(b)_{n-k})|
  double rhs = 0.0; // 2^n / (n! |b|^n)
  bool holds = false;
};

ModulusBound modulus_bound(Complex b, std::size_t n);

/// modulus_bound(b, n).holds; requires Re(b) >= -1/2 and b not a pole.
bool modulus_bound_holds(Complex b, std::size_t n);

/// Outcome of one lemma sweep, as reported by the `identity` command.
struct SweepResult
{
  std::string lemma;
  bool pass = false;
  std::size_t cases = 0;
  double worst = 0.0;     // worst relative error, or smallest margin
  double tolerance = 0.0;
  std::string metric;     // "rel_err" or "min_margin"
  std::vector<std::size_t> equality_at;
  std::string detail;
};

/// Growth inequality for n in [1, n_max]; passes iff it holds everywhere
/// and equality occurs only at n = 3.
SweepResult sweep_growth(std::size_t n_max = 10'000);

/// Psi_n(k) <= (21/4)^{n/3} and Psi_n(k) > 0 for k >= 1, n in [2, n_max].
SweepResult sweep_psi(std::size_t n_max = 500);

/// H(3) > 0 and H nondecreasing on a grid of [3, x_max].
SweepResult sweep_h_gap(double x_max = 60.0);

/// Cauchy-weight closed form against the direct k-sum.
SweepResult sweep_cauchy_weight(const std::vector<double>& bs,
                                std::size_t n_max = 30,
                                double rel_tol = 1e-11);

/// Chu-Vandermonde against its terminating sum on pseudo-random parameters
/// with Re(alpha) in [-5, 0] and Re(beta) in [1, 6].
SweepResult sweep_chu_vandermonde(std::size_t n_max = 25,
                                  std::size_t samples = 50,
                                  std::uint64_t seed = 20240601,
                                  double rel_tol = 1e-10);

/// Modulus bound and |(b)_k| >= |b|^k on Re(b) = -1/2 and interior points.
SweepResult sweep_modulus_bound(std::size_t n_max = 40);

/// (a)_{2n} = 4^n (a/2)_n ((a+1)/2)_n.
SweepResult sweep_duplication(std::size_t n_max = 20);

/// Lemma ids understood by run_sweep: basic1, basic2, hgap, identity1,
/// chu-vandermonde, identity2, duplication.
const std::vector<std::string>& lemma_ids();

/// Runs one lemma sweep (or all of them for id "all").
std::vector<SweepResult> run_sweep(const std::string& id, std::size_t n_max = 0);

} // namespace lemnis::identities
