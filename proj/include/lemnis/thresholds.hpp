#pragma once

#include "lemnis/criterion.hpp"
#include "lemnis/families.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace lemnis::thresholds {

/// Default tolerance on the solved parameter and on the residual.
inline constexpr double default_tol = 1e-8;

/// Grid points used to pre-scan a bracket for sign changes.
inline constexpr std::size_t prescan_points = 32;

/// Version tag of the shipped bracket manifest.
inline constexpr const char* manifest_version = "thresholds-manifest/1";

enum class Target
{
  s1_equals_one,        // S1(p) = 1
  s2_equals_c,          // S2(p; c) = c
  certificate_boundary, // max(S1 - 1, S2 - c) = 0
  custom                // custom(p) = constant
};

struct ThresholdQuery
{
  std::string name;
  /// Family as a function of the free parameter (unused for Target::custom).
  std::function<CoeffFamily(double)> family;
  Target target = Target::certificate_boundary;
  double c = 1.0;
  std::function<double(double)> custom;
  double constant = 0.0;
  double lo = 0.0;
  double hi = 1.0;
  double tol = default_tol;
};

struct ThresholdResult
{
  double root = 0.0;
  double residual = 0.0;
  std::size_t iterations = 0;
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  /// Sign changes seen by the pre-scan; the first one is solved.
  std::size_t sign_changes = 0;
};

/// The scalar condition whose zero is the threshold.
std::function<double(double)> condition(const ThresholdQuery& q);

/// Bisection on [lo, hi] after a prescan_points pre-scan. Requires opposite
/// signs at the ends (bracket_error otherwise); a non-finite value anywhere
/// raises evaluation_error. Stops when the bracket is no wider than tol and
/// |g(root)| <= tol, or when the bracket cannot shrink further.
ThresholdResult solve_root(const std::function<double(double)>& g,
                           double lo, double hi, double tol = default_tol);

ThresholdResult solve_threshold(const ThresholdQuery& q);

/// Query over one free parameter of a registry family. `free_param` is one
/// of the family's parameter names; additionally "nu" is accepted for f3
/// (kappa = nu + 1) and for struve (kappa_s = nu + (b + 2)/2, b from the
/// template parameters, default 1).
ThresholdQuery family_query(const families::FamilySpec& base,
                            const std::string& free_param,
                            Target target, double c,
                            double lo, double hi, double tol = default_tol);

/// A threshold shipped in the manifest, with the value quoted in the literature.
struct NamedThreshold
{
  std::string name;
  std::string description;
  double reference = 0.0;
  ThresholdQuery query;
};

const std::vector<NamedThreshold>& threshold_manifest();
const NamedThreshold& find_threshold(const std::string& name);

/// One row of the nu_1 table for the generalized Struve family.
struct TableRow
{
  double c = 0.0;
  std::optional<double> nu1;
  std::string error;
};

/// Solves [1F2(1;3/2,k;w|eta|/4)]^2 - 1 = c [1F2(1;3/2,k;|eta|/4)]^2 for nu
/// with k = nu + (b+2)/2; per-row failures are recorded, not thrown.
std::vector<TableRow> table_nu1(const std::vector<double>& c_values,
                                double b = 1.0, double eta_abs = 1.0,
                                double tol = default_tol);

/// The ten (c, nu_1) pairs quoted in the literature for b = 1, |eta| = 1.
const std::vector<std::pair<double, double>>& table_nu1_reference();

/// A reproduced constant compared with its quoted value.
struct ConstantCheck
{
  std::string name;
  double reference = 0.0;
  double reproduced = 0.0;
  double abs_err = 0.0;
  double tolerance = 1e-4;
  bool pass = false;
};

/// Recomputes every quoted constant; ordered by name.
std::vector<ConstantCheck> reference_constants();

} // namespace lemnis::thresholds
