#pragma once

#include "lemnis/criterion.hpp"

#include <map>
#include <string>
#include <string_view>

namespace lemnis::families {

// Raw coefficients a_n, n >= 1.

/// 1 / (4)_{n-1}: F1(z) = -3(2 - 2e^z + 2z + z^2)/z^2.
double coeff_f1(std::size_t n);
/// 1 / ((n-1)! (b)_{n-1}): F2(z) = z 0F1(; b; z).
double coeff_f2(double b, std::size_t n);
/// (-eta)^{n-1} / (4^{n-1} (n-1)! (kappa)_{n-1}): generalized Bessel z U(z).
Complex coeff_f3(Complex kappa, Complex eta, std::size_t n);
/// (-1)^{n-1} / ((n-1)! (nu+1)_{n-1} ((nu+2)/2)_{n-1} ((nu+3)/2)_{n-1} 64^{n-1}).
double coeff_cpb(double nu, std::size_t n);
/// (-eta)^{n-1} / ((3/2)_{n-1} (kappa_s)_{n-1} 4^{n-1}): generalized Struve.
Complex coeff_struve(double kappa_s, Complex eta, std::size_t n);
/// (-1)^{n-1} / ((n-1)! (2n-1)): sqrt(pi z)/2 erf(sqrt z).
double coeff_f5(std::size_t n);
/// 1/n!: e^z - 1.
double coeff_exp_shifted(std::size_t n);

/// Which set of certificate preconditions applies to the generalized Bessel family.
enum class BesselVariant
{
  real_kappa,   // kappa real and positive
  complex_kappa // |kappa| > |eta| / (2 ln 2)
};

CoeffFamily make_f1();
CoeffFamily make_f2(double b);
CoeffFamily make_f3(Complex kappa, Complex eta, BesselVariant variant = BesselVariant::real_kappa);
CoeffFamily make_cpb(double nu);
CoeffFamily make_struve(double kappa_s, Complex eta);
CoeffFamily make_f5();
CoeffFamily make_f6();
CoeffFamily make_exp_shifted();
/// f(z) = z.
CoeffFamily make_identity();

/// Coefficientwise product a_n b_n.
CoeffFamily hadamard(const CoeffFamily& f, const CoeffFamily& g);

/// kappa_s = nu + (b + 2)/2.
double struve_kappa_s(double nu, double b);

enum class FamilyId
{
  f1_exp,
  f2_conf_hyp,
  f3_gen_bessel,
  cpb_cross_bessel,
  w_gen_struve,
  f5_erf,
  f6_erf_hadamard
};

/// Registry entry: id plus named parameters.
///   f2: b; f3: kappa, eta; cpb: nu; struve: kappa_s, eta.
struct FamilySpec
{
  FamilyId id = FamilyId::f1_exp;
  std::map<std::string, Complex> params;
  BesselVariant variant = BesselVariant::real_kappa;
};

/// Accepts the CLI spellings f1, f2, f3, cpb, struve (or w), f5, f6.
FamilyId parse_family_id(std::string_view text);
std::string_view family_id_name(FamilyId id);

/// Builds the family, validating the parameter domain.
CoeffFamily make_family(const FamilySpec& spec);

/// (e^{|eta/kappa|} - 1) / (2 - e^{|eta/(2 kappa)|}); comparison bound from
/// the earlier literature. Throws domain_error when the denominator is <= 0.
double exp_ratio_bound(Complex kappa, Complex eta);

/// e^{w|eta|/(2|kappa|)} - c e^{|eta|/(2|kappa|)}, w = (21/4)^{1/3}; the
/// complex-parameter Bessel certificate holds when this is below 1.
/// Throws domain_error unless |kappa| > |eta| / (2 ln 2).
double complex_bessel_exp_condition(Complex kappa, Complex eta, double c);

/// complex_bessel_exp_condition(3/2 + ia, 1, 1).
double complex_bessel_h(double a);
/// exp_ratio_bound(3/2 + ia, 1).
double complex_bessel_k(double a);

} // namespace lemnis::families
