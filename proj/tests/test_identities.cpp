#include "lemnis/errors.hpp"
#include "lemnis/identities.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace lemnis;
using namespace lemnis::identities;

TEST(GrowthWeight, QuotedValues)
{
  EXPECT_NEAR(weight_ratio(), 1.7380133, 1e-7);
  EXPECT_NEAR(growth_weight(1), 1.73801, 1e-5);
  EXPECT_NEAR(growth_weight(2), 3.02069, 1e-5);
  EXPECT_NEAR(growth_weight(3), 5.25, 1e-13);
}

TEST(GrowthBound, MarginsAndEquality)
{
  const auto p1 = growth_bound(1);
  EXPECT_NEAR(p1.margin, 0.48801, 1e-5);
  EXPECT_TRUE(p1.holds);
  EXPECT_FALSE(p1.equality);

  const auto p2 = growth_bound(2);
  EXPECT_NEAR(p2.margin, 0.02069, 1e-5);
  EXPECT_FALSE(p2.equality);

  const auto p3 = growth_bound(3);
  EXPECT_LE(std::abs(p3.margin), 1e-12);
  EXPECT_TRUE(p3.holds);
  EXPECT_TRUE(p3.equality);
}

TEST(GrowthBound, LargeNDecidedInLogSpace)
{
  const auto p = growth_bound(10'000);
  EXPECT_TRUE(p.holds);
  EXPECT_FALSE(p.equality);
}

TEST(Psi, Examples)
{
  EXPECT_EQ(psi(3, 1), 5.0);
  EXPECT_EQ(psi(4, 2), 8.0);
  EXPECT_EQ(psi(10, 10), 10.0);
  EXPECT_EQ(psi(7, 0), 7.0);
  EXPECT_THROW(psi(3, 4), argument_error);
}

TEST(HGap, ValuesAndMonotonicity)
{
  // Full-precision H(3) = w^4 - w^3 - 11/4 with w = (21/4)^{1/3}.
  const double w = std::cbrt(21.0 / 4.0);
  EXPECT_NEAR(h_gap(3.0), std::pow(w, 4) - std::pow(w, 3) - 2.75, 1e-13);
  EXPECT_NEAR(h_gap(3.0), 1.1245699428, 1e-9);
  EXPECT_GT(h_gap(3.0), 0.0);
  EXPECT_GT(h_gap(4.0), h_gap(3.0));
  EXPECT_GT(h_gap(10.0), h_gap(3.0));
  EXPECT_GT(h_gap_slope(3.0), 0.0);
  EXPECT_THROW(h_gap(2.9), argument_error);
}

TEST(CauchyWeight, Examples)
{
  EXPECT_NEAR(cauchy_weight_closed_form(1.0, 1), 2.0, 1e-15);
  EXPECT_EQ(cauchy_weight_closed_form(3.3, 0), 1.0);
  const double ref = static_cast<double>(oracle::cauchy_weight(2.5L, 4));
  EXPECT_NEAR(cauchy_weight_closed_form(2.5, 4), ref, 1e-12 * ref);
}

TEST(CauchyWeight, ClosedFormAgainstLongDoubleSum)
{
  for (double b : {0.6, 1.0, 1.5, 2.75885, 5.0, 0.3, 11.0})
    for (std::size_t n = 0; n <= 30; ++n) {
      const double ref = static_cast<double>(oracle::cauchy_weight(b, n));
      EXPECT_NEAR(cauchy_weight_closed_form(b, n), ref, 1e-11 * std::abs(ref)) << b << " " << n;
      EXPECT_NEAR(cauchy_weight_sum(b, n), ref, 1e-12 * std::abs(ref));
    }
}

TEST(CauchyWeight, Poles)
{
  EXPECT_THROW(cauchy_weight_closed_form(-2.0, 3), pole_error);
  EXPECT_THROW(cauchy_weight_closed_form(0.5, 3), pole_error); // 2b - 1 = 0
}

TEST(ChuVandermonde, Examples)
{
  EXPECT_EQ(chu_vandermonde(0, {3.0, 1.0}, {-0.5, 2.0}), Complex(1.0));
  EXPECT_NEAR(std::abs(chu_vandermonde(2, 1.0, 3.0) - 0.5), 0.0, 1e-15);
  const Complex v = chu_vandermonde(5, -4.5, 2.2);
  const auto ref = oracle::chu_vandermonde_terms(5, -4.5L, 2.2L);
  EXPECT_NEAR(std::abs(v - Complex(static_cast<double>(ref.real()), static_cast<double>(ref.imag()))),
              0.0, 1e-12 * std::abs(v));
}

TEST(ChuVandermonde, RandomAgainstTerminatingSum)
{
  std::mt19937_64 gen(20240601);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = gen() % 26;
    const oracle::cld a{oracle::uniform(gen, -5.0, 0.0), oracle::uniform(gen, -1.0, 1.0)};
    const oracle::cld b{oracle::uniform(gen, 1.0, 6.0), oracle::uniform(gen, -1.0, 1.0)};
    const auto ref = oracle::chu_vandermonde_terms(n, a, b);
    const Complex r{static_cast<double>(ref.real()), static_cast<double>(ref.imag())};
    const Complex v = chu_vandermonde(n, Complex(a.real(), a.imag()), Complex(b.real(), b.imag()));
    EXPECT_LE(std::abs(v - r), 1e-10 * std::abs(r)) << "n=" << n;
  }
}

TEST(ChuVandermonde, Pole)
{
  EXPECT_THROW(chu_vandermonde(4, 1.0, -2.0), pole_error);
  EXPECT_THROW(chu_vandermonde_sum(4, 1.0, -2.0), pole_error);
  EXPECT_NO_THROW(chu_vandermonde(2, 1.0, -2.5));
}

TEST(ModulusBound, Examples)
{
  const auto m = modulus_bound(1.0, 1);
  EXPECT_NEAR(m.lhs, 2.0, 1e-15);
  EXPECT_NEAR(m.rhs, 2.0, 1e-15);
  EXPECT_TRUE(m.holds);
  EXPECT_TRUE(modulus_bound_holds({1.5, 1.0}, 6));
  EXPECT_TRUE(modulus_bound_holds(0.5, 10));
}

TEST(ModulusBound, LhsMatchesBruteForce)
{
  const oracle::cld b{1.5L, 1.0L};
  for (std::size_t n = 1; n <= 12; ++n) {
    oracle::ld s = 0.0L;
    for (std::size_t k = 0; k <= n; ++k)
      s += 1.0L / (oracle::factorial(k) * std::abs(oracle::rising(b, k)) *
                   oracle::factorial(n - k) * std::abs(oracle::rising(b, n - k)));
    EXPECT_NEAR(modulus_bound({1.5, 1.0}, n).lhs, static_cast<double>(s), 1e-13 * static_cast<double>(s));
  }
}

TEST(ModulusBound, Domain)
{
  EXPECT_THROW(modulus_bound({-0.6, 1.0}, 3), domain_error);
  EXPECT_NO_THROW(modulus_bound({-0.5, 1.0}, 3));
}

TEST(Sweeps, AllDefaultSweepsPass)
{
  for (const auto& r : run_sweep("all")) {
    EXPECT_TRUE(r.pass) << r.lemma << ": " << r.detail;
    EXPECT_GT(r.cases, 0u) << r.lemma;
  }
}

TEST(Sweeps, GrowthEqualityOnlyAtThree)
{
  const auto r = sweep_growth(10'000);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.cases, 10'000u);
  ASSERT_EQ(r.equality_at.size(), 1u);
  EXPECT_EQ(r.equality_at.front(), 3u);
}

TEST(Sweeps, UnknownLemma)
{
  EXPECT_THROW(run_sweep("lemma-9"), argument_error);
  EXPECT_EQ(lemma_ids().size(), 7u);
}
