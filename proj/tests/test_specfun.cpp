#include "lemnis/errors.hpp"
#include "lemnis/specfun.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace lemnis;

TEST(Pochhammer, EmptyProductIsExactlyOne)
{
  EXPECT_EQ(pochhammer(Complex(3.7, -1.2), 0), Complex(1.0, 0.0));
  EXPECT_EQ(pochhammer(-4.0, 0), 1.0);
}

TEST(Pochhammer, SmallCases)
{
  EXPECT_DOUBLE_EQ(pochhammer(4.0, 2), 20.0);
  EXPECT_DOUBLE_EQ(pochhammer(1.5, 3), 13.125);
  EXPECT_EQ(pochhammer(-2.0, 3), 0.0); // terminates at -2 + 2
}

TEST(Pochhammer, RecurrenceProperty)
{
  const Complex as[] = {{0.3, 0.0}, {-2.5, 0.7}, {1.5, 2.0}, {7.25, -3.0}};
  for (Complex a : as)
    for (std::size_t n = 0; n < 50; ++n) {
      const Complex lhs = pochhammer(a, n + 1);
      const Complex rhs = pochhammer(a, n) * (a + static_cast<double>(n));
      EXPECT_LE(std::abs(lhs - rhs), 1e-13 * std::abs(rhs)) << a << " n=" << n;
    }
}

TEST(Pochhammer, MatchesLongDoubleProduct)
{
  for (double a : {0.6, 2.75885, -3.5})
    for (std::size_t n = 0; n < 40; ++n) {
      const double ref = static_cast<double>(oracle::rising(static_cast<oracle::ld>(a), n));
      EXPECT_NEAR(pochhammer(a, n), ref, 1e-13 * std::abs(ref));
    }
}

TEST(Pochhammer, OverflowIsARangeError)
{
  EXPECT_THROW(pochhammer(100.0, 400), range_error);
  EXPECT_THROW(pochhammer(Complex(50.0, 50.0), 400), range_error);
}

TEST(PochhammerAbsLog, Examples)
{
  EXPECT_NEAR(pochhammer_abs_log(1.0, 5), std::log(120.0), 1e-14);
  EXPECT_NEAR(pochhammer_abs_log(4.0, 2), std::log(20.0), 1e-14);
  EXPECT_NEAR(pochhammer_abs_log(Complex(1.5, 2.0), 2),
              0.5 * std::log(6.25) + 0.5 * std::log(10.25), 1e-14);
  EXPECT_EQ(pochhammer_abs_log(Complex(-3.0, 0.0), 0), 0.0);
}

TEST(PochhammerAbsLog, AgreesWithDirectModulus)
{
  std::mt19937_64 gen(7);
  for (int i = 0; i < 200; ++i) {
    const Complex a{oracle::uniform(gen, -5.0, 8.0), oracle::uniform(gen, -4.0, 4.0)};
    const std::size_t n = gen() % 60;
    const double direct = std::abs(pochhammer(a, n));
    EXPECT_NEAR(std::exp(pochhammer_abs_log(a, n)), direct, 1e-10 * direct);
  }
}

TEST(PochhammerAbsLog, ZeroFactorIsAPole)
{
  EXPECT_THROW(pochhammer_abs_log(-3.0, 5), pole_error);
  EXPECT_NO_THROW(pochhammer_abs_log(-3.0, 3));
}

TEST(Pfq, ZeroArgumentGivesOne)
{
  const auto v = eval_pfq({{Complex(2.0)}, {Complex(0.5), Complex(7.0)}, 0.0});
  EXPECT_EQ(v.value, Complex(1.0));
  EXPECT_EQ(v.terms_used, 1u);
  EXPECT_TRUE(v.converged);
}

TEST(Pfq, SincFromZeroF1)
{
  const double x = std::numbers::pi / 2.0;
  EXPECT_NEAR(pfq({}, {1.5}, -x * x / 4.0), 2.0 / std::numbers::pi, 1e-12);
  EXPECT_NEAR(pfq({}, {1.5}, -x * x / 4.0, 1e-17), 2.0 / std::numbers::pi, 1e-15);
}

TEST(Pfq, ExponentialAndGeometric)
{
  EXPECT_NEAR(pfq({}, {}, 1.3), std::exp(1.3), 1e-12);
  EXPECT_NEAR(pfq({}, {}, 1.3, 1e-17), std::exp(1.3), 4e-15);
  EXPECT_NEAR(pfq({1.0}, {}, 0.5), 2.0, 1e-11);
  EXPECT_NEAR(pfq({1.0}, {}, -0.9), 1.0 / 1.9, 1e-11);
}

TEST(Pfq, OneFTwoAtOne)
{
  // sum (1/2)_n / ((3/2)_n (2)_n n!) = 1.1843650490...
  const double v = pfq({0.5}, {1.5, 2.0}, 1.0);
  const double ref =
    static_cast<double>(oracle::pfq_direct({0.5L}, {1.5L, 2.0L}, 1.0L, 60));
  EXPECT_NEAR(v, ref, 1e-12);
  EXPECT_NEAR(pfq({0.5}, {1.5, 2.0}, 1.0, 1e-17), ref, 1e-15);
  EXPECT_NEAR(v, 1.18436505, 1e-8);
  EXPECT_NEAR(v * v - 1.0, 0.402721, 1e-6);
}

TEST(Pfq, AgreesWithDirectTermOracle)
{
  struct Case
  {
    std::vector<double> a, b;
    double z;
  };
  const Case cases[] = {
    {{2.25}, {3.0, 4.5}, 6.95},
    {{1.0}, {1.5, 0.45774}, 0.25},
    {{}, {0.0667, 0.5334, 1.0334}, 1.0 / 64.0},
    {{0.5}, {1.5}, -2.0},
    {{-3.0, 1.5}, {2.5}, 0.8}, // terminating
    {{}, {2.0}, -3.0},
  };
  for (const auto& c : cases) {
    std::vector<oracle::ld> a(c.a.begin(), c.a.end()), b(c.b.begin(), c.b.end());
    const double ref = static_cast<double>(oracle::pfq_direct(a, b, c.z, 90));
    EXPECT_NEAR(pfq(c.a, c.b, c.z), ref, 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST(Pfq, TerminatingSeriesStopsExactly)
{
  // 2F1(-2, 1; 1; 1) = (1 - 1)^2 = 0 with three terms.
  const auto v = eval_pfq({{Complex(-2.0), Complex(1.0)}, {Complex(1.0)}, Complex(0.5)});
  EXPECT_NEAR(v.value.real(), 0.25, 1e-15);
  EXPECT_EQ(v.tail_bound, 0.0);
  EXPECT_LE(v.terms_used, 4u);
}

TEST(Pfq, TighterToleranceMovesValueByLessThanTol)
{
  std::mt19937_64 gen(11);
  for (int i = 0; i < 40; ++i) {
    const HyperSeries s{{Complex(oracle::uniform(gen, 0.1, 3.0))},
                        {Complex(oracle::uniform(gen, 0.5, 4.0)), Complex(oracle::uniform(gen, 0.5, 4.0))},
                        Complex(oracle::uniform(gen, -6.0, 6.0))};
    for (double t : {1e-6, 1e-9, 1e-12}) {
      const auto coarse = eval_pfq(s, t);
      const auto fine = eval_pfq(s, t / 10.0);
      EXPECT_LE(std::abs(coarse.value - fine.value), t);
      EXPECT_LE(coarse.tail_bound, t);
    }
  }
}

TEST(Pfq, ComplexArgument)
{
  // 0F0(;;z) = e^z
  const Complex z{0.7, -1.9};
  EXPECT_LE(std::abs(eval_pfq({{}, {}, z}).value - std::exp(z)), 1e-12);
  EXPECT_LE(std::abs(eval_pfq({{}, {}, z}, 1e-17).value - std::exp(z)), 1e-14);
}

TEST(Pfq, Errors)
{
  EXPECT_THROW(pfq({1.0, 1.0}, {}, 0.1), divergence_error);
  EXPECT_THROW(pfq({1.0}, {}, 1.0), divergence_error);
  EXPECT_THROW(pfq({1.0}, {}, -1.5), divergence_error);
  EXPECT_THROW(pfq({1.0}, {-2.0}, 0.3), pole_error);
  EXPECT_THROW(pfq({1.0}, {1e-13}, 0.3), pole_error);
  EXPECT_NO_THROW(pfq({1.0, 1.0}, {}, 0.0)); // argument zero is fine
}

TEST(Pfq, NonConvergenceIsReported)
{
  // p = q + 1 with |z| just below 1 needs far more than the cap.
  EXPECT_THROW(pfq({1.0}, {}, 1.0 - 1e-9, 1e-14), convergence_error);
}

TEST(Duplication, PochhammerDoubleArgument)
{
  for (double a : {0.5, 1.0, 2.7, 3.1})
    for (std::size_t n = 0; n <= 20; ++n) {
      const double lhs = pochhammer(a, 2 * n);
      const double rhs = std::pow(4.0, static_cast<double>(n)) * pochhammer(a / 2.0, n) *
                         pochhammer((a + 1.0) / 2.0, n);
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::abs(lhs));
    }
}

TEST(PoleDetection, Band)
{
  EXPECT_TRUE(is_nonpositive_integer(0.0));
  EXPECT_TRUE(is_nonpositive_integer(-7.0 + 5e-13));
  EXPECT_FALSE(is_nonpositive_integer(-7.0 + 1e-9));
  EXPECT_FALSE(is_nonpositive_integer(2.0));
  EXPECT_FALSE(is_nonpositive_integer(Complex(-1.0, 1e-6)));
}
