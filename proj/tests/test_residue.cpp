#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "planebranch/lgamma.hpp"
#include "planebranch/residue.hpp"
#include "planebranch/verify.hpp"

namespace pb = planebranch;
using pb::Complex;
using pb::Rational;

TEST(Gamma, RealAxisAgreesWithLibm) {
  for (double x = -7.75; x < 30.0; x += 0.37) {
    if (std::abs(x - std::round(x)) < 1e-9 && x <= 0) continue;
    const Complex g = pb::gamma(Complex(x, 0.0));
    EXPECT_NEAR(g.real() / std::tgamma(x), 1.0, 1e-12) << x;
    EXPECT_NEAR(g.imag(), 0.0, 1e-12 * std::abs(g.real()));
  }
}

TEST(Gamma, LogGammaAgreesWithLgammaForPositiveReals) {
  for (double x = 0.05; x < 150.0; x *= 1.3) EXPECT_NEAR(pb::log_gamma(Complex(x, 0.0)).real(), std::lgamma(x), 1e-12 * (1 + std::abs(std::lgamma(x))));
}

TEST(Gamma, ComplexIdentities) {
  // reflection Gamma(z) Gamma(1 - z) = pi / sin(pi z) and recurrence Gamma(z + 1) = z Gamma(z)
  for (Complex z : {Complex(0.3, 0.7), Complex(-2.4, 1.1), Complex(4.5, -3.0), Complex(0.01, -0.2)}) {
    const Complex lhs = pb::gamma(z) * pb::gamma(1.0 - z);
    const Complex rhs = std::numbers::pi / std::sin(std::numbers::pi * z);
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(rhs), 1e-12);
    EXPECT_LT(std::abs(pb::gamma(z + 1.0) - z * pb::gamma(z)) / std::abs(pb::gamma(z + 1.0)), 1e-12);
  }
  // |Gamma(1/2 + i y)|^2 = pi / cosh(pi y)
  for (double y : {0.5, 2.0, 7.0}) {
    const double m = std::norm(pb::gamma(Complex(0.5, y)));
    EXPECT_NEAR(m / (std::numbers::pi / std::cosh(std::numbers::pi * y)), 1.0, 1e-11);
  }
}

TEST(GammaPair, Orders) {
  EXPECT_EQ(pb::gamma_pair(Rational(1, 2), Rational(1, 2)).order, 0);
  EXPECT_EQ(pb::gamma_pair(-2, 3).order, 1);
  EXPECT_EQ(pb::gamma_pair(3, -2).order, -1);
  EXPECT_EQ(pb::gamma_pair(-1, -3).order, 0);
  EXPECT_THROW(pb::gamma_pair(Rational(1, 2), Rational(1, 3)), pb::Error);
}

TEST(GammaPair, FiniteValues) {
  EXPECT_NEAR(pb::gamma_pair(Rational(1, 2), Rational(3, 2)).value->real(), 2.0, 1e-14);
  EXPECT_NEAR(pb::gamma_pair(5, 2).value->real(), 24.0, 1e-14);
  const auto v = pb::gamma_pair(Rational(-1, 2), Rational(3, 2));
  EXPECT_NEAR(v.value->real(), -4.0, 1e-13);
  EXPECT_EQ(v.value->imag(), 0.0);
}

// Gamma(-k1 + e)/Gamma(-k2 - e) as e -> 0 equals -(-1)^{k1-k2} k2!/k1!; the
// oracle evaluates the ratio at small e and extrapolates.
TEST(GammaPair, BothPolesLimitAlongTheLine) {
  for (int k1 = 0; k1 <= 4; ++k1)
    for (int k2 = 0; k2 <= 4; ++k2) {
      auto ratio = [&](double e) { return std::tgamma(-k1 + e) / std::tgamma(-k2 - e); };
      const double est = 2 * ratio(1e-7) - ratio(2e-7);
      const auto v = pb::gamma_pair(-k1, -k2);
      ASSERT_TRUE(v.value.has_value());
      EXPECT_NEAR(v.value->real(), est, 1e-5 * std::abs(est)) << k1 << "," << k2;
    }
}

TEST(GammaRatioProduct, MixedOrdersAreIndeterminate) {
  const auto v = pb::gamma_ratio_product({{-1, 3}, {3, -1}});
  EXPECT_EQ(v.order, 0);
  EXPECT_TRUE(v.indeterminate);
  EXPECT_FALSE(v.value.has_value());
  EXPECT_EQ(v.reason.size(), 2u);
}

TEST(GammaRatioProduct, FourNineResidueIsFinite) {
  const Rational sigma(-5, 12), e1(-9, 4), e2(-4, 3);
  const auto v = pb::gamma_ratio_product({{e1 + 3, -e1 - 2}, {sigma, 1 - sigma}, {e2 + 2, -e2 - 1}});
  EXPECT_EQ(v.order, 0);
  ASSERT_TRUE(v.value.has_value());
  const double want = std::tgamma(0.75) * std::tgamma(-5.0 / 12) * std::tgamma(2.0 / 3) /
                      (std::tgamma(0.25) * std::tgamma(17.0 / 12) * std::tgamma(1.0 / 3));
  EXPECT_NEAR(v.value->real() / want, 1.0, 1e-12);
}

TEST(Rnm, ClosedFormExamples) {
  const auto v = pb::rnm_closed_form({Rational(-3, 5), 0, Rational(-3, 5), 0, Complex(1, 0)});
  ASSERT_TRUE(v.value.has_value());
  // -2 pi i Gamma(2/5)^2 Gamma(1/5) / (Gamma(3/5)^2 Gamma(4/5))
  const double g = std::tgamma(0.4) * std::tgamma(0.4) * std::tgamma(0.2) /
                   (std::tgamma(0.6) * std::tgamma(0.6) * std::tgamma(0.8));
  EXPECT_NEAR(v.value->imag(), -2 * std::numbers::pi * g, 1e-10);
  EXPECT_NEAR(v.value->imag(), -54.97, 0.01);

  const auto zero = pb::rnm_closed_form({Rational(0), 0, Rational(-1, 2), 0, Complex(1, 0)});
  EXPECT_EQ(zero.order, -1);
  EXPECT_EQ(*zero.reported(), Complex(0, 0));

  const auto pole = pb::rnm_closed_form({Rational(-1), 0, Rational(-1), 0, Complex(1, 0)});
  EXPECT_EQ(pole.order, 1);
  EXPECT_FALSE(pole.reported().has_value());

  EXPECT_THROW(pb::rnm_closed_form({Rational(-1, 2), 0, Rational(-1, 2), 0, Complex(0, 0)}), pb::Error);
}

TEST(Rnm, LambdaScaling) {
  // R(lambda) = R(1) lambda^{-alpha'-1} conj(lambda)^{-alpha-1} for real positive lambda
  const pb::RnmParams p{Rational(-2, 3), 1, Rational(-2, 3), -1, Complex(1, 0)};
  auto q = p;
  q.lambda = Complex(3, 0);
  const auto a = *pb::rnm_closed_form(p).value, b = *pb::rnm_closed_form(q).value;
  EXPECT_NEAR(std::abs(b / a - std::pow(3.0, -(-2.0 / 3 + 1) - 1) * std::pow(3.0, 2.0 / 3 - 1)), 0.0, 1e-12);
}

TEST(Rnm, SymmetryOnGrid) {
  for (const auto& c : pb::rnm_grid()) {
    const auto s = pb::symmetry_check(c.params());
    EXPECT_TRUE(s.holds) << c.name();
  }
}

TEST(Rnm, SymmetryWithComplexLambdaUsesConjugate) {
  const pb::RnmParams p{Rational(-3, 5), 1, Rational(-7, 10), -2, Complex(1, 1)};
  EXPECT_TRUE(pb::symmetry_check(p).holds);
}

TEST(Hypergeometric, OneOneThreePartialSumIsExactlyKOverKPlusOne) {
  for (unsigned long K : {8ul, 100ul, 10000ul}) {
    const auto r = pb::hypergeom_sum_at_1(1, 1, 3, K);
    const auto want = oracle::hypergeom_113_partial(static_cast<oracle::i64>(K));
    EXPECT_NEAR(r.partial.real(), double(want.p) / double(want.q), 1e-14);
    EXPECT_NEAR(r.closed.real(), 1.0, 1e-15);
    EXPECT_NEAR(r.relerr, 1.0 / double(K + 1), 1e-12);
  }
}

TEST(Hypergeometric, ExtrapolationReachesClosedForm) {
  for (const auto& hc : pb::hypergeom_cases()) {
    const auto r = pb::hypergeom_sum_at_1(hc.a, hc.b, hc.c, 10000);
    EXPECT_LT(r.extrapolated_relerr, 1e-8);
  }
}

TEST(Hypergeometric, Preconditions) {
  EXPECT_THROW(pb::hypergeom_sum_at_1(1, 1, 2, 100), pb::Error);
  EXPECT_THROW(pb::hypergeom_sum_at_1(1, 1, -2, 100), pb::Error);
  EXPECT_THROW(pb::hypergeom_sum_at_1(-1, 1, 3, 100), pb::Error);
  EXPECT_THROW(pb::hypergeom_sum_at_1(1, 1, 3, 4), pb::Error);
}
