#include <gtest/gtest.h>

#include "oracles.hpp"
#include "planebranch/corpus.hpp"
#include "planebranch/resolution.hpp"

namespace pb = planebranch;

namespace {

pb::BranchNumerics numerics_of(long n, std::vector<long> betas) {
  pb::CharSeq cs;
  cs.n = n;
  for (long b : betas) cs.betas.push_back(b);
  return pb::derive_numerics(cs);
}

}  // namespace

TEST(Resolution, ToricStepFourNine) {
  const auto s = pb::toric_step(numerics_of(4, {9}), 1);
  EXPECT_EQ(s.n, 4);
  EXPECT_EQ(s.q, 9);
  EXPECT_EQ(s.a, 3);
  EXPECT_EQ(s.b, 7);
  EXPECT_EQ(s.c, 1);
  EXPECT_EQ(s.d, 2);
}

TEST(Resolution, BezoutTuplesAgreeWithSearch) {
  auto all = pb::fixed_corpus();
  for (auto& cs : pb::random_corpus(80, 5)) all.push_back(cs);
  for (const auto& cs : all) {
    const auto bn = pb::derive_numerics(cs);
    for (const auto& s : pb::toric_steps(bn)) {
      const auto n = s.n.convert_to<oracle::i64>(), q = s.q.convert_to<oracle::i64>();
      EXPECT_EQ(s.a, oracle::bezout_a(n, q));
      EXPECT_EQ(s.n * s.b - s.q * s.a, 1);
      EXPECT_EQ(s.c * s.q - s.d * s.n, 1);
      EXPECT_EQ(s.a + s.c, s.n);
      EXPECT_EQ(s.b + s.d, s.q);
      EXPECT_GE(s.c, 1);
    }
  }
}

TEST(Resolution, ToricStepIndexRange) {
  const auto bn = numerics_of(4, {6, 7});
  EXPECT_THROW(pb::toric_step(bn, 0), pb::Error);
  EXPECT_THROW(pb::toric_step(bn, 3), pb::Error);
}

TEST(Resolution, DivisorNumerics) {
  const auto d = pb::divisor_numerics(numerics_of(4, {6, 7}));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].N_rupture, 12);
  EXPECT_EQ(d[0].k_rupture_plus1, 5);
  EXPECT_EQ(d[0].N_deadend, 6);
  EXPECT_EQ(d[0].k_deadend_plus1, 3);
  EXPECT_EQ(d[1].N_rupture, 26);
  EXPECT_EQ(d[1].k_rupture_plus1, 11);
  EXPECT_EQ(d[1].N_deadend, 13);
  EXPECT_EQ(d[1].k_deadend_plus1, 6);
}

// The identity A + C + sum_{l > i} n_{i+1}..n_{l-1} k_l = rho + n_{i+1}..n_j,
// checked with independent nested loops rather than an odometer.
TEST(Resolution, StrictTransformIdentityTwoExponents) {
  const auto bn = numerics_of(6, {9, 22});
  for (std::size_t i = 1; i <= 2; ++i)
    for (std::size_t j = i; j <= 2; ++j) {
      const auto forms = pb::strict_transform_forms(bn, pb::toric_step(bn, i), j);
      const int span = 5;
      std::vector<pb::Integer> k(j + 1, 0);
      for (int a = 0; a < span; ++a)
        for (int b = 0; b < span; ++b)
          for (int c = 0; c < (j == 2 ? span : 1); ++c) {
            k[0] = a;
            k[1] = b;
            if (j == 2) k[2] = c;
            pb::Integer extra = 0;
            for (std::size_t l = i + 1; l <= j; ++l) extra += bn.nprod(i + 1, l - 1) * k[l];
            EXPECT_EQ(forms.A(k) + forms.C(k) + extra, forms.rho(k) + bn.nprod(i + 1, j));
            const auto v = pb::linear_forms(bn, i, j, k);
            EXPECT_EQ(v.rho, forms.rho(k));
          }
    }
}

TEST(Resolution, LinearFormsPreconditions) {
  const auto bn = numerics_of(4, {6, 7});
  EXPECT_THROW(pb::linear_forms(bn, 2, 1, {0, 0}), pb::Error);
  EXPECT_THROW(pb::linear_forms(bn, 1, 1, {0}), pb::Error);
  EXPECT_THROW(pb::linear_forms(bn, 1, 1, {0, -1}), pb::Error);
}

TEST(Resolution, BellPolynomialMatchesSetPartitions) {
  const std::vector<oracle::Frac> xs = {{1, 2}, {-3}, {5, 7}, {2}, {-1, 3}, {4}, {1}};
  for (int nu = 1; nu <= 7; ++nu)
    for (int k = 1; k <= nu; ++k) {
      std::vector<pb::Rational> x;
      for (int l = 0; l < nu - k + 1; ++l) x.emplace_back(xs[l].p, xs[l].q);
      const auto got = pb::bell_polynomial(nu, k, x);
      const auto want = oracle::bell_by_set_partitions(nu, k, xs);
      EXPECT_EQ(got, pb::Rational(want.p, want.q)) << nu << "," << k;
    }
}

TEST(Resolution, BellPolynomialOnOnesIsStirling) {
  const auto S = oracle::stirling2_table(10);
  for (int nu = 1; nu <= 10; ++nu)
    for (int k = 1; k <= nu; ++k)
      EXPECT_EQ(pb::bell_polynomial(nu, k, std::vector<pb::Rational>(nu - k + 1, pb::Rational(1))), S[nu][k]);
}

TEST(Resolution, BellPolynomialFactorialArguments) {
  // B_{nu,k}(1!, 2!, 3!, ...) are the Lah numbers C(nu-1, k-1) nu!/k!
  for (int nu = 1; nu <= 8; ++nu)
    for (int k = 1; k <= nu; ++k) {
      std::vector<pb::Rational> x;
      for (int l = 1; l <= nu - k + 1; ++l) x.emplace_back(oracle::factorial(l));
      const pb::Integer lah = pb::binomial(nu - 1, k - 1) * oracle::factorial(nu) / oracle::factorial(k);
      EXPECT_EQ(pb::bell_polynomial(nu, k, x), pb::Rational(lah));
    }
}

TEST(Resolution, BellPolynomialRejectsBadIndices) {
  EXPECT_THROW(pb::bell_polynomial(3, 4, {}), pb::Error);
  EXPECT_THROW(pb::bell_polynomial(3, 2, {1}), pb::Error);
  EXPECT_THROW(pb::bell_polynomial(0, 0, {}), pb::Error);
}
