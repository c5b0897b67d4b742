#include <gtest/gtest.h>

#include "oracles.hpp"
#include "planebranch/corpus.hpp"
#include "planebranch/semigroup.hpp"

namespace pb = planebranch;

namespace {

std::vector<oracle::i64> small(const std::vector<pb::Integer>& v) {
  std::vector<oracle::i64> out;
  for (const auto& x : v) out.push_back(x.convert_to<oracle::i64>());
  return out;
}

pb::BranchNumerics numerics_of(long n, std::vector<long> betas) {
  pb::CharSeq cs;
  cs.n = n;
  for (long b : betas) cs.betas.push_back(b);
  return pb::derive_numerics(cs);
}

std::vector<pb::CharSeq> corpus() {
  auto all = pb::fixed_corpus();
  for (auto& cs : pb::random_corpus(60, 99)) all.push_back(cs);
  return all;
}

}  // namespace

TEST(BranchCore, GoldenSemigroups) {
  EXPECT_EQ(numerics_of(2, {3}).betabar, (std::vector<pb::Integer>{2, 3}));
  EXPECT_EQ(numerics_of(4, {9}).betabar, (std::vector<pb::Integer>{4, 9}));
  EXPECT_EQ(numerics_of(4, {6, 7}).betabar, (std::vector<pb::Integer>{4, 6, 13}));
  EXPECT_EQ(numerics_of(6, {9, 22}).betabar, (std::vector<pb::Integer>{6, 9, 31}));
}

TEST(BranchCore, FourSixSevenNumerics) {
  const auto bn = numerics_of(4, {6, 7});
  EXPECT_EQ(bn.e, (std::vector<pb::Integer>{4, 2, 1}));
  EXPECT_EQ(bn.n, (std::vector<pb::Integer>{0, 2, 2}));
  EXPECT_EQ(bn.m, (std::vector<pb::Integer>{0, 3, 7}));
  EXPECT_EQ(bn.mbar, (std::vector<pb::Integer>{1, 3, 13}));
  EXPECT_EQ(bn.q, (std::vector<pb::Integer>{0, 3, 1}));
  EXPECT_EQ(bn.conductor, 16);
  EXPECT_EQ(pb::conductor_from_top(bn), 16);
}

TEST(BranchCore, CuspMilnorNumber) {
  const auto bn = numerics_of(2, {3});
  EXPECT_EQ(bn.milnor, 2);
  EXPECT_EQ(pb::gap_count(bn), 1);
}

TEST(BranchCore, NumericsAgreeWithOracle) {
  for (const auto& cs : corpus()) {
    const auto bn = pb::derive_numerics(cs);
    const auto o = oracle::numerics(cs.n.convert_to<oracle::i64>(), small(cs.betas));
    EXPECT_EQ(small(bn.betabar), o.betabar);
    EXPECT_EQ(small(bn.e), o.e);
    EXPECT_EQ(small(bn.mbar), o.mbar);
  }
}

TEST(BranchCore, ConductorAndGapsAgreeWithSieve) {
  for (const auto& cs : corpus()) {
    const auto bn = pb::derive_numerics(cs);
    const auto f = oracle::semigroup_facts(small(bn.betabar));
    EXPECT_EQ(bn.conductor, f.conductor) << cs.n;
    EXPECT_EQ(pb::gap_count(bn), f.gaps);
    EXPECT_EQ(bn.conductor, 2 * f.gaps);  // symmetric semigroup
    EXPECT_EQ(bn.conductor, pb::conductor_from_top(bn));
    EXPECT_EQ(f.minimal_generators, small(bn.betabar));
  }
}

TEST(BranchCore, MembershipMatchesSieve) {
  const std::vector<pb::Integer> gens = {6, 9, 31};
  const auto in = oracle::sieve({6, 9, 31}, 120);
  for (int s = 0; s <= 120; ++s) {
    const auto r = pb::membership(gens, s);
    EXPECT_EQ(r.member, bool(in[s])) << s;
    if (r.member) {
      pb::Integer total = 0;
      for (std::size_t k = 0; k < gens.size(); ++k) total += r.representation[k] * gens[k];
      EXPECT_EQ(total, s);
    }
  }
  EXPECT_THROW(pb::membership(gens, -1), pb::Error);
}

TEST(BranchCore, CanonicalRepresentationUniqueAndBounded) {
  const auto bn = numerics_of(6, {9, 22});
  const auto in = oracle::sieve({6, 9, 31}, 200);
  for (int s = 0; s <= 200; ++s) {
    EXPECT_EQ(pb::in_semigroup(bn, s), bool(in[s])) << s;
    if (!in[s]) {
      EXPECT_THROW(pb::canonical_representation(bn, s), pb::Error);
      continue;
    }
    const auto k = pb::canonical_representation(bn, s);
    pb::Integer total = 0;
    for (std::size_t l = 0; l <= bn.g(); ++l) {
      total += k[l] * bn.betabar[l];
      if (l >= 1) {
        EXPECT_LT(k[l], bn.n[l]);
      }
      EXPECT_GE(k[l], 0);
    }
    EXPECT_EQ(total, s);
  }
}

TEST(BranchCore, SemigroupRoundTrip) {
  for (const auto& cs : corpus()) {
    const auto bn = pb::derive_numerics(cs);
    EXPECT_TRUE(pb::validate_plane_semigroup(bn.betabar).ok());
    EXPECT_EQ(pb::charseq_from_semigroup(bn.semigroup()), cs);
  }
}

TEST(BranchCore, ValidationFailures) {
  auto first = [](std::vector<pb::Integer> g) {
    const auto rep = pb::validate_plane_semigroup(g);
    return rep.ok() ? std::string("ok") : rep.first_failure()->name;
  };
  EXPECT_EQ(first({4, 6, 13}), "ok");
  EXPECT_EQ(first({4, 6}), "gcd");
  EXPECT_EQ(first({4, 8, 9}), "strict_gcd_chain");
  EXPECT_EQ(first({4, 6, 11}), "inequality");  // 2*6 = 12 >= 11
  EXPECT_EQ(first({6, 4}), "increasing");
  // <6, 10, 15>: 3*10 = 30 = 5*6, 2*15 = 30: passes membership; fails the inequality 30 < 15
  EXPECT_EQ(first({6, 10, 15}), "inequality");
  EXPECT_THROW(pb::charseq_from_semigroup(pb::PlaneSemigroup{{4, 6}}), pb::Error);
}

TEST(BranchCore, InvalidCharacteristicSequences) {
  auto kind_of = [](long n, std::vector<long> b) {
    try {
      numerics_of(n, b);
    } catch (const pb::Error& e) {
      return e.kind();
    }
    return pb::ErrorKind::Overflow;  // sentinel: no error
  };
  EXPECT_EQ(kind_of(4, {8}), pb::ErrorKind::InvalidCharSeq);
  EXPECT_EQ(kind_of(4, {6}), pb::ErrorKind::InvalidCharSeq);
  EXPECT_EQ(kind_of(4, {3}), pb::ErrorKind::InvalidCharSeq);
  EXPECT_EQ(kind_of(4, {6, 5}), pb::ErrorKind::InvalidCharSeq);
  EXPECT_EQ(kind_of(1, {3}), pb::ErrorKind::InvalidCharSeq);
  EXPECT_EQ(kind_of(4, {9}), pb::ErrorKind::Overflow);
}

TEST(BranchCore, ParseCharseq) {
  EXPECT_EQ(pb::parse_charseq("4,6,7"), pb::parse_charseq("4 6 7"));
  EXPECT_THROW(pb::parse_charseq(""), pb::Error);
  EXPECT_THROW(pb::parse_charseq("4,x"), pb::Error);
}

TEST(BranchCore, CorpusIsValidAndWithinLimits) {
  for (const auto& cs : pb::random_corpus(200, 1729)) {
    EXPECT_LE(cs.g(), 4u);
    EXPECT_LE(cs.n, 12);
    EXPECT_LE(cs.betas.back(), 400);
    EXPECT_NO_THROW(pb::derive_numerics(cs));
  }
}
