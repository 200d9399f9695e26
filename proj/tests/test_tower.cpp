#include <gtest/gtest.h>

#include <amalg/tower.hpp>

using namespace amalg;

class TowerTest : public ::testing::Test
{
protected:
  Tower tower;
  Word e = tower.identity();
  Word g1 = tower.stable(1);
  Word g2 = tower.stable(2);
  Word e12 = tower.lambda(LambdaMatrix::elementary(0, 1, 1));
};

TEST_F(TowerTest, IdentityIsNeutral)
{
  auto h = tower.h(3, 1, 2, 3);
  EXPECT_EQ(tower.mul(e, h), h);
  EXPECT_EQ(tower.mul(h, e), h);
  EXPECT_EQ(tower.mul(e, g2), g2);
}

TEST_F(TowerTest, SemidirectLaw)
{
  auto& ps = tower.primes();
  KVector k(make_hn(ps, 1, 1, 2, 0));
  KVector kp(make_hn(ps, 1, 0, 1, 1));
  auto l = LambdaMatrix::elementary(0, 1, 1);
  auto lp = LambdaMatrix::elementary(2, 0, -1);
  auto got = tower.mul(tower.g0({k, l}), tower.g0({kp, lp}));
  G0Element want{KVector::add(ps, k, act(ps, l, kp)), l * lp};
  EXPECT_EQ(got, tower.g0(want));
}

TEST_F(TowerTest, StableLetterCommutesWithK)
{
  auto h = tower.h(5, 1, 0, 4);
  EXPECT_EQ(tower.mul(tower.mul(g1, h), tower.inv(g1)), h);
  auto k = tower.h(0, 1, 1, 0);
  EXPECT_EQ(tower.conj(k, g1), k);
}

TEST_F(TowerTest, CancellingPowersReduceToIdentity)
{
  EXPECT_TRUE(tower.mul(tower.stable(1, 2), tower.stable(1, -2)).is_identity());
  RawWord raw{StableSyllable{3, 2}, StableSyllable{3, -2}};
  EXPECT_TRUE(tower.reduce(raw).is_identity());
}

TEST_F(TowerTest, ConjugatingH0ByG2StaysReduced)
{
  auto h = tower.h(0, 1, 0, 0);
  auto w = tower.conj(h, g2);
  EXPECT_EQ(w.level(), 2u);
  EXPECT_EQ(w.syllable_count(), 2u);
  EXPECT_FALSE(tower.member(w, Subgroup::k()));
  EXPECT_FALSE(tower.eq(w, e));
}

TEST_F(TowerTest, InverseOfAlternatingWord)
{
  auto x0 = tower.h(0, 1, 0, 0);
  auto x1 = e12;
  auto w = tower.mul(tower.mul(x0, tower.stable(1, 3)), x1);
  auto want = tower.mul(tower.mul(tower.inv(x1), tower.stable(1, -3)), tower.inv(x0));
  EXPECT_EQ(tower.inv(w), want);
  EXPECT_TRUE(tower.mul(w, tower.inv(w)).is_identity());
  EXPECT_TRUE(tower.inv(e).is_identity());
}

TEST_F(TowerTest, InverseInK)
{
  auto& ps = tower.primes();
  KVector k(make_hn(ps, 2, 1, 2, 3));
  EXPECT_EQ(tower.inv(tower.k(k)), tower.k(KVector::negate(ps, k)));
}

TEST_F(TowerTest, Equality)
{
  auto h = tower.h(0, 1, 1, 1);
  EXPECT_TRUE(tower.eq(h, h));
  EXPECT_TRUE(tower.eq(tower.conj(h, g1), h));
  EXPECT_FALSE(tower.eq(tower.conj(e12, g1), e12));
  EXPECT_EQ(tower.conj(e12, g1).syllable_count(), 2u);
}

TEST_F(TowerTest, Membership)
{
  for (unsigned n = 0; n < 6; ++n) {
    EXPECT_TRUE(tower.member(e, Subgroup::k_from(n)));
    EXPECT_TRUE(tower.member(e, Subgroup::g_level(n)));
  }
  auto h3 = tower.h(3, 0, 1, 0);
  EXPECT_FALSE(tower.member(h3, Subgroup::k_from(5)));
  EXPECT_TRUE(tower.member(h3, Subgroup::k_from(2)));
  EXPECT_TRUE(tower.member(h3, Subgroup::k_from(3)));
  EXPECT_FALSE(tower.member(h3, Subgroup::lambda()));
  EXPECT_TRUE(tower.member(e12, Subgroup::lambda()));
  EXPECT_FALSE(tower.member(e12, Subgroup::k()));
  EXPECT_FALSE(tower.member(g2, Subgroup::g_level(1)));
  EXPECT_TRUE(tower.member(g2, Subgroup::g_level(2)));
}

TEST_F(TowerTest, ConjugatedKLandsInKIffInKN)
{
  for (unsigned n = 0; n < 4; ++n) {
    auto t = tower.stable(n + 1);
    for (std::size_t idx = 0; idx < 6; ++idx) {
      auto k = tower.h(idx, 1, 0, 1);
      EXPECT_EQ(tower.member(tower.conj(k, t), Subgroup::k()), idx >= n)
        << "N=" << n << " index=" << idx;
    }
  }
}

TEST_F(TowerTest, ConjByLambdaActsOnH)
{
  auto x = tower.h(2, 1, 2, 3);
  auto l = LambdaMatrix::from_entries({2, 1, 0, 1, 1, 0, 0, 0, 1});
  auto want = tower.k(KVector(HnVector{2, l.act({1, 2, 3}, 5)}));
  EXPECT_EQ(tower.conj(x, tower.lambda(l)), want);
}

TEST_F(TowerTest, ConjOfStableByLambdaIsNew)
{
  auto w = tower.conj(g1, e12);
  EXPECT_EQ(w.level(), 1u);
  EXPECT_FALSE(tower.eq(w, g1));
  EXPECT_EQ(tower.conj(g1, e), g1);
}

TEST_F(TowerTest, SplitCosetReassembles)
{
  auto& ps = tower.primes();
  std::vector<HnVector> parts{make_hn(ps, 0, 1, 0, 0), make_hn(ps, 2, 1, 1, 1)};
  auto x = tower.g0({KVector::from_components(ps, parts), LambdaMatrix::elementary(1, 2, 1)});
  auto w = tower.mul(tower.mul(x, g2), x);
  for (unsigned n = 0; n < 4; ++n) {
    auto [c, k] = tower.split_coset(w, n);
    EXPECT_TRUE(tower.member(k, Subgroup::k_from(n)));
    EXPECT_EQ(tower.mul(c, k), w);
    // Representatives do not depend on the coset element chosen.
    auto [c2, k2] = tower.split_coset(tower.mul(w, tower.h(n + 1, 0, 2, 1)), n);
    EXPECT_EQ(c2, c);
  }
}

TEST_F(TowerTest, FlattenReduceRoundTrip)
{
  auto w = tower.mul(tower.mul(tower.conj(tower.h(0, 1, 0, 0), g2), e12), tower.stable(1, -4));
  EXPECT_EQ(tower.reduce(tower.flatten(w)), w);
}

TEST_F(TowerTest, PowMatchesRepeatedProduct)
{
  auto w = tower.mul(g1, e12);
  Word acc;
  for (int i = 0; i < 5; ++i)
    acc = tower.mul(acc, w);
  EXPECT_EQ(tower.pow(w, 5), acc);
  EXPECT_EQ(tower.pow(w, -5), tower.inv(acc));
  EXPECT_EQ(tower.pow(g2, 7), tower.stable(2, 7));
}

TEST_F(TowerTest, ConjugateGrowth)
{
  EXPECT_THROW(tower.conjugate_growth(e, 2), Error);
  EXPECT_EQ(tower.conjugate_growth(g1, 0), 1u);
  std::size_t prev = 1;
  for (unsigned r = 1; r <= 3; ++r) {
    auto c = tower.conjugate_growth(g1, r);
    EXPECT_GT(c, prev);
    prev = c;
  }
  // lambda x g1 x lambda^{-1} are pairwise distinct, so the count is the ball size.
  EXPECT_EQ(tower.conjugate_growth(g1, 2), 121u);
}

TEST_F(TowerTest, KElementsGrowThroughTheNextStableLetter)
{
  auto h = tower.h(0, 1, 0, 0);
  std::size_t prev = 0;
  for (unsigned r = 0; r <= 3; ++r) {
    auto c = tower.conjugate_growth(h, r);
    EXPECT_GE(c, prev);
    prev = c;
  }
  EXPECT_GE(prev, 5u);
}

TEST_F(TowerTest, LambdaConjugatesOfH0FillTheNonzeroOrbit)
{
  auto h = tower.h(0, 1, 0, 0);
  EXPECT_EQ(tower.lambda_conjugate_count(h, 0), 1u);
  std::size_t count = 0;
  for (unsigned r = 0; r <= 4 && count < 7; ++r)
    count = tower.lambda_conjugate_count(h, r);
  EXPECT_EQ(count, 7u); // 2^3 - 1
  auto h1 = tower.h(1, 0, 0, 1);
  for (unsigned r = 0; r <= 6 && count < 26; ++r)
    count = tower.lambda_conjugate_count(h1, r);
  EXPECT_EQ(count, 26u);
}

TEST_F(TowerTest, StableOfLevelZeroIsRejected)
{
  EXPECT_THROW(tower.stable(0), Error);
  EXPECT_TRUE(tower.stable(4, 0).is_identity());
}
