#include <map>
#include <set>

#include <gtest/gtest.h>

#include <amalg/finite_action.hpp>

using namespace amalg;

namespace {

using Point = std::vector<std::array<long, 3>>;

// Orbit sizes by plain BFS on coordinate tuples with hand-written generators.
std::multiset<std::size_t> oracle_orbit_sizes(const std::vector<long>& ps)
{
  std::vector<Point> all{Point{}};
  for (long p : ps) {
    std::vector<Point> next;
    for (const auto& pt : all)
      for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
          for (long c = 0; c < p; ++c) {
            auto q = pt;
            q.push_back({a, b, c});
            next.push_back(q);
          }
    all = next;
  }
  std::set<Point> seen;
  std::multiset<std::size_t> sizes;
  for (const auto& start : all) {
    if (seen.count(start))
      continue;
    std::vector<Point> stack{start};
    seen.insert(start);
    std::size_t count = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j)
            for (long s : {1L, -1L}) {
              auto y = x;
              for (std::size_t f = 0; f < ps.size(); ++f)
                y[f][i] = (((x[f][i] + s * x[f][j]) % ps[f]) + ps[f]) % ps[f];
              if (seen.insert(y).second) {
                ++count;
                stack.push_back(y);
              }
            }
    }
    sizes.insert(count);
  }
  return sizes;
}

// Dense exact rank of the invariance equations, for small domains.
std::size_t oracle_fixed_dimension(const PrimeSeq& ps, std::vector<std::size_t> idx)
{
  ProductDomain d(ps, idx);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : elementary_generators()) {
    auto perm = d.permutation(g);
    for (std::size_t x = 0; x < d.size(); ++x) {
      std::vector<Rational> r(d.size());
      r[x] -= 1;
      r[perm[x]] += 1;
      rows.push_back(r);
    }
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < d.size() && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0)
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][col] != 0) {
        Rational f = rows[r][col] / rows[rank][col];
        for (std::size_t c = col; c < d.size(); ++c)
          rows[r][c] -= f * rows[rank][c];
      }
    ++rank;
  }
  return d.size() - rank;
}

} // namespace

TEST(ActModP, Examples)
{
  PrimeSeq ps;
  HnVector x{0, {0, 1, 0}};
  EXPECT_EQ(act_mod_p(ps, LambdaMatrix::elementary(0, 1, 1), x).coords, (Triple{1, 1, 0}));
  HnVector y{2, {4, 3, 1}};
  EXPECT_EQ(act_mod_p(ps, LambdaMatrix{}, y), y);
  for (const auto& g : lambda_ball(2))
    EXPECT_TRUE(act_mod_p(ps, g, HnVector{1, {}}).is_zero());
}

TEST(ActModP, Functoriality)
{
  PrimeSeq ps;
  auto ball = lambda_ball(2);
  for (std::size_t n : {0, 1, 2}) {
    auto p = ps.at(n);
    for (std::size_t i = 0; i < ball.size(); i += 7)
      for (std::size_t j = 0; j < ball.size(); j += 11)
        for (Residue a = 0; a < p; ++a)
          for (Residue b = 0; b < p; ++b)
            for (Residue c = 0; c < p; ++c) {
              HnVector x{n, {a, b, c}};
              ASSERT_EQ(act_mod_p(ps, ball[i] * ball[j], x),
                        act_mod_p(ps, ball[i], act_mod_p(ps, ball[j], x)));
            }
  }
}

TEST(ProductDomain, LexicographicCodes)
{
  PrimeSeq ps;
  ProductDomain d(ps, {0, 1});
  EXPECT_EQ(d.size(), 216u);
  auto pt = d.point(28);
  EXPECT_EQ(pt[0].coords, (Triple{0, 0, 1}));
  EXPECT_EQ(pt[1].coords, (Triple{0, 0, 1}));
  EXPECT_EQ(d.join(d.split(137)), 137u);
  EXPECT_EQ(d.zero_pattern(27), 0b01u);
}

TEST(ProductDomain, SizeGuard)
{
  PrimeSeq ps;
  try {
    ProductDomain d(ps, {0, 1, 2, 3, 4, 5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size_guard);
  }
  EXPECT_THROW(ProductDomain(ps, {1, 1}), Error);
  EXPECT_THROW(diagonal_orbits(ps, {0, 1, 2}, 1000), Error);
}

TEST(DiagonalOrbits, SingleFactorOfOrderEight)
{
  auto o = diagonal_orbits(PrimeSeq{}, {0});
  EXPECT_EQ(o.sizes(), (std::vector<std::size_t>{1, 7}));
  EXPECT_EQ(o.blocks[1].representative, 1u);
  EXPECT_TRUE(o.matches_zero_pattern_classification());
}

TEST(DiagonalOrbits, TwoAndThreeFactors)
{
  PrimeSeq ps;
  auto o2 = diagonal_orbits(ps, {0, 1});
  auto s2 = o2.sizes();
  EXPECT_EQ(std::multiset<std::size_t>(s2.begin(), s2.end()), oracle_orbit_sizes({2, 3}));
  EXPECT_EQ(std::multiset<std::size_t>(s2.begin(), s2.end()),
            (std::multiset<std::size_t>{1, 7, 26, 182}));
  EXPECT_TRUE(o2.matches_zero_pattern_classification());

  auto o3 = diagonal_orbits(ps, {0, 1, 2});
  ASSERT_EQ(o3.blocks.size(), 8u);
  std::size_t total = 0;
  std::multiset<std::size_t> want;
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::size_t size = 1;
    for (unsigned i = 0; i < 3; ++i)
      if (mask & (1u << i))
        size *= ps.at(i) * ps.at(i) * ps.at(i) - 1;
    want.insert(size);
  }
  for (const auto& b : o3.blocks)
    total += b.size;
  EXPECT_EQ(total, 27000u);
  auto s3 = o3.sizes();
  EXPECT_EQ(std::multiset<std::size_t>(s3.begin(), s3.end()), want);
  EXPECT_TRUE(o3.matches_zero_pattern_classification());
}

TEST(DiagonalOrbits, EverySubsetOfTheFirstThreePrimes)
{
  PrimeSeq ps;
  for (unsigned mask = 1; mask < 8; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 3; ++i)
      if (mask & (1u << i))
        idx.push_back(i);
    auto o = diagonal_orbits(ps, idx);
    EXPECT_EQ(o.blocks.size(), std::size_t{1} << idx.size());
    EXPECT_TRUE(o.matches_zero_pattern_classification());
    // Representatives are the least points of their blocks.
    std::vector<std::size_t> least(o.blocks.size(), SIZE_MAX);
    for (std::size_t x = 0; x < o.block_of.size(); ++x)
      least[o.block_of[x]] = std::min(least[o.block_of[x]], x);
    for (std::size_t b = 0; b < o.blocks.size(); ++b)
      EXPECT_EQ(o.blocks[b].representative, least[b]);
  }
}

TEST(DiagonalOrbits, BlocksAreClosedUnderGenerators)
{
  PrimeSeq ps;
  auto o = diagonal_orbits(ps, {1, 2});
  for (const auto& g : elementary_generators()) {
    auto perm = o.domain.permutation(g);
    for (std::size_t x = 0; x < perm.size(); ++x)
      ASSERT_EQ(o.block_of[x], o.block_of[perm[x]]);
  }
}

TEST(FixedPointDimension, Examples)
{
  PrimeSeq ps;
  EXPECT_EQ(fixed_point_dimension(ps, {}), 1u);
  EXPECT_EQ(fixed_point_dimension(ps, {0}), 2u);
  EXPECT_EQ(fixed_point_dimension(ps, {0, 1}), 4u);
}

TEST(FixedPointDimension, MatchesDenseElimination)
{
  PrimeSeq ps;
  EXPECT_EQ(oracle_fixed_dimension(ps, {0}), 2u);
  EXPECT_EQ(oracle_fixed_dimension(ps, {1}), 2u);
  EXPECT_EQ(fixed_point_dimension(ps, {1}), oracle_fixed_dimension(ps, {1}));
}

TEST(FixedPointDimension, EqualsOrbitCount)
{
  PrimeSeq ps;
  for (auto idx : std::vector<std::vector<std::size_t>>{{0}, {2}, {0, 1}, {1, 2}, {0, 1, 2}})
    EXPECT_EQ(fixed_point_dimension(ps, idx), diagonal_orbits(ps, idx).blocks.size());
}

TEST(SparseEliminator, GeneralRows)
{
  SparseEliminator<Rational> e;
  using R = SparseEliminator<Rational>::Row;
  EXPECT_TRUE(e.add_row(R{{0, 2}, {3, 1}}));
  EXPECT_TRUE(e.add_row(R{{1, 1}, {3, Rational(1, 2)}}));
  EXPECT_FALSE(e.add_row(R{{0, 4}, {1, -2}, {3, 1}}));
  EXPECT_TRUE(e.add_row(R{{2, 5}}));
  EXPECT_FALSE(e.add_row(R{}));
  EXPECT_EQ(e.rank(), 3u);
}
