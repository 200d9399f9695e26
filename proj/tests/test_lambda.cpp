#include <array>
#include <set>

#include <gtest/gtest.h>

#include <amalg/lambda.hpp>

using namespace amalg;

namespace {

// Plain 64-bit BFS over SL(3,Z), independent of LambdaMatrix.
using M = std::array<long, 9>;

M matmul(const M& a, const M& b)
{
  M out{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      for (int k = 0; k < 3; ++k)
        out[r * 3 + c] += a[r * 3 + k] * b[k * 3 + c];
  return out;
}

std::vector<std::size_t> oracle_ball_sizes(unsigned max_radius)
{
  std::vector<M> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j)
        for (long s : {1L, -1L}) {
          M g{1, 0, 0, 0, 1, 0, 0, 0, 1};
          g[i * 3 + j] = s;
          gens.push_back(g);
        }
  std::set<M> ball{M{1, 0, 0, 0, 1, 0, 0, 0, 1}};
  std::vector<std::size_t> sizes{1};
  for (unsigned r = 0; r < max_radius; ++r) {
    auto prev = ball;
    for (const auto& a : prev)
      for (const auto& g : gens)
        ball.insert(matmul(a, g));
    sizes.push_back(ball.size());
  }
  return sizes;
}

} // namespace

TEST(LambdaMatrix, RejectsDeterminantOtherThanOne)
{
  EXPECT_THROW(LambdaMatrix::from_entries({2, 0, 0, 0, 1, 0, 0, 0, 1}), Error);
  EXPECT_THROW(LambdaMatrix::from_entries({-1, 0, 0, 0, 1, 0, 0, 0, 1}), Error);
  EXPECT_NO_THROW(LambdaMatrix::from_entries({0, 1, 0, -1, 0, 0, 0, 0, 1}));
}

TEST(LambdaMatrix, InverseAndTranspose)
{
  auto g = LambdaMatrix::from_entries({2, 1, 0, 1, 1, 0, 0, 3, 1});
  EXPECT_TRUE((g * g.inverse()).is_identity());
  EXPECT_TRUE((g.inverse() * g).is_identity());
  EXPECT_EQ(g.transpose()(2, 1), 0);
  EXPECT_EQ(g.transpose()(1, 2), 3);
  EXPECT_EQ(g.transpose().determinant(), 1);
}

TEST(LambdaMatrix, EntriesDoNotOverflow)
{
  auto g = LambdaMatrix::from_entries({2, 1, 0, 1, 1, 0, 0, 0, 1});
  LambdaMatrix p;
  for (int i = 0; i < 200; ++i)
    p = p * g;
  EXPECT_EQ(p.determinant(), 1);
  EXPECT_GT(p(0, 0), Int(1) << 100);
}

TEST(LambdaMatrix, ActModP)
{
  auto e12 = LambdaMatrix::elementary(0, 1, 1);
  EXPECT_EQ(e12.act({0, 1, 0}, 2), (Triple{1, 1, 0}));
  EXPECT_EQ(LambdaMatrix{}.act({1, 2, 3}, 5), (Triple{1, 2, 3}));
  EXPECT_EQ(LambdaMatrix::elementary(2, 0, -1).act({1, 0, 0}, 3), (Triple{1, 0, 2}));
}

TEST(LambdaBall, SizesMatchBruteForce)
{
  auto oracle = oracle_ball_sizes(3);
  ASSERT_EQ(oracle, (std::vector<std::size_t>{1, 13, 121, 883}));
  for (unsigned r = 0; r <= 3; ++r)
    EXPECT_EQ(lambda_ball(r).size(), oracle[r]) << "radius " << r;
}

TEST(LambdaBall, ZeroIsIdentityAndBallsAreMonotone)
{
  auto b0 = lambda_ball(0);
  ASSERT_EQ(b0.size(), 1u);
  EXPECT_TRUE(b0[0].is_identity());
  auto b1 = lambda_ball(1);
  auto b2 = lambda_ball(2);
  EXPECT_TRUE(std::includes(b2.begin(), b2.end(), b1.begin(), b1.end()));
  for (const auto& m : b2)
    EXPECT_EQ(m.determinant(), 1);
}
