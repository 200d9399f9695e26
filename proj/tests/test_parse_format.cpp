#include <gtest/gtest.h>

#include <amalg/format.hpp>
#include <amalg/parse.hpp>

#include "generators.hpp"

using namespace amalg;

class ParseFormat : public ::testing::Test
{
protected:
  Tower tower;
};

TEST_F(ParseFormat, Identity)
{
  EXPECT_TRUE(parse_element(tower, "e").is_identity());
  EXPECT_TRUE(parse_element(tower, "  e * e ").is_identity());
  EXPECT_EQ(format(tower.identity()), "e");
}

TEST_F(ParseFormat, HnVector)
{
  EXPECT_EQ(parse_element(tower, "h(0;1,0,1)"), tower.h(0, 1, 0, 1));
  EXPECT_EQ(parse_element(tower, "h( 2 ; -1, 7 ,3 )"), tower.h(2, 4, 2, 3));
  EXPECT_EQ(format(tower.h(0, 1, 0, 1)), "h(0;1,0,1)");
}

TEST_F(ParseFormat, StableConjugate)
{
  auto w = parse_element(tower, "t(2)^3 * h(0;1,0,0) * t(2)^-3");
  auto want = tower.conj(tower.h(0, 1, 0, 0), tower.stable(2, 3));
  EXPECT_EQ(w, want);
  EXPECT_EQ(w.level(), 2u);
  EXPECT_EQ(format(w), "t(2)^3 * h(0;1,0,0) * t(2)^-3");
  EXPECT_EQ(format(tower.conj(tower.h(0, 1, 0, 0), tower.stable(2))), "t(2) * h(0;1,0,0) * t(2)^-1");
}

TEST_F(ParseFormat, MatrixAndInverse)
{
  auto w = parse_element(tower, "L[1,1,0;0,1,0;0,0,1]^-1");
  EXPECT_EQ(w, tower.lambda(LambdaMatrix::elementary(0, 1, -1)));
  EXPECT_EQ(format(w), "L[1,-1,0;0,1,0;0,0,1]");
  EXPECT_TRUE(parse_element(tower, "(t(1) L[0,1,0;-1,0,0;0,0,1])^4 (t(1) L[0,1,0;-1,0,0;0,0,1])^-4")
                .is_identity());
}

TEST_F(ParseFormat, SyntaxErrorsCarryPosition)
{
  try {
    parse_element(tower, "h(0;1,0) * e");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::syntax);
    EXPECT_EQ(e.position(), 7u);
  }
  EXPECT_THROW(parse_element(tower, "L[2,0,0;0,1,0;0,0,1]"), Error);
  EXPECT_THROW(parse_element(tower, "t(0)"), Error);
  EXPECT_THROW(parse_element(tower, ""), Error);
  EXPECT_THROW(parse_element(tower, "e )"), Error);
}

TEST_F(ParseFormat, UnconfiguredIndex)
{
  Tower small(PrimeSeq({2, 3}));
  try {
    parse_element(small, "h(2;1,0,0)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::index_out_of_range);
  }
}

TEST_F(ParseFormat, FormatThenParseIsIdentity)
{
  amalg::testing::WordGen gen(tower, 7);
  for (int i = 0; i < 300; ++i) {
    auto w = gen.word(8, 3);
    ASSERT_EQ(parse_element(tower, format(w)), w) << format(w);
  }
}
