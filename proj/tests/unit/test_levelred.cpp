#include <gtest/gtest.h>

#include "klr/levelred.hpp"
#include "oracles.hpp"

using namespace klr;

namespace {

const CartanData& nil() {
  static const CartanData c = validate_cartan({{2}});
  return c;
}

LevelSplit split_of(std::initializer_list<std::vector<long long>> parts) {
  LevelSplit s;
  for (const auto& p : parts) s.parts.emplace_back(p);
  return s;
}

}  // namespace

TEST(LevelRed, Splits) {
  EXPECT_EQ(level_splits(Weight({2}), 2).size(), 3u);
  EXPECT_EQ(level_splits(Weight({1, 1}), 2).size(), 4u);
  EXPECT_EQ(level_splits(Weight({2, 1}), 3).size(), 18u);
  for (const auto& s : level_splits(Weight({2, 1}), 3)) EXPECT_EQ(s.sum(2), Weight({2, 1}));
  EXPECT_THROW(split_of({{1}, {0}}).validate(nil(), Weight({2})), Error);
}

TEST(LevelRed, PairExamples) {
  const auto s = split_of({{1}, {1}});
  EXPECT_EQ(reduce_pair_dim(nil(), IndexTuple{0}, IndexTuple{0}, s), 2);
  EXPECT_EQ(reduce_pair_dim(nil(), IndexTuple{0, 0}, IndexTuple{0, 0}, s), 4);
  EXPECT_EQ(reduce_pair_dim(nil(), IndexTuple{}, IndexTuple{}, s), 1);
  EXPECT_THROW(reduce_pair_dim(nil(), IndexTuple{0}, IndexTuple{0}, split_of({{2}})), Error);
}

TEST(LevelRed, BlockExamples) {
  EXPECT_EQ(reduce_block_dim(nil(), RootElement({2}), split_of({{1}, {1}})), 4);
  EXPECT_EQ(reduce_block_dim(nil(), RootElement({2}), split_of({{2}})), block_dim(nil(), Weight({2}), RootElement({2})));
  EXPECT_EQ(multinomial({2, 1}), 3);
  EXPECT_EQ(root_decompositions(RootElement({1, 1}), 2).size(), 4u);
}

TEST(LevelRed, AffineThreeParts) {
  const auto c = builtin_cartan("A1~");
  const auto s = split_of({{1, 0}, {0, 1}, {0, 1}});
  BigInt total = 0;
  for (const auto& beta : roots_of_height(2, 2)) {
    const auto r = reduce_block_dim(c, beta, s);
    EXPECT_EQ(r, block_dim(c, Weight({1, 2}), beta));
    total += r;
  }
  EXPECT_EQ(total, 18);
}

TEST(LevelRed, PairIdentityAgainstBruteForce) {
  for (const char* name : {"A2", "A1~", "G2"}) {
    const auto c = builtin_cartan(name);
    for (const auto& lam : dominant_weights(c.rank(), 2, 3))
      for (std::size_t l = 2; l <= 3; ++l)
        for (const auto& split : level_splits(lam, l))
          for (long long n = 1; n <= 3; ++n)
            for (const auto& beta : roots_of_height(c.rank(), n))
              for (const auto& nu : tuples_of(beta))
                for (const auto& mu : tuples_of(beta))
                  ASSERT_EQ(reduce_pair_dim_multi(c, nu, mu, split), oracle::dim(c, lam, nu, mu)) << name;
  }
}

TEST(LevelRed, AllFundamentalParts) {
  // l = n with fundamental parts: every factor is a level-one dimension of length <= n.
  const auto c = builtin_cartan("A2");
  const auto s = split_of({{1, 0}, {1, 0}, {0, 1}});
  for (const auto& beta : roots_of_height(2, 3))
    for (const auto& nu : tuples_of(beta))
      for (const auto& mu : tuples_of(beta))
        EXPECT_EQ(reduce_pair_dim_multi(c, nu, mu, s), oracle::dim(c, Weight({2, 1}), nu, mu));
}

TEST(LevelRed, GradedAnalogueFails) {
  const auto s = split_of({{1}, {1}});
  const auto lhs = reduce_block_graded_sum(nil(), RootElement({1}), s);
  const auto rhs = block_graded_dim(nil(), Weight({2}), RootElement({1}));
  EXPECT_EQ(lhs, LaurentPoly(2));
  EXPECT_EQ(rhs.to_string(), "1+q^2");
  EXPECT_NE(lhs, rhs);
  EXPECT_EQ(lhs.eval_one(), rhs.eval_one());
}
