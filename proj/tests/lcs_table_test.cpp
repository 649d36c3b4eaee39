#include <gtest/gtest.h>

#include "repseq/bench.hpp"
#include "repseq/lcs_table.hpp"
#include "test_support.hpp"

namespace repseq {
namespace {

LcsTable table_of(std::vector<std::string_view> s) { return LcsTable(s); }

TEST(LcsTableTest, Examples) {
  EXPECT_EQ(table_of({"abca", "aca"})(4, 3), 3u);
  EXPECT_EQ(table_of({"ab", "ab", "ab"})(2, 2, 2), 2u);
  const auto empty = table_of({"", "xyz"});
  for (std::size_t j = 0; j <= 3; ++j) EXPECT_EQ(empty(0, j), 0u);
  EXPECT_EQ(table_of({"abcd", "bd", "xbd", "bbd"}).corner(), 2u);
}

TEST(LcsTableTest, RejectsArity) {
  std::vector<std::string_view> one{"a"};
  std::vector<std::string_view> five{"a", "a", "a", "a", "a"};
  EXPECT_THROW(LcsTable{one}, std::invalid_argument);
  EXPECT_THROW(LcsTable{five}, std::invalid_argument);
}

TEST(LcsTableTest, CellInvariants) {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const auto a = testing::random_text(rng, 0, 7, 3), b = testing::random_text(rng, 0, 7, 3),
               c = testing::random_text(rng, 0, 7, 3);
    const auto t = table_of({a, b, c});
    for (std::size_t i = 0; i <= a.size(); ++i)
      for (std::size_t j = 0; j <= b.size(); ++j)
        for (std::size_t k = 0; k <= c.size(); ++k) {
          const auto v = t(i, j, k);
          ASSERT_LE(v, std::min({i, j, k}));
          if (i > 0) {
            ASSERT_LE(t(i - 1, j, k), v);
            ASSERT_LE(v, t(i - 1, j, k) + 1);
          }
          if (j > 0) {
            ASSERT_LE(t(i, j - 1, k), v);
            ASSERT_LE(v, t(i, j - 1, k) + 1);
          }
          if (k > 0) {
            ASSERT_LE(t(i, j, k - 1), v);
            ASSERT_LE(v, t(i, j, k - 1) + 1);
          }
        }
  }
}

TEST(LcsTableTest, TraceSpellsACommonSubsequence) {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    std::vector<std::string> strs;
    const auto k = 2 + rng.below(3);
    for (std::size_t j = 0; j < k; ++j) strs.push_back(testing::random_text(rng, 0, 6, 2));
    std::vector<std::string_view> views(strs.begin(), strs.end());
    const LcsTable t(views);
    LcsTable::Index corner{};
    for (std::size_t j = 0; j < k; ++j) corner[j] = strs[j].size();
    const auto tuples = t.trace(corner);
    ASSERT_EQ(tuples.size(), t.corner());
    for (std::size_t m = 0; m < tuples.size(); ++m)
      for (std::size_t j = 0; j < k; ++j) {
        ASSERT_GE(tuples[m][j], 1u);
        ASSERT_EQ(strs[j][tuples[m][j] - 1], strs[0][tuples[m][0] - 1]);
        if (m > 0) ASSERT_LT(tuples[m - 1][j], tuples[m][j]);
      }
  }
}

TEST(LcsTableTest, MatchesBruteForcePairsUpToSix) {
  testing::for_each_binary(6, [](const std::string& a) {
    testing::for_each_binary(6, [&](const std::string& b) {
      ASSERT_EQ(table_of({a, b}).corner(), testing::brute_lcs({a, b})) << a << " " << b;
    });
  });
}

TEST(LcsTableTest, MatchesBruteForceRandomQuadruples) {
  SplitMix64 rng(3);
  for (int iter = 0; iter < 500; ++iter) {
    std::vector<std::string> s;
    for (int j = 0; j < 4; ++j) s.push_back(testing::random_text(rng, 0, 8, 2));
    std::vector<std::string_view> v(s.begin(), s.end());
    ASSERT_EQ(LcsTable(v).corner(), testing::brute_lcs(v));
  }
}

}  // namespace
}  // namespace repseq
