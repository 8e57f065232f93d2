#include <gtest/gtest.h>

#include <random>

#include "hotword/similarity.hpp"
#include "oracles.hpp"

namespace hotword {
namespace {

TEST(EditDistance, Examples) {
  EXPECT_EQ(edit_distance("bob", "bob"), 0u);
  EXPECT_EQ(edit_distance("", "abc"), 3u);
  // Full-table oracle gives 3.
  ASSERT_EQ(oracle::table_edit_distance("kitten", "sitting"), 3u);
  EXPECT_EQ(edit_distance("kitten", "sitting"), 3u);
}

TEST(EditDistance, MatchesRecursiveOracleAndIsAMetric) {
  std::mt19937 rng(42);
  auto word = [&] {
    std::string w;
    for (int i = 0, n = static_cast<int>(rng() % 7); i < n; ++i) w.push_back("abc"[rng() % 3]);
    return w;
  };
  for (int trial = 0; trial < 1500; ++trial) {
    const auto a = word(), b = word(), c = word();
    const auto ab = edit_distance(a, b);
    EXPECT_EQ(ab, oracle::recursive_edit_distance(a, b)) << a << " / " << b;
    EXPECT_EQ(ab, edit_distance(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_LE(edit_distance(a, c), ab + edit_distance(b, c));
  }
}

TEST(Similarity, Examples) {
  EXPECT_DOUBLE_EQ(similarity("bob", "bob"), 1.0);
  ASSERT_EQ(oracle::table_edit_distance("bob", "book"), 2u);
  EXPECT_DOUBLE_EQ(similarity("bob", "book"), 0.5);
  EXPECT_DOUBLE_EQ(similarity("a", "b"), 0.0);
  EXPECT_DOUBLE_EQ(similarity("", "ab"), 0.0);
}

TEST(Similarity, BothEmptyIsUndefined) {
  try {
    similarity("", "");
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "undefined similarity");
  }
}

TEST(Similarity, SymmetricBoundedAndOneOnlyForEqual) {
  std::mt19937 rng(7);
  auto word = [&] {
    std::string w;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 8); i < n; ++i) w.push_back("abcd"[rng() % 4]);
    return w;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = word(), b = word();
    const double s = similarity(a, b);
    EXPECT_EQ(s, similarity(b, a));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    EXPECT_EQ(s == 1.0, a == b);
    EXPECT_EQ(similarity(a, a), 1.0);
  }
}

TEST(MinDistance, Examples) {
  // Distances 3, 1, 3.
  EXPECT_EQ(min_distance_to_sentence("bob", Tokens{"i", "bobb", "joe"}), (NearestToken{1, 1}));
  EXPECT_EQ(min_distance_to_sentence("bob", Tokens{"bob"}), (NearestToken{0, 0}));
  // Distances 1, 2.
  EXPECT_EQ(min_distance_to_sentence("joe", Tokens{"jo", "j"}), (NearestToken{1, 0}));
}

TEST(MinDistance, EarliestTokenWinsTies) {
  EXPECT_EQ(min_distance_to_sentence("ab", Tokens{"xb", "ax", "ab"}), (NearestToken{0, 2}));
  EXPECT_EQ(min_distance_to_sentence("ab", Tokens{"xb", "ax"}), (NearestToken{1, 0}));
}

TEST(MinDistance, EmptySentenceThrows) {
  EXPECT_THROW(min_distance_to_sentence("bob", Tokens{}), Error);
}

TEST(MinDistance, BoundedByEveryToken) {
  std::mt19937 rng(3);
  auto word = [&] {
    std::string w;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 6); i < n; ++i) w.push_back("abcde"[rng() % 5]);
    return w;
  };
  for (int trial = 0; trial < 300; ++trial) {
    Tokens toks;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 6); i < n; ++i) toks.push_back(word());
    const auto cand = word();
    const auto best = min_distance_to_sentence(cand, toks);
    for (const auto& t : toks) EXPECT_LE(best.distance, edit_distance(cand, t));
    EXPECT_EQ(best.distance, edit_distance(cand, toks[best.position]));
  }
}

}  // namespace
}  // namespace hotword
