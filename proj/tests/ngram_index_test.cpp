#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "hotword/ngram_index.hpp"
#include "oracles.hpp"

namespace hotword {
namespace {

BiasingList list_of(std::vector<std::string> raw) { return BiasingList::from_strings(raw); }

std::map<std::string, std::set<std::string>> dump(const NgramIndex& index) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& [gram, ids] : index.grams())
    for (EntryId id : ids) out[gram].insert(index.entries()[id].surface);
  return out;
}

std::set<std::string> surfaces(const NgramIndex& index, const std::vector<EntryId>& ids) {
  std::set<std::string> out;
  for (EntryId id : ids) out.insert(index.entries()[id].surface);
  return out;
}

TEST(BiasingList, NormalizesAndDeduplicates) {
  const auto list = list_of({"Bob", "  joe ", "BOB", "", "New  York"});
  EXPECT_EQ(list.surfaces(), (std::vector<std::string>{"bob", "joe", "new york"}));
  EXPECT_EQ(list[2].id, 2u);
  EXPECT_TRUE(list.contains("new york"));
}

TEST(NgramIndex, BobJoePostings) {
  const NgramIndex index(list_of({"Bob", "Joe"}));
  const std::map<std::string, std::set<std::string>> expected = {
      {"bo", {"bob"}}, {"ob", {"bob"}}, {"jo", {"joe"}}, {"oe", {"joe"}}};
  EXPECT_EQ(dump(index), expected);
}

TEST(NgramIndex, RepeatedGramPostedOnce) {
  const NgramIndex index(list_of({"aa"}));
  ASSERT_EQ(index.grams().size(), 1u);
  EXPECT_EQ(*index.postings("aa"), std::vector<EntryId>{0});
  const NgramIndex repeated(list_of({"aaaa"}));
  EXPECT_EQ(*repeated.postings("aa"), std::vector<EntryId>{0});
}

TEST(NgramIndex, PhraseGramsIncludeSpaces) {
  const NgramIndex index(list_of({"ab cd"}));
  const std::set<std::string> expected = {"ab", "b ", " c", "cd"};
  std::set<std::string> got;
  for (const auto& [g, _] : index.grams()) got.insert(g);
  EXPECT_EQ(got, expected);
}

TEST(NgramIndex, SingleCharacterEntryIsRetrievable) {
  const NgramIndex index(list_of({"x", "xy"}));
  EXPECT_EQ(*index.postings("x"), std::vector<EntryId>{0});
  EXPECT_EQ(surfaces(index, index.retrieve(Tokens{"x"})), std::set<std::string>{"x"});
}

TEST(NgramIndex, EmptyListThrows) {
  try {
    NgramIndex index{BiasingList{}};
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "empty biasing list");
  }
}

TEST(Retrieve, PaperSentenceFindsBob) {
  const NgramIndex index(list_of({"bob", "joe"}));
  EXPECT_EQ(surfaces(index, index.retrieve(Tokens{"i", "like", "reading", "books"})), std::set<std::string>{"bob"});
  EXPECT_TRUE(index.retrieve(Tokens{}).empty());
  EXPECT_EQ(surfaces(index, index.retrieve(Tokens{"joe"})), std::set<std::string>{"joe"});
}

TEST(Retrieve, AgreesWithQuadraticGramScan) {
  std::mt19937 rng(2024);
  const std::string letters = "abcdefgh";
  auto word = [&](int lo, int hi) {
    std::string w;
    for (int i = 0, n = lo + static_cast<int>(rng() % (hi - lo + 1)); i < n; ++i) w.push_back(letters[rng() % letters.size()]);
    return w;
  };
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> raw;
    for (int i = 0, n = 1 + static_cast<int>(rng() % 40); i < n; ++i)
      raw.push_back(rng() % 5 == 0 ? word(1, 4) + " " + word(1, 4) : word(1, 7));
    const auto list = list_of(raw);
    const NgramIndex index(list);
    Tokens query;
    for (int i = 0, n = static_cast<int>(rng() % 6); i < n; ++i) query.push_back(word(1, 6));

    std::vector<EntryId> expected;
    for (const auto& e : list.entries())
      for (const auto& t : query)
        if (oracle::share_gram(e.surface, t)) {
          expected.push_back(e.id);
          break;
        }
    EXPECT_EQ(index.retrieve(query), expected);
  }
}

TEST(Retrieve, IndexInvariantsHold) {
  const auto list = list_of({"alpha", "beta", "gamma delta", "al", "q"});
  const NgramIndex index(list);
  for (const auto& e : list.entries()) {
    for (const auto& g : oracle::gram_set(e.surface)) {
      const auto* p = index.postings(g);
      ASSERT_NE(p, nullptr) << g;
      EXPECT_TRUE(std::binary_search(p->begin(), p->end(), e.id));
    }
    // An entry's own words always bring it back.
    const auto words = oracle::split_words(e.surface);
    const auto ids = index.retrieve(words);
    EXPECT_TRUE(std::binary_search(ids.begin(), ids.end(), e.id)) << e.surface;
  }
  for (const auto& [g, ids] : index.grams()) {
    EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
    EXPECT_EQ(std::adjacent_find(ids.begin(), ids.end()), ids.end());
    for (EntryId id : ids) EXPECT_LT(id, list.size());
  }
}

}  // namespace
}  // namespace hotword
