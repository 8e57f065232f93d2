#include <gtest/gtest.h>

#include <sstream>

#include "hotword/io.hpp"

namespace hotword {
namespace {

TEST(CorpusTsv, ParsesAndNormalizes) {
  std::istringstream in("u2\tHello, World\n\nu1\tBOB'S car.\r\nu3\n");
  const auto c = io::parse_corpus_tsv(in);
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], (Utterance{"u2", {"hello", "world"}}));
  EXPECT_EQ(c[1], (Utterance{"u1", {"bob's", "car"}}));
  EXPECT_EQ(c[2], (Utterance{"u3", {}}));
}

TEST(CorpusTsv, DuplicateIdIsAnError) {
  std::istringstream in("a\tx\na\ty\n");
  EXPECT_THROW(io::parse_corpus_tsv(in), Error);
}

TEST(CorpusTsv, MissingFileIsFileError) {
  EXPECT_THROW(io::read_corpus_tsv("/nonexistent/corpus.tsv"), io::FileError);
}

TEST(BiasListFile, DuplicatesWarnAndFirstWins) {
  std::istringstream in("Bob\njoe\n\nBOB\nnew  york\n");
  std::ostringstream warn;
  const auto list = io::parse_bias_list(in, &warn);
  EXPECT_EQ(list.surfaces(), (std::vector<std::string>{"bob", "joe", "new york"}));
  EXPECT_NE(warn.str().find("duplicate biasing entry 'bob'"), std::string::npos);
}

TEST(BiasJsonl, ParsesRecords) {
  std::istringstream in(R"({"utt_id":"b","hotwords":["Zed","kaplan"]}
{"utt_id":"a","hotwords":[]}
)");
  const auto m = io::parse_bias_jsonl(in);
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(m.at("b").surfaces(), (std::vector<std::string>{"zed", "kaplan"}));
  EXPECT_TRUE(m.at("a").empty());
  EXPECT_EQ(io::bias_record("b", m.at("b")).dump(), R"({"hotwords":["zed","kaplan"],"utt_id":"b"})");
}

TEST(BiasJsonl, MalformedLineThrows) {
  std::istringstream bad("{not json}\n");
  EXPECT_THROW(io::parse_bias_jsonl(bad), Error);
  std::istringstream missing(R"({"utt_id":"a"})");
  EXPECT_THROW(io::parse_bias_jsonl(missing), Error);
}

TEST(ScoreJson, PercentagesToTwoDecimals) {
  const auto r = score(Tokens{"meet", "bob", "today"}, Tokens{"meet", "rob", "today"},
                       BiasVocabulary(std::vector<std::string>{"bob"}));
  const auto j = io::score_json(r);
  EXPECT_EQ(j["wer"].dump(), "33.33");
  EXPECT_EQ(j["b_wer"].dump(), "100.0");
  EXPECT_EQ(j["u_wer"].dump(), "0.0");
  EXPECT_EQ(j["counts"]["biased"]["sub"], 1);
  EXPECT_EQ(j["utterances"], 1);

  Rate undefined{2, 0};
  EXPECT_TRUE(io::percent(undefined).is_null());
  EXPECT_EQ(io::percent(Rate{127, 10000}).dump(), "1.27");
}

}  // namespace
}  // namespace hotword
