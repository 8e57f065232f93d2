#include <gtest/gtest.h>

#include <set>

#include "hotword/prompt.hpp"
#include "hotword/types.hpp"

namespace hotword {
namespace {

TEST(RenderPrompt, FillsTemplate) {
  EXPECT_EQ(render_prompt(std::vector<std::string>{"bob", "joe"}),
            "Transcribe speech to text. Some hotwords might help. The hotwords are bob joe");
  EXPECT_EQ(render_prompt(std::vector<std::string>{"x"}),
            "Transcribe speech to text. Some hotwords might help. The hotwords are x");
}

TEST(RenderPrompt, EmptyListKeepsTemplate) {
  const auto p = render_prompt(std::vector<std::string>{});
  EXPECT_EQ(p, "Transcribe speech to text. Some hotwords might help. The hotwords are ");
  EXPECT_NE(p, kPlainInstruction);
}

TEST(RenderPrompt, CustomSeparator) {
  PromptTemplate t;
  t.separator = ", ";
  EXPECT_EQ(render_prompt(std::vector<std::string>{"a", "b c"}, t),
            "Transcribe speech to text. Some hotwords might help. The hotwords are a, b c");
  t.hotword_clause = "no slot";
  EXPECT_THROW(render_prompt(std::vector<std::string>{}, t), Error);
}

TEST(RenderPrompt, InjectiveOnDistinctLists) {
  const std::vector<std::vector<std::string>> lists = {{}, {"a"}, {"b"}, {"a", "b"}, {"b", "a"}, {"a b"}, {"ab"}};
  std::set<std::string> seen;
  for (const auto& l : lists) seen.insert(render_prompt(l));
  // {"a","b"} and {"a b"} render identically; phrases are joined the same way.
  EXPECT_EQ(seen.size(), lists.size() - 1);
}

TEST(TrainingRecord, Formats) {
  EXPECT_EQ(render_training_record("P", "T"), "<speech> USER: P ASSISTANT: T");
  EXPECT_EQ(render_training_record("P", std::nullopt), "<speech> USER: P ASSISTANT: ");
  EXPECT_EQ(render_training_record("", ""), "<speech> USER:  ASSISTANT: ");
}

}  // namespace
}  // namespace hotword
