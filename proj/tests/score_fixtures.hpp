#pragma once

#include <string>
#include <vector>

namespace fixtures {

struct ScoreFixture {
  const char* name;
  std::string ref;
  std::string hyp;
  std::vector<std::string> bias;
};

// Hand-built cases covering substitutions, deletions and insertions on both
// sides of the biased/unbiased split, plus phrase entries and empty inputs.
inline const std::vector<ScoreFixture>& score_fixtures() {
  static const std::vector<ScoreFixture> f = {
      {"identical", "meet bob today", "meet bob today", {"bob"}},
      {"biased_sub", "meet bob today", "meet rob today", {"bob"}},
      {"unbiased_sub", "meet bob today", "meat bob today", {"bob"}},
      {"biased_del", "call bob now", "call now", {"bob"}},
      {"unbiased_del", "call bob now", "bob now", {"bob"}},
      {"biased_ins", "call bob now", "call bob bob now", {"bob"}},
      {"unbiased_ins", "call bob now", "call bob now please", {"bob"}},
      {"ins_of_listed_word", "hello there", "hello kaplan there", {"kaplan"}},
      {"all_deleted", "bobsworth met kaplan", "", {"bobsworth", "kaplan"}},
      {"empty_reference", "", "stray words", {"stray"}},
      {"both_empty", "", "", {"bob"}},
      {"mixed_errors", "the quick brown fox jumps", "a quick brow fox jumped high", {"fox", "brown"}},
      {"phrase_entry", "visit new york city", "visit new yark city", {"new york"}},
      {"phrase_del", "visit new york city", "visit city", {"new york"}},
      {"repeated_biased", "bob and bob", "rob and bob", {"bob"}},
      {"bias_absent", "plain words only", "plane words only", {"zanzibar"}},
      {"empty_bias", "meet bob today", "meet rob today", {}},
      {"distractors_only", "a b c", "a x c", {"q", "r", "s"}},
      {"swap_order", "alpha beta", "beta alpha", {"alpha"}},
      {"long_hyp", "one", "two three one four", {"one", "three"}},
      {"sub_then_ins", "kafka wrote", "kafker rote too", {"kafka"}},
      {"all_biased", "zed zoe", "zed zoey", {"zed", "zoe"}},
      {"all_inserted_biased", "", "zed zoe", {"zed", "zoe"}},
      {"del_and_ins", "x y z", "y z w", {"x", "w"}},
  };
  return f;
}

}  // namespace fixtures
