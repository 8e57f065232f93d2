#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hotword/ngram_index.hpp"
#include "hotword/random.hpp"
#include "hotword/textnorm.hpp"
#include "hotword/types.hpp"

namespace hotword {

/// Training-time sampler settings. Defaults: keep half the transcriptions,
/// one phrase each, phrases of 1..4 words.
struct TrainBiasParams {
  double p_keep = 0.5;
  std::size_t n_phrases = 1;
  std::size_t n_order = 4;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Draws a biasing list from the transcriptions of one training batch.
///
/// Each utterance is kept with probability p_keep. A kept utterance
/// contributes k ~ U[1, n_phrases] phrases; each phrase is a uniformly placed
/// contiguous run of n ~ U[1, n_order] words, with n clamped to the
/// utterance length. Surfaces are deduplicated in draw order.
BiasingList sample_train_bias(std::span<const Utterance> batch, const TrainBiasParams& params, Rng& rng);

/// Convenience overload seeding a fresh generator from params.seed.
BiasingList sample_train_bias(std::span<const Utterance> batch, const TrainBiasParams& params);

/// Every distinct corpus word that is not common, sorted ascending.
class RareVocabulary {
 public:
  RareVocabulary() = default;
  explicit RareVocabulary(std::vector<std::string> words);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }

 private:
  std::vector<std::string> words_;
};

RareVocabulary build_rare_vocabulary(std::span<const Utterance> corpus, const CommonWordList& common);

/// Non-common words of `tokens`, deduplicated, in first-occurrence order.
Tokens rare_words(std::span<const Token> tokens, const CommonWordList& common);

/// The reference's rare words followed by `n_distractors` distinct words
/// drawn without replacement from `vocab` minus those rare words.
/// Throws Error when the vocabulary cannot supply enough distractors.
BiasingList build_test_bias(const Utterance& reference, const RareVocabulary& vocab,
                            const CommonWordList& common, std::size_t n_distractors, Rng& rng);

/// Seeds the generator from (seed, reference.id, n_distractors).
BiasingList build_test_bias(const Utterance& reference, const RareVocabulary& vocab,
                            const CommonWordList& common, std::size_t n_distractors, std::uint64_t seed);

}  // namespace hotword
