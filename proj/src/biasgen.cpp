#include "hotword/biasgen.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace hotword {

void TrainBiasParams::validate() const {
  if (!(p_keep >= 0.0 && p_keep <= 1.0)) throw Error("p_keep must be in [0, 1]");
  if (n_phrases == 0) throw Error("n_phrases must be positive");
  if (n_order == 0) throw Error("n_order must be positive");
}

BiasingList sample_train_bias(std::span<const Utterance> batch, const TrainBiasParams& params, Rng& rng) {
  params.validate();
  BiasingList list;
  for (const auto& utt : batch) {
    if (!bernoulli(rng, params.p_keep)) continue;
    const std::size_t len = utt.tokens.size();
    const auto k = uniform_between(rng, 1, params.n_phrases);
    for (std::uint64_t draw = 0; draw < k; ++draw) {
      const auto n = uniform_between(rng, 1, params.n_order);
      if (len == 0) continue;
      const std::size_t width = std::min<std::size_t>(n, len);
      const auto start = uniform_below(rng, len - width + 1);
      list.add(join(std::span(utt.tokens).subspan(start, width)));
    }
  }
  return list;
}

BiasingList sample_train_bias(std::span<const Utterance> batch, const TrainBiasParams& params) {
  Rng rng(params.seed);
  return sample_train_bias(batch, params, rng);
}

RareVocabulary::RareVocabulary(std::vector<std::string> words) : words_(std::move(words)) {
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool RareVocabulary::contains(std::string_view word) const {
  return std::binary_search(words_.begin(), words_.end(), word);
}

RareVocabulary build_rare_vocabulary(std::span<const Utterance> corpus, const CommonWordList& common) {
  if (corpus.empty()) throw Error("empty corpus");
  std::unordered_set<std::string> seen;
  std::vector<std::string> words;
  for (const auto& utt : corpus)
    for (const auto& tok : utt.tokens)
      if (!common.contains(tok) && seen.insert(tok).second) words.push_back(tok);
  return RareVocabulary(std::move(words));
}

Tokens rare_words(std::span<const Token> tokens, const CommonWordList& common) {
  Tokens out;
  std::unordered_set<std::string> seen;
  for (const auto& tok : tokens)
    if (!common.contains(tok) && seen.insert(tok).second) out.push_back(tok);
  return out;
}

BiasingList build_test_bias(const Utterance& reference, const RareVocabulary& vocab,
                            const CommonWordList& common, std::size_t n_distractors, Rng& rng) {
  BiasingList list;
  const Tokens truth = rare_words(reference.tokens, common);
  for (const auto& w : truth) list.add(w);

  // Positions of ground-truth words inside the vocabulary; they are skipped
  // when mapping a pool index back to a vocabulary index.
  std::vector<std::size_t> excluded;
  for (const auto& w : truth) {
    auto it = std::lower_bound(vocab.words().begin(), vocab.words().end(), w);
    if (it != vocab.words().end() && *it == w)
      excluded.push_back(static_cast<std::size_t>(it - vocab.words().begin()));
  }
  std::sort(excluded.begin(), excluded.end());

  const std::size_t pool = vocab.size() - excluded.size();
  if (n_distractors > pool)
    throw Error("vocabulary exhausted: need " + std::to_string(n_distractors) + " distractors, have " +
                std::to_string(pool));

  auto to_vocab_index = [&](std::size_t p) {
    for (std::size_t e : excluded) {
      if (e <= p) ++p;
      else break;
    }
    return p;
  };

  // Partial Fisher-Yates over the virtual pool with a sparse swap table.
  std::unordered_map<std::size_t, std::size_t> swapped;
  auto slot = [&](std::size_t i) {
    auto it = swapped.find(i);
    return it == swapped.end() ? i : it->second;
  };
  for (std::size_t i = 0; i < n_distractors; ++i) {
    const std::size_t j = i + uniform_below(rng, pool - i);
    const std::size_t picked = slot(j);
    swapped[j] = slot(i);
    list.add(vocab.words()[to_vocab_index(picked)]);
  }
  return list;
}

BiasingList build_test_bias(const Utterance& reference, const RareVocabulary& vocab,
                            const CommonWordList& common, std::size_t n_distractors, std::uint64_t seed) {
  Rng rng = derive_rng(seed, reference.id, n_distractors);
  return build_test_bias(reference, vocab, common, n_distractors, rng);
}

}  // namespace hotword
