#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hotword/biasgen.hpp"
#include "hotword/filter.hpp"
#include "hotword/textnorm.hpp"
#include "hotword/types.hpp"

namespace hotword {

/// Stand-in for a coarse CTC decode: character-level noise plus optional
/// whole-word drops, each applied independently.
struct CorruptionModel {
  double char_sub_rate = 0.05;
  double char_del_rate = 0.02;
  double char_ins_rate = 0.02;
  double word_del_rate = 0.0;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Deterministic in (model.seed, reference.id). Substituted and inserted
/// characters are drawn from a-z; words reduced to nothing are dropped.
Utterance corrupt(const Utterance& reference, const CorruptionModel& model);

struct SyntheticCorpusParams {
  std::size_t vocab_size = 30000;
  double zipf_exponent = 1.0;
  std::size_t train_utterances = 20000;
  std::size_t test_utterances = 500;
  std::size_t min_words = 6;
  std::size_t max_words = 20;
  std::uint64_t seed = 0;
};

struct SyntheticCorpus {
  std::vector<Utterance> train;
  std::vector<Utterance> test;
};

/// Pseudo-word corpus with Zipfian word frequencies. Frequent words are
/// short, tail words are longer, which is roughly how real transcripts look.
SyntheticCorpus synthesize_corpus(const SyntheticCorpusParams& params);

struct SweepConfig {
  std::vector<std::size_t> sizes{100, 500, 1000, 2000};
  std::vector<Variant> variants{Variant::F1, Variant::F2, Variant::F3};
  CorruptionModel model;
  double similarity_threshold = 0.95;
  std::size_t top_k = 5;
  Selection selection = Selection::Union;
  std::uint64_t seed = 0;  // distractor sampling
  std::size_t threads = 1;
};

struct SweepCell {
  Variant variant = Variant::F3;
  std::size_t n_distractors = 0;
  std::size_t utterances = 0;
  std::size_t truth = 0;     // ground-truth hotwords over all utterances
  std::size_t selected = 0;  // selected hotwords over all utterances
  std::size_t hits = 0;      // selected hotwords that are ground truth

  // Micro-averages. An empty denominator is vacuously 1.
  double recall() const;
  double precision() const;
  double mean_len() const;

  bool operator==(const SweepCell&) const = default;
};

struct SweepTrace {
  std::string utt_id;
  Variant variant = Variant::F3;
  std::size_t n_distractors = 0;
  Tokens coarse;
  std::vector<std::string> truth;
  std::vector<std::string> selected;
};

struct SweepReport {
  std::vector<SweepCell> cells;  // sizes-major, variants-minor

  const SweepCell& cell(Variant v, std::size_t n_distractors) const;
  std::string to_csv() const;
  bool operator==(const SweepReport&) const = default;
};

/// For each reference: builds its test list at every size, corrupts it once,
/// filters the corrupted words with every variant and scores the selection
/// against the reference's rare words.
SweepReport run_sweep(std::span<const Utterance> references, const RareVocabulary& vocab,
                      const CommonWordList& common, const SweepConfig& config,
                      std::vector<SweepTrace>* trace = nullptr);

}  // namespace hotword
