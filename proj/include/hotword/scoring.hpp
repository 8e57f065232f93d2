#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hotword/ngram_index.hpp"
#include "hotword/types.hpp"

namespace hotword {

enum class OpKind { Match, Substitution, Deletion, Insertion };

std::string_view to_string(OpKind k);

struct AlignmentOp {
  OpKind kind = OpKind::Match;
  std::optional<Token> ref_word;
  std::optional<Token> hyp_word;
  bool biased = false;

  bool operator==(const AlignmentOp&) const = default;
};

/// Minimum-edit word alignment. On DP ties the backtrace prefers, in order,
/// match, substitution, deletion, insertion. `biased` is left false.
std::vector<AlignmentOp> align(std::span<const Token> reference, std::span<const Token> hypothesis);

/// Word-level Levenshtein distance without a backtrace.
std::size_t word_edit_distance(std::span<const Token> reference, std::span<const Token> hypothesis);

/// Which word decides whether an insertion counts as biased.
enum class InsertionAttribution {
  HypothesisWord,  // biased iff the inserted word is a biasing word
  Unbiased,        // insertions always count against U-WER
};

/// Word-level membership set built from a biasing list. Phrase entries
/// contribute each of their words.
class BiasVocabulary {
 public:
  BiasVocabulary() = default;
  explicit BiasVocabulary(const BiasingList& list);
  explicit BiasVocabulary(std::span<const std::string> surfaces);

  bool contains(std::string_view word) const;
  bool empty() const { return words_.empty(); }

 private:
  std::unordered_set<std::string> words_;
};

struct ErrorCounts {
  std::size_t sub = 0;
  std::size_t del = 0;
  std::size_t ins = 0;

  std::size_t total() const { return sub + del + ins; }
  ErrorCounts& operator+=(const ErrorCounts& o);
  bool operator==(const ErrorCounts&) const = default;
};

/// Error rate with an explicit undefined state (errors over zero words).
struct Rate {
  std::size_t errors = 0;
  std::size_t words = 0;

  bool defined() const { return words > 0 || errors == 0; }
  /// errors / words as a fraction; 0 when both are zero. Empty when undefined.
  std::optional<double> value() const;
};

struct ScoreReport {
  ErrorCounts biased;
  ErrorCounts unbiased;
  std::size_t ref_biased = 0;
  std::size_t ref_unbiased = 0;
  std::size_t utterances = 0;

  std::size_t total_errors() const { return biased.total() + unbiased.total(); }
  std::size_t ref_words() const { return ref_biased + ref_unbiased; }

  Rate wer() const { return {total_errors(), ref_words()}; }
  Rate u_wer() const { return {unbiased.total(), ref_unbiased}; }
  Rate b_wer() const { return {biased.total(), ref_biased}; }

  ScoreReport& operator+=(const ScoreReport& o);
  bool operator==(const ScoreReport&) const = default;
};

/// Tags each op's `biased` flag: substitutions, deletions and matches by the
/// reference word, insertions per `ins_rule`.
void classify(std::vector<AlignmentOp>& ops, const BiasVocabulary& bias,
              InsertionAttribution ins_rule = InsertionAttribution::HypothesisWord);

/// Counts errors of an already classified alignment.
ScoreReport tally(std::span<const AlignmentOp> ops);

ScoreReport score(std::span<const Token> reference, std::span<const Token> hypothesis, const BiasVocabulary& bias,
                  InsertionAttribution ins_rule = InsertionAttribution::HypothesisWord);

ScoreReport score(const Utterance& reference, const Utterance& hypothesis, const BiasingList& bias,
                  InsertionAttribution ins_rule = InsertionAttribution::HypothesisWord);

/// Micro-average: sums counts so every ratio is recomputed from totals.
ScoreReport aggregate(std::span<const ScoreReport> reports);

}  // namespace hotword
