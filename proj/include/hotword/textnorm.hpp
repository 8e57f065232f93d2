#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hotword/types.hpp"

namespace hotword {

/// Lowercases ASCII letters, drops every character outside [a-z0-9'] and
/// splits on whitespace runs. Tokens that end up empty are discarded.
Tokens normalize(std::string_view raw);

/// Joins tokens with single spaces.
std::string join(std::span<const Token> tokens, std::string_view sep = " ");

/// The k most frequent words of a corpus, kept in descending-frequency order.
class CommonWordList {
 public:
  CommonWordList() = default;
  CommonWordList(std::vector<std::string> ranked, std::string source_corpus_id = {});

  bool contains(std::string_view word) const;
  std::size_t k() const { return ranked_.size(); }
  bool empty() const { return ranked_.empty(); }

  const std::vector<std::string>& ranked() const { return ranked_; }
  const std::string& source_corpus_id() const { return source_corpus_id_; }

 private:
  std::vector<std::string> ranked_;
  std::unordered_set<std::string> words_;
  std::string source_corpus_id_;
};

/// Counts normalized tokens over the corpus and keeps the top k. Ties on
/// count are ordered lexicographically ascending. Throws on an empty corpus.
CommonWordList compute_common_words(std::span<const Utterance> corpus, std::size_t k,
                                    std::string source_corpus_id = {});

/// Order-preserving filter that drops members of `common`.
Tokens remove_common_words(std::span<const Token> tokens, const CommonWordList& common);

}  // namespace hotword
