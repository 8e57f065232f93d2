#include "hotword/textnorm.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace hotword {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

}  // namespace

Tokens normalize(std::string_view raw) {
  Tokens out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      out.push_back(std::move(current));
      current.clear();
    }
  };
  for (char c : raw) {
    if (is_space(c)) {
      flush();
    } else if (c >= 'A' && c <= 'Z') {
      current.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '\'') {
      current.push_back(c);
    }
    // Anything else (punctuation, non-ASCII bytes) is stripped in place.
  }
  flush();
  return out;
}

std::string join(std::span<const Token> tokens, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += sep;
    out += tokens[i];
  }
  return out;
}

CommonWordList::CommonWordList(std::vector<std::string> ranked, std::string source_corpus_id)
    : ranked_(std::move(ranked)), source_corpus_id_(std::move(source_corpus_id)) {
  words_.reserve(ranked_.size());
  for (const auto& w : ranked_) words_.insert(w);
}

bool CommonWordList::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

CommonWordList compute_common_words(std::span<const Utterance> corpus, std::size_t k,
                                    std::string source_corpus_id) {
  if (corpus.empty()) throw Error("empty corpus");
  if (k == 0) throw Error("k must be positive");

  std::unordered_map<std::string, std::size_t> counts;
  for (const auto& utt : corpus)
    for (const auto& tok : utt.tokens) ++counts[tok];

  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (ranked.size() > k) ranked.resize(k);

  std::vector<std::string> words;
  words.reserve(ranked.size());
  for (auto& [w, _] : ranked) words.push_back(std::move(w));
  return CommonWordList(std::move(words), std::move(source_corpus_id));
}

Tokens remove_common_words(std::span<const Token> tokens, const CommonWordList& common) {
  Tokens out;
  for (const auto& t : tokens)
    if (!common.contains(t)) out.push_back(t);
  return out;
}

}  // namespace hotword
