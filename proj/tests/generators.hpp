#pragma once

// Seeded random inputs shared by the property tests and the acceptance run.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "hotword/ngram_index.hpp"
#include "hotword/textnorm.hpp"

namespace gen {

struct FilterCase {
  hotword::BiasingList list;
  hotword::Tokens sentence;
  hotword::CommonWordList common;
};

inline std::string word(std::mt19937_64& rng, std::size_t lo, std::size_t hi, const std::string& alphabet) {
  std::string w;
  const std::size_t n = lo + rng() % (hi - lo + 1);
  for (std::size_t i = 0; i < n; ++i) w.push_back(alphabet[rng() % alphabet.size()]);
  return w;
}

inline std::string perturb(std::mt19937_64& rng, std::string w) {
  const auto op = rng() % 3;
  const std::size_t pos = rng() % w.size();
  const char c = static_cast<char>('a' + rng() % 26);
  if (op == 0) w[pos] = c;
  else if (op == 1 && w.size() > 2) w.erase(pos, 1);
  else w.insert(pos, 1, c);
  return w;
}

// Lists of up to `max_entries` words of length 2..15 (a few phrases mixed
// in), and sentences built from list words, perturbed list words, common
// words and random noise.
inline FilterCase filter_case(std::mt19937_64& rng, std::size_t max_entries = 2000) {
  // A small alphabet keeps 2-gram collisions frequent.
  const std::string alphabet = rng() % 2 ? "abcdefghijklmnopqrstuvwxyz" : "abcdeilnorst";
  FilterCase fc;

  std::vector<std::string> common_words;
  for (int i = 0; i < 30; ++i) common_words.push_back(word(rng, 2, 5, alphabet));
  fc.common = hotword::CommonWordList(common_words);

  const std::size_t n_entries = 1 + rng() % max_entries;
  for (std::size_t i = 0; i < n_entries; ++i) {
    std::string s = word(rng, 2, 15, alphabet);
    if (rng() % 20 == 0) s += " " + word(rng, 2, 8, alphabet);
    fc.list.add(std::move(s));
  }

  const std::size_t n_tokens = rng() % 21;
  for (std::size_t i = 0; i < n_tokens; ++i) {
    const auto pick = rng() % 4;
    const auto& entries = fc.list.entries();
    const std::string& e = entries[rng() % entries.size()].surface;
    std::string tok;
    if (pick == 0) tok = e.substr(0, e.find(' '));
    else if (pick == 1) tok = perturb(rng, e.substr(0, e.find(' ')));
    else if (pick == 2) tok = common_words[rng() % common_words.size()];
    else tok = word(rng, 1, 12, alphabet);
    fc.sentence.push_back(tok);
  }
  return fc;
}

}  // namespace gen
