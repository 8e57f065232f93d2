#include "hotword/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <cstdio>
#include <cstdlib>
#include <string_view>
#include <unordered_set>

#include "hotword/parallel.hpp"
#include "hotword/random.hpp"

namespace hotword {

std::size_t default_thread_count() {
  if (const char* env = std::getenv("HOTWORD_FORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void CorruptionModel::validate() const {
  for (double r : {char_sub_rate, char_del_rate, char_ins_rate})
    if (!(r >= 0.0 && r < 1.0)) throw Error("character corruption rates must be in [0, 1)");
  if (!(word_del_rate >= 0.0 && word_del_rate <= 1.0)) throw Error("word deletion rate must be in [0, 1]");
}

namespace {

char random_letter(Rng& rng) { return static_cast<char>('a' + uniform_below(rng, 26)); }

char different_letter(Rng& rng, char c) {
  if (c < 'a' || c > 'z') return random_letter(rng);
  const auto shift = 1 + uniform_below(rng, 25);
  return static_cast<char>('a' + (c - 'a' + shift) % 26);
}

}  // namespace

Utterance corrupt(const Utterance& reference, const CorruptionModel& model) {
  model.validate();
  Rng rng = derive_rng(model.seed, reference.id, 0xc0441);
  Utterance out{reference.id, {}};
  for (const auto& word : reference.tokens) {
    std::string noisy;
    noisy.reserve(word.size() + 2);
    for (char c : word) {
      if (!bernoulli(rng, model.char_del_rate)) noisy.push_back(bernoulli(rng, model.char_sub_rate) ? different_letter(rng, c) : c);
      if (bernoulli(rng, model.char_ins_rate)) noisy.push_back(random_letter(rng));
    }
    const bool dropped = bernoulli(rng, model.word_del_rate);
    if (!dropped && !noisy.empty()) out.tokens.push_back(std::move(noisy));
  }
  return out;
}

SyntheticCorpus synthesize_corpus(const SyntheticCorpusParams& params) {
  if (params.vocab_size == 0) throw Error("vocabulary size must be positive");
  if (params.min_words == 0 || params.min_words > params.max_words) throw Error("invalid utterance length range");

  static constexpr std::array<std::string_view, 31> kOnsets = {
      "b", "c", "d", "f", "g", "h", "j", "k", "l", "m", "n", "p", "r", "s", "t", "v",
      "w", "y", "z", "br", "ch", "cl", "dr", "fl", "gr", "kr", "pl", "pr", "sh", "st", "th"};
  static constexpr std::array<std::string_view, 10> kVowels = {"a", "e", "i", "o", "u", "ai", "ea", "ee", "oo", "ou"};
  static constexpr std::array<std::string_view, 10> kCodas = {"", "n", "r", "s", "t", "l", "m", "nd", "st", "ck"};

  Rng rng = derive_rng(params.seed, "synthetic-corpus");

  std::vector<std::string> vocab;
  vocab.reserve(params.vocab_size);
  std::unordered_set<std::string> seen;
  while (vocab.size() < params.vocab_size) {
    const std::size_t rank = vocab.size();
    std::size_t syllables = 1;
    if (rank >= 3000) syllables = uniform_between(rng, 2, 4);
    else if (rank >= 200) syllables = uniform_between(rng, 1, 2);
    std::string w;
    for (std::size_t s = 0; s < syllables; ++s) {
      w += kOnsets[uniform_below(rng, kOnsets.size())];
      w += kVowels[uniform_below(rng, kVowels.size())];
    }
    w += kCodas[uniform_below(rng, kCodas.size())];
    if (seen.insert(w).second) vocab.push_back(std::move(w));
  }

  std::vector<double> cdf(vocab.size());
  double total = 0.0;
  for (std::size_t r = 0; r < vocab.size(); ++r) {
    total += 1.0 / std::pow(static_cast<double>(r + 1), params.zipf_exponent);
    cdf[r] = total;
  }
  auto draw_word = [&]() -> const std::string& {
    const double u = uniform_unit(rng) * total;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    return vocab[static_cast<std::size_t>(it - cdf.begin())];
  };
  auto make = [&](const char* prefix, std::size_t i) {
    char id[32];
    std::snprintf(id, sizeof id, "%s-%06zu", prefix, i);
    Utterance u{id, {}};
    const auto len = uniform_between(rng, params.min_words, params.max_words);
    for (std::uint64_t w = 0; w < len; ++w) u.tokens.push_back(draw_word());
    return u;
  };

  SyntheticCorpus corpus;
  corpus.train.reserve(params.train_utterances);
  for (std::size_t i = 0; i < params.train_utterances; ++i) corpus.train.push_back(make("train", i));
  corpus.test.reserve(params.test_utterances);
  for (std::size_t i = 0; i < params.test_utterances; ++i) corpus.test.push_back(make("test", i));
  return corpus;
}

double SweepCell::recall() const {
  return truth == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(truth);
}

double SweepCell::precision() const {
  return selected == 0 ? 1.0 : static_cast<double>(hits) / static_cast<double>(selected);
}

double SweepCell::mean_len() const {
  return utterances == 0 ? 0.0 : static_cast<double>(selected) / static_cast<double>(utterances);
}

const SweepCell& SweepReport::cell(Variant v, std::size_t n_distractors) const {
  for (const auto& c : cells)
    if (c.variant == v && c.n_distractors == n_distractors) return c;
  throw Error("no sweep cell for " + std::string(to_string(v)) + " N=" + std::to_string(n_distractors));
}

std::string SweepReport::to_csv() const {
  std::string out = "variant,N,recall,precision,mean_len\n";
  char line[128];
  for (const auto& c : cells) {
    std::snprintf(line, sizeof line, "%s,%zu,%.6f,%.6f,%.6f\n", std::string(to_string(c.variant)).c_str(),
                  c.n_distractors, c.recall(), c.precision(), c.mean_len());
    out += line;
  }
  return out;
}

SweepReport run_sweep(std::span<const Utterance> references, const RareVocabulary& vocab,
                      const CommonWordList& common, const SweepConfig& config, std::vector<SweepTrace>* trace) {
  if (references.empty()) throw Error("empty corpus");
  config.model.validate();

  const std::size_t n_cells = config.sizes.size() * config.variants.size();
  std::vector<std::vector<SweepCell>> partial(references.size());
  std::vector<std::vector<SweepTrace>> traces(trace ? references.size() : 0);

  parallel_for(references.size(), config.threads, [&](std::size_t u) {
    const Utterance& ref = references[u];
    const Tokens truth = rare_words(ref.tokens, common);
    const std::unordered_set<std::string> truth_set(truth.begin(), truth.end());
    const Utterance coarse = corrupt(ref, config.model);

    auto& cells = partial[u];
    cells.reserve(n_cells);
    for (std::size_t n : config.sizes) {
      BiasingList list = build_test_bias(ref, vocab, common, n, config.seed);
      std::optional<NgramIndex> index;
      if (!list.empty()) index.emplace(std::move(list));
      for (Variant v : config.variants) {
        FilterConfig fc;
        fc.variant = v;
        fc.similarity_threshold = config.similarity_threshold;
        fc.top_k = config.top_k;
        fc.selection = config.selection;
        fc.common = &common;
        FilterResult result;
        if (index) result = run_filter(coarse.tokens, *index, fc);

        SweepCell c{v, n, 1, truth.size(), result.selected.size(), 0};
        for (const auto& s : result.selected) c.hits += truth_set.count(s.surface);
        cells.push_back(c);
        if (trace) traces[u].push_back({ref.id, v, n, coarse.tokens, truth, result.surfaces()});
      }
    }
  });

  SweepReport report;
  report.cells.reserve(n_cells);
  for (std::size_t n : config.sizes)
    for (Variant v : config.variants) report.cells.push_back({v, n, 0, 0, 0, 0});
  for (const auto& cells : partial) {
    for (std::size_t i = 0; i < n_cells; ++i) {
      report.cells[i].utterances += cells[i].utterances;
      report.cells[i].truth += cells[i].truth;
      report.cells[i].selected += cells[i].selected;
      report.cells[i].hits += cells[i].hits;
    }
  }
  if (trace)
    for (auto& t : traces) trace->insert(trace->end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  return report;
}

}  // namespace hotword
