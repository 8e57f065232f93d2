#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hotword/ngram_index.hpp"
#include "hotword/textnorm.hpp"
#include "hotword/types.hpp"

namespace hotword {

// F1: similarity threshold over the raw sentence.
// F2: F1 after common-word removal.
// F3: common-word removal, then nearest candidate for every remaining word.
enum class Variant { F1, F2, F3 };

// How F1/F2 combine "score above threshold" with "top k by score".
enum class Selection {
  Union,     // everything above the threshold plus the top k
  Fallback,  // everything above the threshold, or the top k if none qualifies
};

std::string_view to_string(Variant v);
Variant parse_variant(std::string_view s);
std::string_view to_string(Selection s);
Selection parse_selection(std::string_view s);

struct FilterConfig {
  Variant variant = Variant::F3;
  double similarity_threshold = 0.95;
  std::size_t top_k = 5;
  Selection selection = Selection::Union;
  // Not owned. Null means no word is treated as common.
  const CommonWordList* common = nullptr;

  void validate() const;
};

struct SelectedHotword {
  EntryId id = 0;
  std::string surface;
  std::optional<double> score;
  std::optional<Token> matched_token;  // F3 only

  bool operator==(const SelectedHotword&) const = default;
};

struct FilterResult {
  std::vector<SelectedHotword> selected;

  std::vector<std::string> surfaces() const;
  bool operator==(const FilterResult&) const = default;
};

FilterResult filter_f1(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg);
FilterResult filter_f2(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg);
FilterResult filter_f3(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg);

/// Dispatches on cfg.variant.
FilterResult run_filter(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg);

/// Same contract as run_filter, computed by scanning every entry of `list`
/// for shared 2-grams instead of consulting an index.
FilterResult filter_oracle(std::span<const Token> sentence, const BiasingList& list, const FilterConfig& cfg);

}  // namespace hotword
