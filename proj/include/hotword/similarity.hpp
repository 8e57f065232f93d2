#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "hotword/types.hpp"

namespace hotword {

/// Levenshtein distance with unit insertion, deletion and substitution costs.
std::size_t edit_distance(std::string_view a, std::string_view b);

/// 1 - edit_distance / max(|a|, |b|). Throws Error("undefined similarity")
/// when both strings are empty.
double similarity(std::string_view a, std::string_view b);

struct NearestToken {
  std::size_t distance = 0;
  std::size_t position = 0;  // index into the token sequence

  bool operator==(const NearestToken&) const = default;
};

/// Smallest edit distance between `candidate` and any token; the earliest
/// token wins ties. Throws on an empty token sequence.
NearestToken min_distance_to_sentence(std::string_view candidate, std::span<const Token> tokens);

}  // namespace hotword
