#include "hotword/similarity.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace hotword {

std::size_t edit_distance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  // Single row over the shorter string.
  thread_local std::vector<std::size_t> row;
  row.resize(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});

  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      const std::size_t up = row[j + 1];
      const std::size_t sub = diag + (a[i] == b[j] ? 0 : 1);
      row[j + 1] = std::min({sub, up + 1, row[j] + 1});
      diag = up;
    }
  }
  return row[b.size()];
}

double similarity(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) throw Error("undefined similarity");
  return 1.0 - static_cast<double>(edit_distance(a, b)) / static_cast<double>(longest);
}

NearestToken min_distance_to_sentence(std::string_view candidate, std::span<const Token> tokens) {
  if (tokens.empty()) throw Error("empty token sequence");
  NearestToken best{edit_distance(candidate, tokens[0]), 0};
  for (std::size_t i = 1; i < tokens.size() && best.distance > 0; ++i) {
    const std::size_t d = edit_distance(candidate, tokens[i]);
    if (d < best.distance) best = {d, i};
  }
  return best;
}

}  // namespace hotword
