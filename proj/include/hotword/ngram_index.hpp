#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hotword/types.hpp"

namespace hotword {

using EntryId = std::uint32_t;

struct BiasingEntry {
  EntryId id = 0;
  std::string surface;  // normalized, single-space separated

  bool operator==(const BiasingEntry&) const = default;
};

/// Ordered hotword list. Ids are positions; surfaces are unique.
class BiasingList {
 public:
  BiasingList() = default;

  /// Normalizes each raw string; empty results are skipped and duplicates
  /// keep their first occurrence.
  static BiasingList from_strings(std::span<const std::string> raw);

  /// Appends an already-normalized surface. Returns false if it is a duplicate.
  bool add(std::string surface);

  bool contains(std::string_view surface) const;
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const BiasingEntry& operator[](EntryId id) const { return entries_[id]; }
  const std::vector<BiasingEntry>& entries() const { return entries_; }
  std::vector<std::string> surfaces() const;

  bool operator==(const BiasingList& o) const { return entries_ == o.entries_; }

 private:
  std::vector<BiasingEntry> entries_;
  std::unordered_map<std::string, EntryId> lookup_;
};

/// Contiguous character 2-grams of `s`. A single-character string yields
/// itself as a degenerate gram; an empty string yields nothing.
std::vector<std::string> char_bigrams(std::string_view s);

/// Inverted index from character 2-grams to the ids of the entries that
/// contain them. Posting lists are sorted and duplicate free.
class NgramIndex {
 public:
  /// Throws Error("empty biasing list") when `list` has no entries.
  explicit NgramIndex(BiasingList list);

  /// Union of the postings of every gram of every token, sorted by id.
  std::vector<EntryId> retrieve(std::span<const Token> tokens) const;

  const std::vector<EntryId>* postings(std::string_view gram) const;
  const BiasingList& entries() const { return list_; }
  const std::unordered_map<std::string, std::vector<EntryId>>& grams() const { return grams_; }

 private:
  BiasingList list_;
  std::unordered_map<std::string, std::vector<EntryId>> grams_;
};

inline NgramIndex build_index(BiasingList list) { return NgramIndex(std::move(list)); }

}  // namespace hotword
