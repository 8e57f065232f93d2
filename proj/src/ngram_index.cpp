#include "hotword/ngram_index.hpp"

#include <algorithm>
#include <utility>

#include "hotword/textnorm.hpp"

namespace hotword {

BiasingList BiasingList::from_strings(std::span<const std::string> raw) {
  BiasingList list;
  for (const auto& r : raw) {
    auto tokens = normalize(r);
    if (tokens.empty()) continue;
    list.add(join(tokens));
  }
  return list;
}

bool BiasingList::add(std::string surface) {
  if (surface.empty()) throw Error("empty biasing entry");
  if (lookup_.count(surface)) return false;
  const auto id = static_cast<EntryId>(entries_.size());
  lookup_.emplace(surface, id);
  entries_.push_back({id, std::move(surface)});
  return true;
}

bool BiasingList::contains(std::string_view surface) const {
  return lookup_.find(std::string(surface)) != lookup_.end();
}

std::vector<std::string> BiasingList::surfaces() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.surface);
  return out;
}

std::vector<std::string> char_bigrams(std::string_view s) {
  std::vector<std::string> out;
  if (s.size() == 1) {
    out.emplace_back(s);
    return out;
  }
  for (std::size_t i = 0; i + 1 < s.size(); ++i) out.emplace_back(s.substr(i, 2));
  return out;
}

NgramIndex::NgramIndex(BiasingList list) : list_(std::move(list)) {
  if (list_.empty()) throw Error("empty biasing list");
  for (const auto& entry : list_.entries()) {
    for (auto& gram : char_bigrams(entry.surface)) {
      auto& posting = grams_[std::move(gram)];
      // Entries are visited in id order, so a duplicate can only be the tail.
      if (posting.empty() || posting.back() != entry.id) posting.push_back(entry.id);
    }
  }
}

const std::vector<EntryId>* NgramIndex::postings(std::string_view gram) const {
  auto it = grams_.find(std::string(gram));
  return it == grams_.end() ? nullptr : &it->second;
}

std::vector<EntryId> NgramIndex::retrieve(std::span<const Token> tokens) const {
  std::vector<char> seen(list_.size(), 0);
  std::vector<EntryId> out;
  for (const auto& tok : tokens) {
    for (const auto& gram : char_bigrams(tok)) {
      const auto* posting = postings(gram);
      if (!posting) continue;
      for (EntryId id : *posting) {
        if (!seen[id]) {
          seen[id] = 1;
          out.push_back(id);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hotword
