#include "hotword/filter.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "hotword/similarity.hpp"

namespace hotword {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::F1: return "f1";
    case Variant::F2: return "f2";
    case Variant::F3: return "f3";
  }
  return "?";
}

Variant parse_variant(std::string_view s) {
  if (s == "f1" || s == "F1") return Variant::F1;
  if (s == "f2" || s == "F2") return Variant::F2;
  if (s == "f3" || s == "F3") return Variant::F3;
  throw Error("unknown filter variant: " + std::string(s));
}

std::string_view to_string(Selection s) {
  return s == Selection::Union ? "union" : "fallback";
}

Selection parse_selection(std::string_view s) {
  if (s == "union") return Selection::Union;
  if (s == "fallback") return Selection::Fallback;
  throw Error("unknown selection mode: " + std::string(s));
}

void FilterConfig::validate() const {
  if (!(similarity_threshold > 0.0 && similarity_threshold <= 1.0))
    throw Error("similarity threshold must be in (0, 1]");
  if (top_k == 0) throw Error("top_k must be positive");
}

std::vector<std::string> FilterResult::surfaces() const {
  std::vector<std::string> out;
  out.reserve(selected.size());
  for (const auto& s : selected) out.push_back(s.surface);
  return out;
}

namespace {

struct Scored {
  EntryId id;
  double score;
};

Tokens processed_sentence(std::span<const Token> sentence, const FilterConfig& cfg) {
  if (cfg.variant == Variant::F1 || cfg.common == nullptr)
    return Tokens(sentence.begin(), sentence.end());
  return remove_common_words(sentence, *cfg.common);
}

FilterResult rank_by_threshold(std::span<const Token> query, std::span<const EntryId> candidates,
                               const BiasingList& list, const FilterConfig& cfg) {
  FilterResult result;
  if (query.empty() || candidates.empty()) return result;

  std::vector<Scored> scored;
  scored.reserve(candidates.size());
  for (EntryId id : candidates) {
    double best = 0.0;
    for (const auto& tok : query) best = std::max(best, similarity(list[id].surface, tok));
    scored.push_back({id, best});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.id < b.id;
  });

  const auto above = static_cast<std::size_t>(
      std::count_if(scored.begin(), scored.end(),
                    [&](const Scored& s) { return s.score > cfg.similarity_threshold; }));
  std::size_t keep = 0;
  if (cfg.selection == Selection::Union)
    keep = std::max(above, cfg.top_k);
  else
    keep = above > 0 ? above : cfg.top_k;
  keep = std::min(keep, scored.size());

  for (std::size_t i = 0; i < keep; ++i)
    result.selected.push_back({scored[i].id, list[scored[i].id].surface, scored[i].score, std::nullopt});
  return result;
}

FilterResult match_each_word(std::span<const Token> rare, std::span<const EntryId> candidates,
                             const BiasingList& list) {
  FilterResult result;
  if (rare.empty() || candidates.empty()) return result;

  std::unordered_set<EntryId> taken;
  for (const auto& tok : rare) {
    EntryId best_id = candidates.front();
    std::size_t best_d = edit_distance(list[best_id].surface, tok);
    for (std::size_t i = 1; i < candidates.size() && best_d > 0; ++i) {
      const std::size_t d = edit_distance(list[candidates[i]].surface, tok);
      if (d < best_d) {
        best_d = d;
        best_id = candidates[i];
      }
    }
    if (taken.insert(best_id).second)
      result.selected.push_back({best_id, list[best_id].surface, similarity(list[best_id].surface, tok), tok});
  }
  return result;
}

void require_variant(const FilterConfig& cfg, Variant v) {
  if (cfg.variant != v)
    throw std::invalid_argument("filter_" + std::string(to_string(v)) + " called with variant " +
                                std::string(to_string(cfg.variant)));
  cfg.validate();
}

}  // namespace

FilterResult filter_f1(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg) {
  require_variant(cfg, Variant::F1);
  const auto candidates = index.retrieve(sentence);
  return rank_by_threshold(sentence, candidates, index.entries(), cfg);
}

FilterResult filter_f2(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg) {
  require_variant(cfg, Variant::F2);
  const auto rare = processed_sentence(sentence, cfg);
  const auto candidates = index.retrieve(rare);
  return rank_by_threshold(rare, candidates, index.entries(), cfg);
}

FilterResult filter_f3(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg) {
  require_variant(cfg, Variant::F3);
  const auto rare = processed_sentence(sentence, cfg);
  const auto candidates = index.retrieve(rare);
  return match_each_word(rare, candidates, index.entries());
}

FilterResult run_filter(std::span<const Token> sentence, const NgramIndex& index, const FilterConfig& cfg) {
  switch (cfg.variant) {
    case Variant::F1: return filter_f1(sentence, index, cfg);
    case Variant::F2: return filter_f2(sentence, index, cfg);
    case Variant::F3: return filter_f3(sentence, index, cfg);
  }
  throw Error("unknown filter variant");
}

// The oracle deliberately shares nothing with the indexed path beyond the
// distance primitives: candidates come from a substring scan of every entry
// and selection is recomputed from scratch.
FilterResult filter_oracle(std::span<const Token> sentence, const BiasingList& list, const FilterConfig& cfg) {
  cfg.validate();
  FilterResult result;
  if (list.empty()) return result;

  Tokens query;
  for (const auto& tok : sentence) {
    if (cfg.variant != Variant::F1 && cfg.common && cfg.common->contains(tok)) continue;
    query.push_back(tok);
  }
  if (query.empty()) return result;

  auto shares_gram = [&](const std::string& surface) {
    for (const auto& tok : query) {
      if (tok.size() == 1) {
        if (surface.size() == 1 && surface == tok) return true;
        continue;
      }
      for (std::size_t i = 0; i + 1 < tok.size(); ++i) {
        const std::string_view gram(tok.data() + i, 2);
        if (surface.size() >= 2 && surface.find(gram) != std::string::npos) return true;
      }
    }
    return false;
  };

  std::vector<EntryId> candidates;
  for (const auto& e : list.entries())
    if (shares_gram(e.surface)) candidates.push_back(e.id);
  if (candidates.empty()) return result;

  if (cfg.variant == Variant::F3) {
    std::vector<bool> used(list.size(), false);
    for (const auto& tok : query) {
      const BiasingEntry* best = nullptr;
      std::size_t best_d = 0;
      for (EntryId id : candidates) {
        const std::size_t d = edit_distance(list[id].surface, tok);
        if (best == nullptr || d < best_d || (d == best_d && id < best->id)) {
          best = &list[id];
          best_d = d;
        }
      }
      if (!used[best->id]) {
        used[best->id] = true;
        result.selected.push_back({best->id, best->surface, similarity(best->surface, tok), tok});
      }
    }
    return result;
  }

  std::vector<std::pair<double, EntryId>> scored;
  for (EntryId id : candidates) {
    double best = -1.0;
    for (const auto& tok : query) {
      const double s = similarity(list[id].surface, tok);
      if (s > best) best = s;
    }
    scored.emplace_back(-best, id);  // ascending sort == descending score, ascending id
  }
  std::sort(scored.begin(), scored.end());

  std::vector<bool> keep(scored.size(), false);
  bool any_above = false;
  for (std::size_t i = 0; i < scored.size(); ++i) {
    if (-scored[i].first > cfg.similarity_threshold) {
      keep[i] = true;
      any_above = true;
    }
  }
  if (cfg.selection == Selection::Union || !any_above)
    for (std::size_t i = 0; i < scored.size() && i < cfg.top_k; ++i) keep[i] = true;

  for (std::size_t i = 0; i < scored.size(); ++i)
    if (keep[i]) result.selected.push_back({scored[i].second, list[scored[i].second].surface, -scored[i].first, std::nullopt});
  return result;
}

}  // namespace hotword
