#include "hotword/scoring.hpp"

#include <algorithm>
#include <numeric>

#include "hotword/textnorm.hpp"

namespace hotword {

std::string_view to_string(OpKind k) {
  switch (k) {
    case OpKind::Match: return "match";
    case OpKind::Substitution: return "sub";
    case OpKind::Deletion: return "del";
    case OpKind::Insertion: return "ins";
  }
  return "?";
}

std::vector<AlignmentOp> align(std::span<const Token> ref, std::span<const Token> hyp) {
  const std::size_t n = ref.size();
  const std::size_t m = hyp.size();
  const std::size_t width = m + 1;
  std::vector<std::size_t> cost((n + 1) * width);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& { return cost[i * width + j]; };

  for (std::size_t i = 0; i <= n; ++i) at(i, 0) = i;
  for (std::size_t j = 0; j <= m; ++j) at(0, j) = j;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= m; ++j)
      at(i, j) = std::min({at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1), at(i - 1, j) + 1,
                           at(i, j - 1) + 1});

  std::vector<AlignmentOp> ops;
  ops.reserve(std::max(n, m));
  std::size_t i = n;
  std::size_t j = m;
  while (i > 0 || j > 0) {
    const std::size_t here = at(i, j);
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && here == at(i - 1, j - 1)) {
      ops.push_back({OpKind::Match, ref[i - 1], hyp[j - 1], false});
      --i, --j;
    } else if (i > 0 && j > 0 && here == at(i - 1, j - 1) + 1) {
      ops.push_back({OpKind::Substitution, ref[i - 1], hyp[j - 1], false});
      --i, --j;
    } else if (i > 0 && here == at(i - 1, j) + 1) {
      ops.push_back({OpKind::Deletion, ref[i - 1], std::nullopt, false});
      --i;
    } else {
      ops.push_back({OpKind::Insertion, std::nullopt, hyp[j - 1], false});
      --j;
    }
  }
  std::reverse(ops.begin(), ops.end());
  return ops;
}

std::size_t word_edit_distance(std::span<const Token> ref, std::span<const Token> hyp) {
  std::vector<std::size_t> row(hyp.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});
  for (std::size_t i = 0; i < ref.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < hyp.size(); ++j) {
      const std::size_t up = row[j + 1];
      row[j + 1] = std::min({diag + (ref[i] == hyp[j] ? 0 : 1), up + 1, row[j] + 1});
      diag = up;
    }
  }
  return row[hyp.size()];
}

BiasVocabulary::BiasVocabulary(const BiasingList& list) {
  for (const auto& e : list.entries())
    for (auto& w : normalize(e.surface)) words_.insert(std::move(w));
}

BiasVocabulary::BiasVocabulary(std::span<const std::string> surfaces) {
  for (const auto& s : surfaces)
    for (auto& w : normalize(s)) words_.insert(std::move(w));
}

bool BiasVocabulary::contains(std::string_view word) const {
  return words_.find(std::string(word)) != words_.end();
}

ErrorCounts& ErrorCounts::operator+=(const ErrorCounts& o) {
  sub += o.sub;
  del += o.del;
  ins += o.ins;
  return *this;
}

std::optional<double> Rate::value() const {
  if (words == 0) {
    if (errors == 0) return 0.0;
    return std::nullopt;
  }
  return static_cast<double>(errors) / static_cast<double>(words);
}

ScoreReport& ScoreReport::operator+=(const ScoreReport& o) {
  biased += o.biased;
  unbiased += o.unbiased;
  ref_biased += o.ref_biased;
  ref_unbiased += o.ref_unbiased;
  utterances += o.utterances;
  return *this;
}

void classify(std::vector<AlignmentOp>& ops, const BiasVocabulary& bias, InsertionAttribution ins_rule) {
  for (auto& op : ops) {
    if (op.kind == OpKind::Insertion)
      op.biased = ins_rule == InsertionAttribution::HypothesisWord && bias.contains(*op.hyp_word);
    else
      op.biased = bias.contains(*op.ref_word);
  }
}

ScoreReport tally(std::span<const AlignmentOp> ops) {
  ScoreReport r;
  r.utterances = 1;
  for (const auto& op : ops) {
    if (op.kind != OpKind::Insertion) (op.biased ? r.ref_biased : r.ref_unbiased) += 1;
    ErrorCounts& c = op.biased ? r.biased : r.unbiased;
    switch (op.kind) {
      case OpKind::Match: break;
      case OpKind::Substitution: ++c.sub; break;
      case OpKind::Deletion: ++c.del; break;
      case OpKind::Insertion: ++c.ins; break;
    }
  }
  return r;
}

ScoreReport score(std::span<const Token> reference, std::span<const Token> hypothesis, const BiasVocabulary& bias,
                  InsertionAttribution ins_rule) {
  auto ops = align(reference, hypothesis);
  classify(ops, bias, ins_rule);
  return tally(ops);
}

ScoreReport score(const Utterance& reference, const Utterance& hypothesis, const BiasingList& bias,
                  InsertionAttribution ins_rule) {
  return score(reference.tokens, hypothesis.tokens, BiasVocabulary(bias), ins_rule);
}

ScoreReport aggregate(std::span<const ScoreReport> reports) {
  ScoreReport total;
  for (const auto& r : reports) total += r;
  return total;
}

}  // namespace hotword
