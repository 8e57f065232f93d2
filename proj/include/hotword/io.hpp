#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hotword/biasgen.hpp"
#include "hotword/filter.hpp"
#include "hotword/ngram_index.hpp"
#include "hotword/scoring.hpp"
#include "hotword/textnorm.hpp"
#include "hotword/types.hpp"

namespace hotword::io {

// Raised when a file cannot be opened.
class FileError : public Error {
 public:
  using Error::Error;
};

/// "utt_id<TAB>text" per line; text is normalized. Blank lines are skipped,
/// duplicate ids are an error.
std::vector<Utterance> read_corpus_tsv(const std::string& path);
std::vector<Utterance> parse_corpus_tsv(std::istream& in, const std::string& name = "<stream>");
void write_corpus_tsv(std::ostream& out, const std::vector<Utterance>& corpus);

/// One word per line; blank lines and '#' comments are ignored.
std::vector<std::string> read_word_lines(const std::string& path);

CommonWordList read_common_words(const std::string& path);
void write_common_words(std::ostream& out, const CommonWordList& common);

RareVocabulary read_vocabulary(const std::string& path);

/// One entry per line, normalized. Duplicate surfaces are reported to
/// `warnings` (when given) and the first occurrence is kept.
BiasingList read_bias_list(const std::string& path, std::ostream* warnings = nullptr);
BiasingList parse_bias_list(std::istream& in, std::ostream* warnings = nullptr);

/// {"utt_id": ..., "hotwords": [...]} per line, keyed by utt_id.
std::map<std::string, BiasingList> read_bias_jsonl(const std::string& path);
std::map<std::string, BiasingList> parse_bias_jsonl(std::istream& in);
nlohmann::json bias_record(const std::string& utt_id, const BiasingList& list);

nlohmann::json filter_record(const std::string& utt_id, Variant variant, const FilterResult& result,
                             const std::string& prompt);

/// Percentage rounded to two decimals, or null when undefined.
nlohmann::json percent(const Rate& rate);
nlohmann::json score_json(const ScoreReport& report);

/// Writes `content` to `path`, or stdout when path is empty or "-".
void write_output(const std::string& path, const std::string& content);

}  // namespace hotword::io
