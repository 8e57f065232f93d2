#include "hotword/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hotword::io {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  return in;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t") == std::string::npos;
}

}  // namespace

std::vector<Utterance> parse_corpus_tsv(std::istream& in, const std::string& name) {
  std::vector<Utterance> out;
  std::map<std::string, std::size_t> ids;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    if (is_blank(line)) continue;
    const auto tab = line.find('\t');
    std::string id = line.substr(0, tab);
    if (id.empty()) throw Error(name + ":" + std::to_string(lineno) + ": empty utterance id");
    if (!ids.emplace(id, lineno).second)
      throw Error(name + ":" + std::to_string(lineno) + ": duplicate utterance id " + id);
    out.push_back({std::move(id), tab == std::string::npos ? Tokens{} : normalize(line.substr(tab + 1))});
  }
  return out;
}

std::vector<Utterance> read_corpus_tsv(const std::string& path) {
  auto in = open_input(path);
  return parse_corpus_tsv(in, path);
}

void write_corpus_tsv(std::ostream& out, const std::vector<Utterance>& corpus) {
  for (const auto& u : corpus) out << u.id << '\t' << join(u.tokens) << '\n';
}

std::vector<std::string> read_word_lines(const std::string& path) {
  auto in = open_input(path);
  std::vector<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    strip_cr(line);
    if (is_blank(line) || line.front() == '#') continue;
    auto tokens = normalize(line);
    if (!tokens.empty()) words.push_back(join(tokens));
  }
  return words;
}

CommonWordList read_common_words(const std::string& path) {
  return CommonWordList(read_word_lines(path), path);
}

void write_common_words(std::ostream& out, const CommonWordList& common) {
  for (const auto& w : common.ranked()) out << w << '\n';
}

RareVocabulary read_vocabulary(const std::string& path) {
  return RareVocabulary(read_word_lines(path));
}

BiasingList parse_bias_list(std::istream& in, std::ostream* warnings) {
  BiasingList list;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    strip_cr(line);
    auto tokens = normalize(line);
    if (tokens.empty()) continue;
    auto surface = join(tokens);
    if (!list.add(surface) && warnings)
      *warnings << "warning: duplicate biasing entry '" << surface << "' on line " << lineno << " ignored\n";
  }
  return list;
}

BiasingList read_bias_list(const std::string& path, std::ostream* warnings) {
  auto in = open_input(path);
  return parse_bias_list(in, warnings);
}

std::map<std::string, BiasingList> parse_bias_jsonl(std::istream& in) {
  std::map<std::string, BiasingList> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank(line)) continue;
    nlohmann::json rec;
    try {
      rec = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error("bias jsonl line " + std::to_string(lineno) + ": " + e.what());
    }
    if (!rec.contains("utt_id") || !rec.contains("hotwords") || !rec["hotwords"].is_array())
      throw Error("bias jsonl line " + std::to_string(lineno) + ": expected utt_id and hotwords");
    const auto raw = rec["hotwords"].get<std::vector<std::string>>();
    out[rec["utt_id"].get<std::string>()] = BiasingList::from_strings(raw);
  }
  return out;
}

std::map<std::string, BiasingList> read_bias_jsonl(const std::string& path) {
  auto in = open_input(path);
  return parse_bias_jsonl(in);
}

nlohmann::json bias_record(const std::string& utt_id, const BiasingList& list) {
  return {{"utt_id", utt_id}, {"hotwords", list.surfaces()}};
}

nlohmann::json filter_record(const std::string& utt_id, Variant variant, const FilterResult& result,
                             const std::string& prompt) {
  nlohmann::json scores = nlohmann::json::array();
  nlohmann::json matched = nlohmann::json::array();
  for (const auto& s : result.selected) {
    scores.push_back(s.score ? nlohmann::json(*s.score) : nlohmann::json(nullptr));
    matched.push_back(s.matched_token ? nlohmann::json(*s.matched_token) : nlohmann::json(nullptr));
  }
  return {{"utt_id", utt_id},   {"variant", std::string(to_string(variant))},
          {"hotwords", result.surfaces()}, {"scores", scores},
          {"matched_tokens", matched},     {"prompt", prompt}};
}

nlohmann::json percent(const Rate& rate) {
  const auto v = rate.value();
  if (!v) return nullptr;
  return std::round(*v * 10000.0) / 100.0;
}

nlohmann::json score_json(const ScoreReport& r) {
  auto side = [](const ErrorCounts& c, std::size_t ref) {
    return nlohmann::json{{"sub", c.sub}, {"del", c.del}, {"ins", c.ins}, {"errors", c.total()}, {"ref_words", ref}};
  };
  return {{"wer", percent(r.wer())},
          {"u_wer", percent(r.u_wer())},
          {"b_wer", percent(r.b_wer())},
          {"counts",
           {{"biased", side(r.biased, r.ref_biased)},
            {"unbiased", side(r.unbiased, r.ref_unbiased)},
            {"errors", r.total_errors()},
            {"ref_words", r.ref_words()}}},
          {"utterances", r.utterances}};
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write " + path);
  out << content;
  if (!out) throw FileError("failed writing " + path);
}

}  // namespace hotword::io
