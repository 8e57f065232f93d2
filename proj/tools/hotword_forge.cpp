// hotword_forge: batch command-line front end for hotword filtering,
// biasing-list generation, prompt rendering and B-WER scoring.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hotword/biasgen.hpp"
#include "hotword/filter.hpp"
#include "hotword/harness.hpp"
#include "hotword/io.hpp"
#include "hotword/ngram_index.hpp"
#include "hotword/parallel.hpp"
#include "hotword/prompt.hpp"
#include "hotword/scoring.hpp"
#include "hotword/textnorm.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hotword;

namespace {

void sort_by_id(std::vector<Utterance>& corpus) {
  std::sort(corpus.begin(), corpus.end(), [](const Utterance& a, const Utterance& b) { return a.id < b.id; });
}

std::vector<std::size_t> parse_sizes(const std::string& csv) {
  std::vector<std::size_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != item.size()) throw Error("invalid size list: " + csv);
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw Error("empty size list");
  return out;
}

std::vector<Variant> parse_variants(const std::string& csv) {
  std::vector<Variant> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(parse_variant(item));
  if (out.empty()) throw Error("empty variant list");
  return out;
}

std::string jsonl(const std::vector<json>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.dump();
    out += '\n';
  }
  return out;
}

// --- common ---------------------------------------------------------------

struct CommonArgs {
  std::string corpus;
  std::size_t k = 5000;
  std::string out;
};

int run_common(const CommonArgs& a) {
  const auto corpus = io::read_corpus_tsv(a.corpus);
  const auto common = compute_common_words(corpus, a.k, a.corpus);
  std::ostringstream os;
  io::write_common_words(os, common);
  io::write_output(a.out, os.str());
  return 0;
}

// --- index ----------------------------------------------------------------

struct IndexArgs {
  std::string bias_list;
  std::string out;
};

int run_index(const IndexArgs& a) {
  NgramIndex index(io::read_bias_list(a.bias_list, &std::cerr));
  const auto& list = index.entries();
  json grams = json::object();
  for (const auto& [gram, posting] : index.grams()) {
    json ids = json::array();
    for (EntryId id : posting) ids.push_back(list[id].surface);
    grams[gram] = ids;
  }
  json doc{{"entries", list.surfaces()}, {"grams", grams}};
  io::write_output(a.out, doc.dump(2) + "\n");
  return 0;
}

// --- filter ---------------------------------------------------------------

struct FilterArgs {
  std::string hyps;
  std::string bias_list;
  std::string bias_jsonl;
  std::string variant = "f3";
  double threshold = 0.95;
  std::size_t top_k = 5;
  std::string selection = "union";
  std::string common;
  bool oracle = false;
  std::string out;
};

int run_filter_cmd(const FilterArgs& a) {
  auto hyps = io::read_corpus_tsv(a.hyps);
  sort_by_id(hyps);

  std::optional<CommonWordList> common;
  if (!a.common.empty()) common = io::read_common_words(a.common);

  FilterConfig cfg;
  cfg.variant = parse_variant(a.variant);
  cfg.similarity_threshold = a.threshold;
  cfg.top_k = a.top_k;
  cfg.selection = parse_selection(a.selection);
  cfg.common = common ? &*common : nullptr;
  cfg.validate();
  if (cfg.variant != Variant::F1 && !common)
    throw Error("variant " + a.variant + " needs --common");

  std::shared_ptr<const NgramIndex> global;
  std::map<std::string, BiasingList> per_utt;
  if (!a.bias_list.empty()) {
    auto list = io::read_bias_list(a.bias_list, &std::cerr);
    if (!list.empty()) global = std::make_shared<NgramIndex>(std::move(list));
  } else {
    per_utt = io::read_bias_jsonl(a.bias_jsonl);
    std::vector<std::string> missing;
    for (const auto& h : hyps)
      if (!per_utt.count(h.id)) missing.push_back(h.id);
    if (!missing.empty()) {
      std::cerr << "error: no biasing list for utterance(s):";
      for (const auto& id : missing) std::cerr << ' ' << id;
      std::cerr << '\n';
      return 1;
    }
  }

  std::vector<json> records(hyps.size());
  parallel_for(hyps.size(), default_thread_count(), [&](std::size_t i) {
    const auto& h = hyps[i];
    FilterResult result;
    if (global) {
      result = a.oracle ? filter_oracle(h.tokens, global->entries(), cfg) : run_filter(h.tokens, *global, cfg);
    } else if (const auto& list = per_utt.at(h.id); !list.empty()) {
      result = a.oracle ? filter_oracle(h.tokens, list, cfg) : run_filter(h.tokens, NgramIndex(list), cfg);
    }
    const auto surfaces = result.surfaces();
    records[i] = io::filter_record(h.id, cfg.variant, result, render_prompt(surfaces));
  });
  io::write_output(a.out, jsonl(records));
  return 0;
}

// --- gen-train-bias -------------------------------------------------------

struct TrainBiasArgs {
  std::string transcripts;
  std::size_t batch_size = 4;
  TrainBiasParams params;
  std::string out;
};

int run_gen_train_bias(const TrainBiasArgs& a) {
  if (a.batch_size == 0) throw Error("batch size must be positive");
  auto corpus = io::read_corpus_tsv(a.transcripts);
  sort_by_id(corpus);
  Rng rng(a.params.seed);
  std::vector<json> records;
  for (std::size_t start = 0, batch = 0; start < corpus.size(); start += a.batch_size, ++batch) {
    const auto span = std::span(corpus).subspan(start, std::min(a.batch_size, corpus.size() - start));
    std::vector<std::string> ids;
    for (const auto& u : span) ids.push_back(u.id);
    const auto list = sample_train_bias(span, a.params, rng);
    records.push_back({{"batch", batch}, {"utt_ids", ids}, {"hotwords", list.surfaces()}});
  }
  io::write_output(a.out, jsonl(records));
  return 0;
}

// --- gen-test-bias --------------------------------------------------------

struct TestBiasArgs {
  std::string refs;
  std::string common;
  std::string vocab;
  std::string train;
  std::string sizes = "100,500,1000,2000";
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string out;
};

RareVocabulary load_vocab(const std::string& vocab, const std::string& train, const CommonWordList& common) {
  if (!vocab.empty()) return io::read_vocabulary(vocab);
  if (!train.empty()) return build_rare_vocabulary(io::read_corpus_tsv(train), common);
  throw Error("need --vocab or --train");
}

int run_gen_test_bias(const TestBiasArgs& a) {
  auto refs = io::read_corpus_tsv(a.refs);
  sort_by_id(refs);
  const auto common = io::read_common_words(a.common);
  const auto vocab = load_vocab(a.vocab, a.train, common);
  const auto sizes = parse_sizes(a.sizes);
  if (!a.out.empty() && sizes.size() != 1) throw Error("-o needs exactly one size; use --out-dir");
  if (a.out.empty() && a.out_dir.empty()) throw Error("need --out-dir or -o");
  if (!a.out_dir.empty()) fs::create_directories(a.out_dir);

  for (std::size_t n : sizes) {
    std::vector<json> records(refs.size());
    parallel_for(refs.size(), default_thread_count(), [&](std::size_t i) {
      records[i] = io::bias_record(refs[i].id, build_test_bias(refs[i], vocab, common, n, a.seed));
    });
    const std::string path =
        a.out.empty() ? (fs::path(a.out_dir) / ("bias_N" + std::to_string(n) + ".jsonl")).string() : a.out;
    io::write_output(path, jsonl(records));
  }
  return 0;
}

// --- score ----------------------------------------------------------------

struct ScoreArgs {
  std::string refs;
  std::string hyps;
  std::string bias_jsonl;
  std::string bias_list;
  bool per_utt = false;
  std::string insertions = "hyp";
  std::string out;
};

int run_score(const ScoreArgs& a) {
  auto refs = io::read_corpus_tsv(a.refs);
  auto hyps = io::read_corpus_tsv(a.hyps);
  sort_by_id(refs);
  sort_by_id(hyps);

  std::vector<std::string> only_ref, only_hyp;
  {
    std::size_t i = 0, j = 0;
    while (i < refs.size() || j < hyps.size()) {
      if (j == hyps.size() || (i < refs.size() && refs[i].id < hyps[j].id)) only_ref.push_back(refs[i++].id);
      else if (i == refs.size() || hyps[j].id < refs[i].id) only_hyp.push_back(hyps[j++].id);
      else ++i, ++j;
    }
  }
  if (!only_ref.empty() || !only_hyp.empty()) {
    std::cerr << "error: reference and hypothesis ids differ";
    for (const auto& id : only_ref) std::cerr << "\n  missing hypothesis: " << id;
    for (const auto& id : only_hyp) std::cerr << "\n  missing reference: " << id;
    std::cerr << '\n';
    return 1;
  }

  InsertionAttribution rule;
  if (a.insertions == "hyp") rule = InsertionAttribution::HypothesisWord;
  else if (a.insertions == "unbiased") rule = InsertionAttribution::Unbiased;
  else throw Error("unknown insertion rule: " + a.insertions);

  std::map<std::string, BiasingList> per_utt;
  BiasVocabulary global;
  if (!a.bias_jsonl.empty()) per_utt = io::read_bias_jsonl(a.bias_jsonl);
  else if (!a.bias_list.empty()) global = BiasVocabulary(io::read_bias_list(a.bias_list, &std::cerr));

  std::vector<ScoreReport> reports(refs.size());
  for (std::size_t i = 0; i < refs.size(); ++i) {
    if (!a.bias_jsonl.empty()) {
      auto it = per_utt.find(refs[i].id);
      const BiasVocabulary vocab = it == per_utt.end() ? BiasVocabulary() : BiasVocabulary(it->second);
      reports[i] = score(refs[i].tokens, hyps[i].tokens, vocab, rule);
    } else {
      reports[i] = score(refs[i].tokens, hyps[i].tokens, global, rule);
    }
  }

  json doc = io::score_json(aggregate(reports));
  if (a.per_utt) {
    json detail = json::array();
    for (std::size_t i = 0; i < refs.size(); ++i) {
      json rec = io::score_json(reports[i]);
      rec.erase("utterances");
      rec["utt_id"] = refs[i].id;
      detail.push_back(std::move(rec));
    }
    doc["per_utt"] = std::move(detail);
  }
  io::write_output(a.out, doc.dump(2) + "\n");
  return 0;
}

// --- sweep ----------------------------------------------------------------

struct SweepArgs {
  std::string refs;
  std::size_t synthetic = 0;
  std::string train;
  std::string vocab;
  std::string common;
  std::size_t common_k = 1000;
  std::string sizes = "100,500,1000,2000";
  std::string variants = "f1,f2,f3";
  CorruptionModel model;
  double threshold = 0.95;
  std::size_t top_k = 5;
  std::string selection = "union";
  std::uint64_t seed = 0;
  std::string out;
  std::string trace;
};

int run_sweep_cmd(SweepArgs a) {
  std::vector<Utterance> refs;
  std::vector<Utterance> train;
  if (a.synthetic > 0) {
    SyntheticCorpusParams sp;
    sp.test_utterances = a.synthetic;
    sp.seed = a.seed;
    auto corpus = synthesize_corpus(sp);
    refs = std::move(corpus.test);
    train = std::move(corpus.train);
  } else {
    if (a.refs.empty()) throw Error("need --refs or --synthetic");
    refs = io::read_corpus_tsv(a.refs);
    if (!a.train.empty()) train = io::read_corpus_tsv(a.train);
  }
  sort_by_id(refs);

  CommonWordList common;
  if (!a.common.empty()) common = io::read_common_words(a.common);
  else if (!train.empty()) common = compute_common_words(train, a.common_k);
  else throw Error("need --common or a training corpus");

  RareVocabulary vocab;
  if (!a.vocab.empty()) vocab = io::read_vocabulary(a.vocab);
  else if (!train.empty()) vocab = build_rare_vocabulary(train, common);
  else throw Error("need --vocab or a training corpus");

  SweepConfig cfg;
  cfg.sizes = parse_sizes(a.sizes);
  cfg.variants = parse_variants(a.variants);
  cfg.model = a.model;
  cfg.model.seed = a.seed;
  cfg.similarity_threshold = a.threshold;
  cfg.top_k = a.top_k;
  cfg.selection = parse_selection(a.selection);
  cfg.seed = a.seed;
  cfg.threads = default_thread_count();

  std::vector<SweepTrace> trace;
  const auto report = run_sweep(refs, vocab, common, cfg, a.trace.empty() ? nullptr : &trace);
  io::write_output(a.out, report.to_csv());
  if (!a.trace.empty()) {
    std::vector<json> records;
    records.reserve(trace.size());
    for (const auto& t : trace)
      records.push_back({{"utt_id", t.utt_id},
                         {"variant", std::string(to_string(t.variant))},
                         {"N", t.n_distractors},
                         {"coarse", join(t.coarse)},
                         {"truth", t.truth},
                         {"selected", t.selected}});
    io::write_output(a.trace, jsonl(records));
  }
  return 0;
}

// --- prompt ---------------------------------------------------------------

struct PromptArgs {
  std::string hotwords_jsonl;
  std::string refs;
  std::string out;
};

int run_prompt(const PromptArgs& a) {
  std::ifstream in(a.hotwords_jsonl);
  if (!in) throw io::FileError("cannot open " + a.hotwords_jsonl);
  std::map<std::string, std::string> transcripts;
  if (!a.refs.empty())
    for (const auto& u : io::read_corpus_tsv(a.refs)) transcripts[u.id] = join(u.tokens);

  // Keep the hotword order exactly as given; the filter output is already ranked.
  std::map<std::string, std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto rec = json::parse(line);
    rows[rec.at("utt_id").get<std::string>()] = rec.at("hotwords").get<std::vector<std::string>>();
  }

  std::vector<json> records;
  for (const auto& [id, hotwords] : rows) {
    const std::string prompt = render_prompt(hotwords);
    std::optional<std::string_view> transcription;
    if (!a.refs.empty()) {
      auto it = transcripts.find(id);
      if (it == transcripts.end()) throw Error("no transcription for " + id);
      transcription = it->second;
    }
    records.push_back({{"utt_id", id}, {"prompt", prompt}, {"record", render_training_record(prompt, transcription)}});
  }
  io::write_output(a.out, jsonl(records));
  return 0;
}

// --- synth ----------------------------------------------------------------

struct SynthArgs {
  SyntheticCorpusParams params;
  std::string out_dir;
};

int run_synth(const SynthArgs& a) {
  const auto corpus = synthesize_corpus(a.params);
  fs::create_directories(a.out_dir);
  std::ostringstream train, test;
  io::write_corpus_tsv(train, corpus.train);
  io::write_corpus_tsv(test, corpus.test);
  io::write_output((fs::path(a.out_dir) / "train.tsv").string(), train.str());
  io::write_output((fs::path(a.out_dir) / "test.tsv").string(), test.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hotword filtering, biasing-list generation and B-WER scoring"};
  app.require_subcommand(1);

  CommonArgs common_args;
  auto* common = app.add_subcommand("common", "Top-k frequent words of a TSV corpus");
  common->add_option("--corpus", common_args.corpus, "utt_id<TAB>text corpus")->required();
  common->add_option("--k", common_args.k, "Number of words to keep")->capture_default_str();
  common->add_option("-o,--out", common_args.out, "Output file (default stdout)");

  IndexArgs index_args;
  auto* index = app.add_subcommand("index", "Dump the 2-gram index of a biasing list as JSON");
  index->add_option("--bias-list", index_args.bias_list)->required();
  index->add_option("-o,--out", index_args.out);

  FilterArgs filter_args;
  auto* filter = app.add_subcommand("filter", "Select hotwords for coarse hypotheses");
  filter->add_option("--hyps", filter_args.hyps, "Coarse decodes, utt_id<TAB>text")->required();
  auto* bl = filter->add_option("--bias-list", filter_args.bias_list, "One global list, one entry per line");
  auto* bj = filter->add_option("--bias-jsonl", filter_args.bias_jsonl, "Per-utterance lists");
  bl->excludes(bj);
  filter->add_option("--variant", filter_args.variant)->check(CLI::IsMember({"f1", "f2", "f3"}))->capture_default_str();
  filter->add_option("--threshold", filter_args.threshold)->capture_default_str();
  filter->add_option("--top-k", filter_args.top_k)->capture_default_str();
  filter->add_option("--selection", filter_args.selection)->check(CLI::IsMember({"union", "fallback"}))->capture_default_str();
  filter->add_option("--common", filter_args.common, "Common-word list (required for f2/f3)");
  filter->add_flag("--oracle", filter_args.oracle, "Use the index-free brute-force path");
  filter->add_option("-o,--out", filter_args.out);

  TrainBiasArgs train_args;
  auto* train = app.add_subcommand("gen-train-bias", "Sample training biasing lists per batch");
  train->add_option("--transcripts", train_args.transcripts)->required();
  train->add_option("--batch-size", train_args.batch_size)->capture_default_str();
  train->add_option("--p-keep", train_args.params.p_keep)->capture_default_str();
  train->add_option("--n-phrases", train_args.params.n_phrases)->capture_default_str();
  train->add_option("--n-order", train_args.params.n_order)->capture_default_str();
  train->add_option("--seed", train_args.params.seed)->capture_default_str();
  train->add_option("-o,--out", train_args.out);

  TestBiasArgs test_args;
  auto* test = app.add_subcommand("gen-test-bias", "Build per-utterance test lists with N distractors");
  test->add_option("--refs", test_args.refs)->required();
  test->add_option("--common", test_args.common)->required();
  auto* tv = test->add_option("--vocab", test_args.vocab, "Rare vocabulary, one word per line");
  auto* tt = test->add_option("--train", test_args.train, "Derive the rare vocabulary from this corpus");
  tv->excludes(tt);
  test->add_option("--sizes", test_args.sizes)->capture_default_str();
  test->add_option("--seed", test_args.seed)->capture_default_str();
  test->add_option("--out-dir", test_args.out_dir, "Writes bias_N<size>.jsonl per size");
  test->add_option("-o,--out", test_args.out, "Single output file (one size only)");

  ScoreArgs score_args;
  auto* score_cmd = app.add_subcommand("score", "WER / U-WER / B-WER");
  score_cmd->add_option("--refs", score_args.refs)->required();
  score_cmd->add_option("--hyps", score_args.hyps)->required();
  auto* sj = score_cmd->add_option("--bias-jsonl", score_args.bias_jsonl);
  auto* sl = score_cmd->add_option("--bias-list", score_args.bias_list);
  sj->excludes(sl);
  score_cmd->add_flag("--per-utt", score_args.per_utt);
  score_cmd->add_option("--insertions", score_args.insertions, "hyp | unbiased")->capture_default_str();
  score_cmd->add_option("-o,--out", score_args.out);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Variant x list-size recall/precision grid on corrupted references");
  auto* sr = sweep->add_option("--refs", sweep_args.refs);
  auto* ss = sweep->add_option("--synthetic", sweep_args.synthetic, "Generate this many synthetic test utterances");
  sr->excludes(ss);
  sweep->add_option("--train", sweep_args.train);
  sweep->add_option("--vocab", sweep_args.vocab);
  sweep->add_option("--common", sweep_args.common);
  sweep->add_option("--common-k", sweep_args.common_k, "k when deriving common words from training data")->capture_default_str();
  sweep->add_option("--sizes", sweep_args.sizes)->capture_default_str();
  sweep->add_option("--variants", sweep_args.variants)->capture_default_str();
  sweep->add_option("--sub-rate", sweep_args.model.char_sub_rate)->capture_default_str();
  sweep->add_option("--del-rate", sweep_args.model.char_del_rate)->capture_default_str();
  sweep->add_option("--ins-rate", sweep_args.model.char_ins_rate)->capture_default_str();
  sweep->add_option("--word-del-rate", sweep_args.model.word_del_rate)->capture_default_str();
  sweep->add_option("--threshold", sweep_args.threshold)->capture_default_str();
  sweep->add_option("--top-k", sweep_args.top_k)->capture_default_str();
  sweep->add_option("--selection", sweep_args.selection)->capture_default_str();
  sweep->add_option("--seed", sweep_args.seed)->capture_default_str();
  sweep->add_option("-o,--out", sweep_args.out, "CSV output");
  sweep->add_option("--trace", sweep_args.trace, "Per-utterance JSONL trace");

  PromptArgs prompt_args;
  auto* prompt = app.add_subcommand("prompt", "Render prompts from {utt_id, hotwords} JSONL");
  prompt->add_option("--hotwords", prompt_args.hotwords_jsonl, "filter or gen-test-bias output")->required();
  prompt->add_option("--refs", prompt_args.refs, "Transcriptions; emits training records");
  prompt->add_option("-o,--out", prompt_args.out);

  SynthArgs synth_args;
  auto* synth = app.add_subcommand("synth", "Write a synthetic train/test corpus");
  synth->add_option("--train-utts", synth_args.params.train_utterances)->capture_default_str();
  synth->add_option("--test-utts", synth_args.params.test_utterances)->capture_default_str();
  synth->add_option("--vocab-size", synth_args.params.vocab_size)->capture_default_str();
  synth->add_option("--seed", synth_args.params.seed)->capture_default_str();
  synth->add_option("--out-dir", synth_args.out_dir)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*common) return run_common(common_args);
    if (*index) return run_index(index_args);
    if (*filter) {
      if (filter_args.bias_list.empty() && filter_args.bias_jsonl.empty())
        throw Error("need --bias-list or --bias-jsonl");
      return run_filter_cmd(filter_args);
    }
    if (*train) return run_gen_train_bias(train_args);
    if (*test) return run_gen_test_bias(test_args);
    if (*score_cmd) return run_score(score_args);
    if (*sweep) return run_sweep_cmd(sweep_args);
    if (*prompt) return run_prompt(prompt_args);
    if (*synth) return run_synth(synth_args);
  } catch (const io::FileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
