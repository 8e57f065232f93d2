#include "hotword/prompt.hpp"

#include "hotword/types.hpp"

namespace hotword {

std::string render_prompt(std::span<const std::string> hotwords, const PromptTemplate& tmpl) {
  std::string joined;
  for (std::size_t i = 0; i < hotwords.size(); ++i) {
    if (i) joined += tmpl.separator;
    joined += hotwords[i];
  }
  std::string clause = tmpl.hotword_clause;
  const auto slot = clause.find("{}");
  if (slot == std::string::npos) throw Error("prompt template has no {} slot");
  clause.replace(slot, 2, joined);
  return tmpl.base + " " + clause;
}

std::string render_training_record(std::string_view prompt, std::optional<std::string_view> transcription) {
  std::string out{kSpeechMarker};
  out += " USER: ";
  out += prompt;
  out += " ASSISTANT: ";
  if (transcription) out += *transcription;
  return out;
}

}  // namespace hotword
