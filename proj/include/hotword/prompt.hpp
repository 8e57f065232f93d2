#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace hotword {

inline constexpr std::string_view kPlainInstruction = "Transcribe speech to text.";
inline constexpr std::string_view kSpeechMarker = "<speech>";

struct PromptTemplate {
  std::string base{kPlainInstruction};
  // "{}" marks where the joined hotwords go.
  std::string hotword_clause = "Some hotwords might help. The hotwords are {}";
  std::string separator = " ";
};

/// base + " " + clause with the slot filled by the joined hotwords. An empty
/// hotword sequence fills the slot with the empty string.
std::string render_prompt(std::span<const std::string> hotwords, const PromptTemplate& tmpl = {});

/// "<speech> USER: <prompt> ASSISTANT: <transcription>". Without a
/// transcription the record ends after "ASSISTANT: " (inference form).
std::string render_training_record(std::string_view prompt, std::optional<std::string_view> transcription);

}  // namespace hotword
