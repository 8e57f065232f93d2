#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hotword {

// A normalized word: lowercase [a-z0-9'], non-empty, no whitespace.
using Token = std::string;
using Tokens = std::vector<Token>;

struct Utterance {
  std::string id;
  Tokens tokens;

  bool operator==(const Utterance&) const = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hotword
