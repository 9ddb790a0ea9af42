#pragma once

#include <cstdint>
#include <string>

namespace protorec {

// First code point of a UTF-8 string; U+FFFD on malformed input.
char32_t first_codepoint(const std::string& utf8);

// Maps sound tokens onto a coarse class alphabet:
//
//   P T K   stops/affricates and plain fricatives, collapsed by place
//   S       sibilants
//   N       nasals
//   L       laterals
//   R       rhotics
//   W Y     glides
//   V       vowels
//   H       laryngeals
//   1       tone tokens
//
// The map is total: tokens without a direct entry fall back to the class
// of their first code point, and to '?' when that is unknown too.
class SoundClassMap {
 public:
  char classify(const std::string& token) const;

  bool is_vowel(const std::string& token) const { return classify(token) == 'V'; }
  bool is_tone(const std::string& token) const { return classify(token) == '1'; }

  static const SoundClassMap& builtin();
};

// Flat class-pair scores for alignment: identical classes score `same`,
// pairs from a small relatedness table score `related`, everything else
// `different`. Linear gap cost.
struct ScoringScheme {
  int same = 2;
  int related = 1;
  int different = -1;
  int gap = -1;
  const SoundClassMap* classes = &SoundClassMap::builtin();

  int score_classes(char a, char b) const;
  int score_tokens(const std::string& a, const std::string& b) const;

  static const ScoringScheme& builtin();
};

}  // namespace protorec
