#pragma once

#include <cstddef>
#include <string>

#include "protorec/wordlist.hpp"

namespace protorec {

// A generated language family: one proto language plus four daughters
// derived from it by regular sound change, packaged as a wordlist with
// one cognate set per proto word.
struct SynthFamily {
  Wordlist wordlist;
  std::string proto_language;
};

// Fully regular family over a 20-sound proto inventory: per-daughter
// context-free substitutions, one word-initial rule, and loss of the
// word-final vowel in every daughter (so the last proto syllable always
// trims into a merged token). Position slots cycle round-robin through
// restricted sound pools, which keeps every correspondence pattern
// frequent: with `words` cognate sets, each pattern occurs in more than
// words/8 of them.
SynthFamily make_regular_family(std::size_t words = 320);

// Family with a positionally conditioned merger: word-final b becomes p
// in every daughter while p never occurs word-finally, so the final
// pattern is ambiguous unless word position is coded.
SynthFamily make_final_merger_family(std::size_t words = 320);

}  // namespace protorec
