#pragma once

#include <string>

namespace protorec {

// Structural markers shared across the pipeline. They are reserved: the
// wordlist parser rejects them as input tokens.
inline const std::string kGap = "-";        // alignment gap
inline const std::string kMissing = "Ø";    // language has no form in this cognate set
inline const std::string kUnknown = "¿";    // classifier could not predict a sound
inline constexpr char kMergeSeparator = '.';  // joins proto tokens merged by trimming

}  // namespace protorec
