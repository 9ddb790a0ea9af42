#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "protorec/alignment.hpp"

namespace protorec {

struct EvalReport {
  double ed = 0.0;   // mean edit distance
  double ned = 0.0;  // mean normalized edit distance, in [0, 1]
  double bc = 0.0;   // mean B-Cubed F-score, in [0, 1]
  std::size_t n = 0;
};

// Token-level Levenshtein distance, unit costs.
std::size_t edit_distance(const TokenRow& a, const TokenRow& b);

// Edit distance normalized by the longer length; 0 when both are empty.
double ned(const TokenRow& a, const TokenRow& b);

// B-Cubed F-score of the two sequences after pairwise alignment, gaps
// kept as ordinary symbols: each aligned position is scored by how well
// its (pred, gold) co-occurrence pattern matches across positions. 1.0
// means structurally identical, even under different symbols.
double bcubed_f(const TokenRow& pred, const TokenRow& gold,
                const ScoringScheme& scheme = ScoringScheme::builtin());

// Unweighted means over (pred, gold) pairs.
EvalReport evaluate(const std::vector<std::pair<TokenRow, TokenRow>>& pairs);

}  // namespace protorec
