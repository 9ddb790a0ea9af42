#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "protorec/sound_classes.hpp"

namespace protorec {

using TokenRow = std::vector<std::string>;

// Multiple alignment: equal-length rows over tokens and "-" gaps; no column
// is gaps-only. Row labels are optional (empty or one per row).
struct Alignment {
  std::vector<std::string> languages;
  std::vector<TokenRow> rows;

  std::size_t width() const { return rows.empty() ? 0 : rows.front().size(); }
};

// Alignment after trimming: the proto row may carry merged tokens joined by
// "." (e.g. "r.E"); every column has at least one non-gap descendant cell.
struct TrimmedAlignment {
  std::vector<std::string> languages;
  std::vector<TokenRow> rows;
  std::size_t proto_index = 0;

  std::size_t width() const { return rows.empty() ? 0 : rows.front().size(); }
};

struct PairwiseResult {
  TokenRow a;
  TokenRow b;
  int score = 0;
};

// Optimal global alignment under the scheme, linear gap cost. Traceback
// ties prefer match/mismatch over a gap in b over a gap in a, so the
// output is deterministic.
PairwiseResult align_pairwise(const TokenRow& a, const TokenRow& b,
                              const ScoringScheme& scheme = ScoringScheme::builtin());

// Progressive alignment in input order: each word is aligned against the
// profile of the alignment built so far. A token scores against a column
// as the mean pairwise score over the column's non-gap cells; gap against
// gap contributes nothing.
Alignment align_multiple(const std::vector<TokenRow>& words,
                         const ScoringScheme& scheme = ScoringScheme::builtin());

// Merges every column whose descendant cells are all gaps into the nearest
// preceding surviving column (the following one for leading columns),
// concatenating proto tokens with ".". A proto gap contributes nothing to
// a merge. Throws DataError when every column lacks descendant material.
TrimmedAlignment trim(const Alignment& al, std::size_t proto_index);

// Row without its gaps.
TokenRow ungap(const TokenRow& row);

// Splits merged tokens on "." and drops gaps; inverts trimming for the
// proto row.
TokenRow expand_merged(const TokenRow& row);

// Debug rendering: one tab-separated row per line, language label first
// when present.
std::string format_alignment(const std::vector<std::string>& languages,
                             const std::vector<TokenRow>& rows);

}  // namespace protorec
