#pragma once

#include <optional>
#include <string>
#include <vector>

#include "protorec/alignment.hpp"
#include "protorec/sound_classes.hpp"

namespace protorec {

// Which context features to code alongside the bare correspondence
// pattern: position index (Pos), prosodic structure (Str), and the
// word-boundary marker (Ini). The eight combinations are addressed by
// labels "PosStrIni" ... "none".
struct ContextConfig {
  bool pos = false;
  bool str = false;
  bool ini = false;

  bool operator==(const ContextConfig&) const = default;

  // "PosStrIni", "StrIni", ..., "none".
  std::string label() const;
  // Accepts labels like "pos,str,ini", "str,ini", "none" (case-insensitive).
  static ContextConfig parse(const std::string& text);
  static std::vector<ContextConfig> all();
};

// Ordered descendant languages plus the context features coded for them.
// All sites fed to one classifier share a schema.
struct SiteSchema {
  std::vector<std::string> languages;
  ContextConfig context;
};

// One alignment column over the descendant languages, in transposed view:
// the reflex tokens ("-" for a gap, "Ø" for a language missing from the
// cognate set) plus optional context features and, during training, the
// proto label (possibly merged, e.g. "r.E", or "-").
struct EnrichedSite {
  std::vector<std::string> reflexes;  // parallel to SiteSchema::languages
  std::optional<int> pos;             // 1-based column index
  std::optional<char> str;            // 'C' 'c' 'V' 'v' 'T'
  std::optional<char> ini;            // '^' '$' '-'
  std::optional<std::string> label;
};

// Per-token prosody: 'C' consonant before the first vowel, 'V' the first
// vowel, 'c' later consonant or glide, 'v' later vowel, 'T' tone.
std::vector<char> prosodic_profile(const TokenRow& tokens,
                                   const SoundClassMap& scm);

// One site per column of the aligned descendant rows. row_languages names
// the rows; schema languages absent from it are marked "Ø" in every site.
// proto_labels, when given, supplies one label per column. Str is a
// majority vote over the prosody of the column's non-gap cells, ties
// resolved in the order C < V < c < v < T.
std::vector<EnrichedSite> enrich(const std::vector<std::string>& row_languages,
                                 const std::vector<TokenRow>& rows,
                                 const TokenRow* proto_labels,
                                 const SiteSchema& schema,
                                 const SoundClassMap& scm);

// Training view: splits the proto row of a trimmed alignment into labels.
std::vector<EnrichedSite> enrich(const TrimmedAlignment& tal,
                                 const SiteSchema& schema,
                                 const SoundClassMap& scm);

// Debug dump mirroring the transposed alignment view: one line per site.
std::string format_sites(const std::vector<EnrichedSite>& sites,
                         const SiteSchema& schema);

}  // namespace protorec
