#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace protorec {

// One language's tokenized word, tied to a concept and a cognate set.
struct WordForm {
  std::string id;
  std::string language;
  std::string concept;
  std::vector<std::string> tokens;  // non-empty; never "-" or "Ø"
  std::string cogid;
};

struct Wordlist {
  std::vector<WordForm> forms;
  std::vector<std::string> languages;  // order of first appearance
};

// All forms sharing a cognate-set id, with the proto form split out.
// Reflexes keep the wordlist's language order.
struct CognateSet {
  std::string cogid;
  std::optional<WordForm> proto;
  std::vector<std::pair<std::string, WordForm>> reflexes;

  const WordForm* reflex(const std::string& language) const;
  bool usable_for_training() const { return proto.has_value() && !reflexes.empty(); }
};

// Parses a tab-separated wordlist. The first row is a header holding at
// least ID, LANGUAGE (alias DOCULECT), CONCEPT, TOKENS, and COGID in any
// order and case; extra columns are ignored. TOKENS cells are split on
// single spaces.
//
// Throws FormatError for structural problems (missing columns, ragged
// rows, empty or reserved tokens) and DataError for duplicate ids.
Wordlist parse_wordlist(std::string_view text);

// Canonical five-column TSV; parse_wordlist(to_tsv(wl)) is field-identical.
std::string to_tsv(const Wordlist& wl);

// Groups forms into cognate sets ordered by first appearance of the cogid.
// Throws DataError when proto_language is unknown or when a language has
// two forms in one set.
std::vector<CognateSet> cognate_sets(const Wordlist& wl,
                                     const std::string& proto_language);

}  // namespace protorec
