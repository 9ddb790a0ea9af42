#include "protorec/wordlist.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "protorec/errors.hpp"
#include "protorec/symbols.hpp"

namespace protorec {

namespace {

std::string upper(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return s;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      cells.emplace_back(line.substr(start));
      return cells;
    }
    cells.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> split_tokens(std::string_view cell, std::size_t row) {
  std::vector<std::string> tokens = split(cell, ' ');
  for (const auto& tok : tokens) {
    if (tok.empty()) {
      throw FormatError("row " + std::to_string(row) +
                        ": empty token in TOKENS (check for double spaces)");
    }
    if (tok == kGap || tok == kMissing) {
      throw FormatError("row " + std::to_string(row) + ": reserved symbol \"" +
                        tok + "\" used as a token");
    }
  }
  return tokens;
}

}  // namespace

const WordForm* CognateSet::reflex(const std::string& language) const {
  for (const auto& [lang, form] : reflexes) {
    if (lang == language) return &form;
  }
  return nullptr;
}

Wordlist parse_wordlist(std::string_view text) {
  // Strip a UTF-8 BOM if present.
  if (text.size() >= 3 && text.substr(0, 3) == "\xEF\xBB\xBF") {
    text.remove_prefix(3);
  }

  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t pos = text.find('\n', start);
    std::string_view line = pos == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, pos - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw FormatError("empty wordlist: no header row");

  std::vector<std::string> header = split(lines[0], '\t');
  std::unordered_map<std::string, std::size_t> columns;
  for (std::size_t i = 0; i < header.size(); ++i) {
    std::string name = upper(header[i]);
    if (name == "DOCULECT") name = "LANGUAGE";
    columns.emplace(name, i);  // first wins if a name repeats
  }
  auto require = [&](const char* name) {
    auto it = columns.find(name);
    if (it == columns.end()) {
      throw FormatError(std::string("missing required column ") + name);
    }
    return it->second;
  };
  const std::size_t col_id = require("ID");
  const std::size_t col_language = require("LANGUAGE");
  const std::size_t col_concept = require("CONCEPT");
  const std::size_t col_tokens = require("TOKENS");
  const std::size_t col_cogid = require("COGID");

  Wordlist wl;
  std::unordered_set<std::string> seen_ids;
  std::unordered_set<std::string> seen_languages;
  for (std::size_t row = 1; row < lines.size(); ++row) {
    if (lines[row].empty()) continue;
    std::vector<std::string> cells = split(lines[row], '\t');
    if (cells.size() < header.size()) {
      throw FormatError("row " + std::to_string(row + 1) + ": expected " +
                        std::to_string(header.size()) + " cells, got " +
                        std::to_string(cells.size()));
    }
    WordForm form;
    form.id = cells[col_id];
    form.language = cells[col_language];
    form.concept = cells[col_concept];
    form.cogid = cells[col_cogid];
    if (form.id.empty()) {
      throw FormatError("row " + std::to_string(row + 1) + ": empty ID");
    }
    if (form.language.empty()) {
      throw FormatError("row " + std::to_string(row + 1) + ": empty LANGUAGE");
    }
    if (form.cogid.empty()) {
      throw FormatError("row " + std::to_string(row + 1) + ": empty COGID");
    }
    if (cells[col_tokens].empty()) {
      throw FormatError("row " + std::to_string(row + 1) +
                        ": empty TOKENS cell");
    }
    form.tokens = split_tokens(cells[col_tokens], row + 1);
    if (!seen_ids.insert(form.id).second) {
      throw DataError("duplicate form id \"" + form.id + "\"");
    }
    if (seen_languages.insert(form.language).second) {
      wl.languages.push_back(form.language);
    }
    wl.forms.push_back(std::move(form));
  }
  return wl;
}

std::string to_tsv(const Wordlist& wl) {
  std::ostringstream out;
  out << "ID\tLANGUAGE\tCONCEPT\tTOKENS\tCOGID\n";
  for (const auto& form : wl.forms) {
    out << form.id << '\t' << form.language << '\t' << form.concept << '\t';
    for (std::size_t i = 0; i < form.tokens.size(); ++i) {
      if (i > 0) out << ' ';
      out << form.tokens[i];
    }
    out << '\t' << form.cogid << '\n';
  }
  return out.str();
}

std::vector<CognateSet> cognate_sets(const Wordlist& wl,
                                     const std::string& proto_language) {
  if (std::find(wl.languages.begin(), wl.languages.end(), proto_language) ==
      wl.languages.end()) {
    throw DataError("unknown proto language \"" + proto_language + "\"");
  }

  std::vector<CognateSet> sets;
  std::unordered_map<std::string, std::size_t> by_cogid;
  for (const auto& form : wl.forms) {
    auto [it, inserted] = by_cogid.emplace(form.cogid, sets.size());
    if (inserted) {
      sets.push_back(CognateSet{form.cogid, std::nullopt, {}});
    }
    CognateSet& set = sets[it->second];
    if (form.language == proto_language) {
      if (set.proto.has_value()) {
        throw DataError("duplicate form for language \"" + form.language +
                        "\" in cognate set \"" + form.cogid + "\"");
      }
      set.proto = form;
    } else {
      if (set.reflex(form.language) != nullptr) {
        throw DataError("duplicate form for language \"" + form.language +
                        "\" in cognate set \"" + form.cogid + "\"");
      }
      set.reflexes.emplace_back(form.language, form);
    }
  }

  // Reflexes follow the wordlist's language order, not insertion order.
  std::unordered_map<std::string, std::size_t> rank;
  for (std::size_t i = 0; i < wl.languages.size(); ++i) {
    rank.emplace(wl.languages[i], i);
  }
  for (auto& set : sets) {
    std::stable_sort(set.reflexes.begin(), set.reflexes.end(),
                     [&](const auto& a, const auto& b) {
                       return rank.at(a.first) < rank.at(b.first);
                     });
  }
  return sets;
}

}  // namespace protorec
