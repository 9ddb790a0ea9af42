#include "protorec/context.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "protorec/errors.hpp"
#include "protorec/symbols.hpp"

namespace protorec {

std::string ContextConfig::label() const {
  std::string out;
  if (pos) out += "Pos";
  if (str) out += "Str";
  if (ini) out += "Ini";
  return out.empty() ? "none" : out;
}

ContextConfig ContextConfig::parse(const std::string& text) {
  std::string lowered;
  for (char c : text) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  ContextConfig cfg;
  if (lowered.empty() || lowered == "none") return cfg;
  std::size_t start = 0;
  while (start <= lowered.size()) {
    std::size_t pos = lowered.find(',', start);
    std::string part = pos == std::string::npos ? lowered.substr(start)
                                                : lowered.substr(start, pos - start);
    if (part == "pos") {
      cfg.pos = true;
    } else if (part == "str") {
      cfg.str = true;
    } else if (part == "ini") {
      cfg.ini = true;
    } else {
      throw DataError("unknown context feature \"" + part +
                      "\" (expected pos, str, ini, or none)");
    }
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return cfg;
}

std::vector<ContextConfig> ContextConfig::all() {
  std::vector<ContextConfig> configs;
  for (bool pos : {true, false}) {
    for (bool str : {true, false}) {
      for (bool ini : {true, false}) {
        configs.push_back(ContextConfig{pos, str, ini});
      }
    }
  }
  return configs;
}

std::vector<char> prosodic_profile(const TokenRow& tokens,
                                   const SoundClassMap& scm) {
  if (tokens.empty()) {
    throw std::invalid_argument("prosodic_profile requires a non-empty word");
  }
  std::vector<char> profile;
  profile.reserve(tokens.size());
  bool seen_vowel = false;
  for (const auto& token : tokens) {
    assert(token != kGap);
    char cls = scm.classify(token);
    if (cls == '1') {
      profile.push_back('T');
    } else if (cls == 'V') {
      profile.push_back(seen_vowel ? 'v' : 'V');
      seen_vowel = true;
    } else {
      profile.push_back(seen_vowel ? 'c' : 'C');
    }
  }
  return profile;
}

namespace {

// Tie order C < V < c < v < T.
int prosody_rank(char symbol) {
  switch (symbol) {
    case 'C': return 0;
    case 'V': return 1;
    case 'c': return 2;
    case 'v': return 3;
    case 'T': return 4;
  }
  return 5;
}

char majority_prosody(const std::vector<char>& votes) {
  assert(!votes.empty());
  static constexpr std::array<char, 5> kOrder = {'C', 'V', 'c', 'v', 'T'};
  std::array<int, 5> counts{};
  for (char v : votes) counts[prosody_rank(v)]++;
  char best = 'C';
  int best_count = -1;
  for (std::size_t i = 0; i < kOrder.size(); ++i) {
    if (counts[i] > best_count) {
      best = kOrder[i];
      best_count = counts[i];
    }
  }
  return best;
}

}  // namespace

std::vector<EnrichedSite> enrich(const std::vector<std::string>& row_languages,
                                 const std::vector<TokenRow>& rows,
                                 const TokenRow* proto_labels,
                                 const SiteSchema& schema,
                                 const SoundClassMap& scm) {
  if (rows.empty() || rows.front().empty()) {
    throw std::invalid_argument("enrich requires a non-empty alignment");
  }
  const std::size_t width = rows.front().size();
  assert(row_languages.size() == rows.size());
  assert(proto_labels == nullptr || proto_labels->size() == width);

  // Prosody per row, projected from the ungapped word back onto columns.
  std::vector<std::vector<char>> projected(rows.size(),
                                           std::vector<char>(width, '\0'));
  if (schema.context.str) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<char> profile = prosodic_profile(ungap(rows[r]), scm);
      std::size_t k = 0;
      for (std::size_t c = 0; c < width; ++c) {
        if (rows[r][c] != kGap) projected[r][c] = profile[k++];
      }
    }
  }

  // Schema slot -> row index, or -1 for languages missing from this set.
  std::vector<int> row_of(schema.languages.size(), -1);
  for (std::size_t s = 0; s < schema.languages.size(); ++s) {
    for (std::size_t r = 0; r < row_languages.size(); ++r) {
      if (row_languages[r] == schema.languages[s]) {
        row_of[s] = static_cast<int>(r);
        break;
      }
    }
  }

  std::vector<EnrichedSite> sites;
  sites.reserve(width);
  for (std::size_t c = 0; c < width; ++c) {
    EnrichedSite site;
    site.reflexes.reserve(schema.languages.size());
    for (std::size_t s = 0; s < schema.languages.size(); ++s) {
      site.reflexes.push_back(row_of[s] < 0 ? kMissing : rows[row_of[s]][c]);
    }
    if (schema.context.pos) site.pos = static_cast<int>(c) + 1;
    if (schema.context.ini) {
      site.ini = (c == 0) ? '^' : (c + 1 == width ? '$' : '-');
    }
    if (schema.context.str) {
      std::vector<char> votes;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r][c] != kGap) votes.push_back(projected[r][c]);
      }
      site.str = majority_prosody(votes);
    }
    if (proto_labels != nullptr) site.label = (*proto_labels)[c];
    sites.push_back(std::move(site));
  }
  return sites;
}

std::vector<EnrichedSite> enrich(const TrimmedAlignment& tal,
                                 const SiteSchema& schema,
                                 const SoundClassMap& scm) {
  std::vector<std::string> row_languages;
  std::vector<TokenRow> rows;
  for (std::size_t r = 0; r < tal.rows.size(); ++r) {
    if (r == tal.proto_index) continue;
    row_languages.push_back(tal.languages[r]);
    rows.push_back(tal.rows[r]);
  }
  const TokenRow& labels = tal.rows[tal.proto_index];
  return enrich(row_languages, rows, &labels, schema, scm);
}

std::string format_sites(const std::vector<EnrichedSite>& sites,
                         const SiteSchema& schema) {
  std::ostringstream out;
  for (const auto& lang : schema.languages) out << lang << '\t';
  if (schema.context.pos) out << "P\t";
  if (schema.context.str) out << "S\t";
  if (schema.context.ini) out << "Ini\t";
  out << "LABEL\n";
  for (const auto& site : sites) {
    for (const auto& reflex : site.reflexes) out << reflex << '\t';
    if (schema.context.pos) out << *site.pos << '\t';
    if (schema.context.str) out << *site.str << '\t';
    if (schema.context.ini) out << *site.ini << '\t';
    out << (site.label ? *site.label : "") << '\n';
  }
  return out.str();
}

}  // namespace protorec
