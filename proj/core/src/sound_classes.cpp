#include "protorec/sound_classes.hpp"

#include <array>
#include <unordered_map>

namespace protorec {

char32_t first_codepoint(const std::string& utf8) {
  if (utf8.empty()) return 0xFFFD;
  const auto* bytes = reinterpret_cast<const unsigned char*>(utf8.data());
  unsigned char lead = bytes[0];
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    cp = lead & 0x1F;
    extra = 1;
  } else if ((lead & 0xF0) == 0xE0) {
    cp = lead & 0x0F;
    extra = 2;
  } else if ((lead & 0xF8) == 0xF0) {
    cp = lead & 0x07;
    extra = 3;
  } else {
    return 0xFFFD;
  }
  if (utf8.size() < static_cast<std::size_t>(extra) + 1) return 0xFFFD;
  for (int i = 1; i <= extra; ++i) {
    if ((bytes[i] & 0xC0) != 0x80) return 0xFFFD;
    cp = (cp << 6) | (bytes[i] & 0x3F);
  }
  return cp;
}

namespace {

const std::unordered_map<char32_t, char>& class_table() {
  static const std::unordered_map<char32_t, char> table = [] {
    std::unordered_map<char32_t, char> t;
    auto put = [](std::unordered_map<char32_t, char>& m, const char32_t* cps,
                  char cls) {
      for (const char32_t* p = cps; *p != 0; ++p) m.emplace(*p, cls);
    };
    // Vowels, including the common precomposed nasal/long variants.
    put(t,
        U"aeiouyæøœɑɒɐəɚɛɜɪɨɔʊʉʌɤɯɵʏ"
        U"ãẽĩõũáàâäāéèêëēíìîïīóòôöōúùûüū",
        'V');
    // Labial obstruents.
    put(t, U"pbfvɸβʙ", 'P');
    // Coronal obstruents and affricates.
    put(t, U"tdθðʈɖɗcʦʧʤʣ", 'T');
    // Dorsal obstruents.
    put(t, U"kgqxɢɣχɠɟʛ", 'K');
    // Sibilants.
    put(t, U"szʃʒɕʑʂʐ", 'S');
    // Nasals.
    put(t, U"mnŋɲɳɴɱ", 'N');
    // Laterals.
    put(t, U"lʎɭɬɮł", 'L');
    // Rhotics.
    put(t, U"rɾɹɻʀʁɽ", 'R');
    // Glides.
    put(t, U"wʋɥʍ", 'W');
    put(t, U"jʝ", 'Y');
    // Laryngeals.
    put(t, U"hɦʔʕħʜʢ", 'H');
    // Tones: digits, superscripts, Chao tone letters.
    put(t, U"0123456789⁰¹²³⁴⁵⁶⁷⁸⁹˥˦˧˨˩", '1');
    return t;
  }();
  return table;
}

}  // namespace

char SoundClassMap::classify(const std::string& token) const {
  const auto& table = class_table();
  auto it = table.find(first_codepoint(token));
  return it == table.end() ? '?' : it->second;
}

const SoundClassMap& SoundClassMap::builtin() {
  static const SoundClassMap map;
  return map;
}

int ScoringScheme::score_classes(char a, char b) const {
  if (a == b) return same;
  // Small relatedness table: glides with vowels and each other, sibilants
  // with coronals, laryngeals with dorsals.
  static constexpr std::array<std::pair<char, char>, 5> kRelated = {{
      {'V', 'W'},
      {'V', 'Y'},
      {'W', 'Y'},
      {'T', 'S'},
      {'K', 'H'},
  }};
  for (auto [x, y] : kRelated) {
    if ((a == x && b == y) || (a == y && b == x)) return related;
  }
  return different;
}

int ScoringScheme::score_tokens(const std::string& a,
                                const std::string& b) const {
  return score_classes(classes->classify(a), classes->classify(b));
}

const ScoringScheme& ScoringScheme::builtin() {
  static const ScoringScheme scheme;
  return scheme;
}

}  // namespace protorec
