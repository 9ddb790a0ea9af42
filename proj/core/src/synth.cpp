#include "protorec/synth.hpp"

#include <array>
#include <functional>
#include <map>

namespace protorec {

namespace {

struct FamilySpec {
  std::vector<std::string> initial_consonants;
  std::vector<std::string> medial_consonants;
  std::vector<std::string> final_consonants;
  std::vector<std::string> vowels;
  // daughter name -> (token, is_word_initial, is_final_consonant) -> token
  std::vector<std::pair<std::string,
                        std::function<std::string(const std::string&, bool, bool)>>>
      daughters;
};

SynthFamily generate(const FamilySpec& spec, std::size_t words) {
  SynthFamily family;
  family.proto_language = "Proto";

  Wordlist& wl = family.wordlist;
  wl.languages.push_back("Proto");
  for (const auto& [name, _] : spec.daughters) wl.languages.push_back(name);

  // Independent round-robin counters per position class. Every pool
  // element lands in words/|pool| cognate sets, which bounds how much of
  // any correspondence pattern a crossval holdout can swallow.
  std::size_t init_i = 0, medial_i = 0, final_i = 0, first_v = 0, later_v = 0;
  auto take = [](const std::vector<std::string>& pool, std::size_t& counter) {
    return pool[counter++ % pool.size()];
  };

  int next_id = 1;
  for (std::size_t w = 0; w < words; ++w) {
    const std::size_t syllables = 2 + w % 3;

    TokenRow proto;
    proto.push_back(take(spec.initial_consonants, init_i));
    proto.push_back(take(spec.vowels, first_v));
    for (std::size_t s = 2; s < syllables; ++s) {
      proto.push_back(take(spec.medial_consonants, medial_i));
      proto.push_back(take(spec.vowels, later_v));
    }
    proto.push_back(take(spec.final_consonants, final_i));
    proto.push_back("a");  // final vowel, lost in every daughter

    const std::string cogid = std::to_string(w + 1);
    const std::string concept = "concept-" + std::to_string(w + 1);
    auto add_form = [&](const std::string& language, TokenRow tokens) {
      WordForm form;
      form.id = std::to_string(next_id++);
      form.language = language;
      form.concept = concept;
      form.cogid = cogid;
      form.tokens = std::move(tokens);
      wl.forms.push_back(std::move(form));
    };

    add_form("Proto", proto);
    for (const auto& [name, rule] : spec.daughters) {
      TokenRow reflex;
      // Word-final vowel loss: the last proto token never surfaces.
      for (std::size_t i = 0; i + 1 < proto.size(); ++i) {
        reflex.push_back(rule(proto[i], i == 0, i + 2 == proto.size()));
      }
      add_form(name, reflex);
    }
  }
  return family;
}

std::string map_token(const std::map<std::string, std::string>& table,
                      const std::string& token) {
  auto it = table.find(token);
  return it == table.end() ? token : it->second;
}

}  // namespace

SynthFamily make_regular_family(std::size_t words) {
  FamilySpec spec;
  spec.initial_consonants = {"p", "t", "k", "b", "d", "g", "s", "m"};
  spec.medial_consonants = {"z", "n", "l", "r"};
  spec.final_consonants = {"w", "j", "h", "r", "l", "s", "m", "d"};
  spec.vowels = {"a", "e", "i", "o", "u"};

  // All substitutions keep the sound class of their source, so cognates
  // align column-for-column.
  static const std::map<std::string, std::string> west = {
      {"p", "f"}, {"t", "th"}, {"k", "x"},
      {"b", "v"}, {"d", "dh"}, {"g", "gh"}};
  static const std::map<std::string, std::string> north = {{"z", "s"}};
  static const std::map<std::string, std::string> south = {
      {"o", "u"}, {"e", "i"}, {"n", "m"}};

  spec.daughters = {
      {"West",
       [](const std::string& t, bool, bool) { return map_token(west, t); }},
      {"North",
       [](const std::string& t, bool initial, bool) {
         if (initial && t == "k") return std::string("q");
         return map_token(north, t);
       }},
      {"East", [](const std::string& t, bool, bool) { return t; }},
      {"South",
       [](const std::string& t, bool, bool) { return map_token(south, t); }},
  };
  return generate(spec, words);
}

SynthFamily make_final_merger_family(std::size_t words) {
  FamilySpec spec;
  spec.initial_consonants = {"p", "t", "k", "m"};
  spec.medial_consonants = {"z", "n", "l", "r"};
  spec.final_consonants = {"b", "d", "g", "s", "w", "j", "h", "l"};
  spec.vowels = {"a", "e", "i", "o", "u"};

  static const std::map<std::string, std::string> west = {{"t", "th"}};
  static const std::map<std::string, std::string> north = {{"z", "s"}};
  static const std::map<std::string, std::string> south = {{"o", "u"}};

  // Word-final devoicing b > p in every daughter. Initial p is frequent
  // while final p never occurs, so the bare (p p p p) pattern favours
  // proto p and misleads any classifier that cannot see word position.
  auto devoice = [](const std::string& t, bool final_consonant) {
    return (final_consonant && t == "b") ? std::string("p") : t;
  };

  spec.daughters = {
      {"West",
       [devoice](const std::string& t, bool, bool fin) {
         return map_token(west, devoice(t, fin));
       }},
      {"North",
       [devoice](const std::string& t, bool, bool fin) {
         return map_token(north, devoice(t, fin));
       }},
      {"East",
       [devoice](const std::string& t, bool, bool fin) { return devoice(t, fin); }},
      {"South",
       [devoice](const std::string& t, bool, bool fin) {
         return map_token(south, devoice(t, fin));
       }},
  };
  return generate(spec, words);
}

}  // namespace protorec
