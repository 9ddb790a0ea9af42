#include <charconv>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "protorec/errors.hpp"
#include "protorec/harness.hpp"

namespace protorec {

namespace {

constexpr int kModelVersion = 1;

// %.17g round-trips IEEE doubles exactly.
std::string fmt_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find('\t', start);
    if (pos == std::string::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  std::vector<std::string> expect(const std::string& tag) {
    std::string line;
    if (!std::getline(in_, line)) {
      throw FormatError("model file: unexpected end of file, expected " + tag);
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::vector<std::string> cells = split_tab(line);
    if (cells.empty() || cells.front() != tag) {
      throw FormatError("model file: expected " + tag + " line");
    }
    return cells;
  }

 private:
  std::istream& in_;
};

int to_int(const std::string& text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FormatError(std::string("model file: bad ") + what + " \"" + text +
                      "\"");
  }
  return value;
}

std::int64_t to_int64(const std::string& text, const char* what) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw FormatError(std::string("model file: bad ") + what + " \"" + text +
                      "\"");
  }
  return value;
}

double to_double(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw FormatError(std::string("model file: bad ") + what + " \"" + text +
                      "\"");
  }
}

}  // namespace

void save_model(const TrainedReconstructor& model, std::ostream& out) {
  out << "PROTOREC-MODEL\t" << kModelVersion << '\n';
  out << "PROTO\t" << model.proto_language << '\n';
  out << "LANGUAGES";
  for (const auto& language : model.languages) out << '\t' << language;
  out << '\n';
  out << "CONTEXT\t";
  {
    std::string parts;
    if (model.context.pos) parts += "pos,";
    if (model.context.str) parts += "str,";
    if (model.context.ini) parts += "ini,";
    if (parts.empty()) {
      out << "none";
    } else {
      parts.pop_back();
      out << parts;
    }
  }
  out << '\n';

  if (model.classifier == Classifier::kSvm) {
    const LinearModel& svm = model.svm;
    out << "CLASSIFIER\tsvm\n";
    out << "SVM-CONFIG\t" << fmt_double(svm.config.lambda) << '\t'
        << svm.config.epochs << '\t' << svm.config.seed << '\n';
    out << "CLASSES";
    for (const auto& cls : svm.classes) out << '\t' << cls;
    out << '\n';
    std::size_t features = 0;
    for (const auto& slot : svm.space.slot_index) features += slot.size();
    out << "FEATURES\t" << svm.space.dimension << '\t' << features << '\n';
    for (std::size_t slot = 0; slot < svm.space.slot_index.size(); ++slot) {
      for (const auto& [symbol, index] : svm.space.slot_index[slot]) {
        out << "F\t" << slot << '\t' << symbol << '\t' << index << '\n';
      }
    }
    for (std::size_t c = 0; c < svm.classes.size(); ++c) {
      out << "W\t" << svm.classes[c];
      const auto& w = svm.weights[c];
      for (std::size_t d = 0; d < w.size(); ++d) {
        if (w[d] != 0.0) out << '\t' << d << ':' << fmt_double(w[d]);
      }
      out << '\n';
    }
  } else {
    const CorparModel& corpar = model.corpar;
    out << "CLASSIFIER\tcorpar\n";
    out << "PATTERNS\t" << corpar.patterns.size() << '\t'
        << (corpar.patterns.empty() ? 0 : corpar.patterns.front().key.size())
        << '\n';
    for (const auto& pattern : corpar.patterns) {
      out << "P";
      for (const auto& cell : pattern.key) out << '\t' << cell;
      out << '\t' << pattern.label << '\t' << pattern.coverage << '\t'
          << pattern.reflex_count << '\n';
    }
  }
}

TrainedReconstructor load_model(std::istream& in) {
  LineReader reader(in);

  auto header = reader.expect("PROTOREC-MODEL");
  if (header.size() != 2 || to_int(header[1], "version") != kModelVersion) {
    throw FormatError("model file: unsupported version");
  }

  TrainedReconstructor model;
  auto proto = reader.expect("PROTO");
  if (proto.size() != 2) throw FormatError("model file: bad PROTO line");
  model.proto_language = proto[1];

  auto languages = reader.expect("LANGUAGES");
  model.languages.assign(languages.begin() + 1, languages.end());

  auto context = reader.expect("CONTEXT");
  if (context.size() != 2) throw FormatError("model file: bad CONTEXT line");
  model.context = ContextConfig::parse(context[1]);

  auto classifier = reader.expect("CLASSIFIER");
  if (classifier.size() != 2) {
    throw FormatError("model file: bad CLASSIFIER line");
  }

  if (classifier[1] == "svm") {
    model.classifier = Classifier::kSvm;
    LinearModel& svm = model.svm;
    svm.context = model.context;

    auto config = reader.expect("SVM-CONFIG");
    if (config.size() != 4) throw FormatError("model file: bad SVM-CONFIG");
    svm.config.lambda = to_double(config[1], "lambda");
    svm.config.epochs = to_int(config[2], "epochs");
    svm.config.seed = to_int64(config[3], "seed");

    auto classes = reader.expect("CLASSES");
    svm.classes.assign(classes.begin() + 1, classes.end());

    auto features = reader.expect("FEATURES");
    if (features.size() != 3) throw FormatError("model file: bad FEATURES");
    svm.space.dimension = to_int(features[1], "dimension");
    const int count = to_int(features[2], "feature count");

    svm.space.slot_names = model.languages;
    if (model.context.pos) svm.space.slot_names.push_back("#pos");
    if (model.context.str) svm.space.slot_names.push_back("#str");
    if (model.context.ini) svm.space.slot_names.push_back("#ini");
    svm.space.slot_index.resize(svm.space.slot_names.size());
    for (int i = 0; i < count; ++i) {
      auto feature = reader.expect("F");
      if (feature.size() != 4) throw FormatError("model file: bad F line");
      auto slot = static_cast<std::size_t>(to_int(feature[1], "slot"));
      if (slot >= svm.space.slot_index.size()) {
        throw FormatError("model file: slot out of range");
      }
      svm.space.slot_index[slot].emplace(feature[2],
                                         to_int(feature[3], "feature id"));
    }

    svm.weights.assign(svm.classes.size(),
                       std::vector<double>(svm.space.dimension + 1, 0.0));
    for (std::size_t c = 0; c < svm.classes.size(); ++c) {
      auto weights = reader.expect("W");
      if (weights.size() < 2 || weights[1] != svm.classes[c]) {
        throw FormatError("model file: W lines must follow CLASSES order");
      }
      for (std::size_t i = 2; i < weights.size(); ++i) {
        std::size_t colon = weights[i].rfind(':');
        if (colon == std::string::npos) {
          throw FormatError("model file: bad weight entry \"" + weights[i] +
                            "\"");
        }
        int index = to_int(weights[i].substr(0, colon), "weight index");
        if (index < 0 || index > svm.space.dimension) {
          throw FormatError("model file: weight index out of range");
        }
        svm.weights[c][static_cast<std::size_t>(index)] =
            to_double(weights[i].substr(colon + 1), "weight");
      }
    }
  } else if (classifier[1] == "corpar") {
    model.classifier = Classifier::kCorpar;
    auto patterns = reader.expect("PATTERNS");
    if (patterns.size() != 3) throw FormatError("model file: bad PATTERNS");
    const int count = to_int(patterns[1], "pattern count");
    const int cells = to_int(patterns[2], "key width");
    for (int i = 0; i < count; ++i) {
      auto line = reader.expect("P");
      if (line.size() != static_cast<std::size_t>(cells) + 4) {
        throw FormatError("model file: bad P line");
      }
      ConsensusPattern pattern;
      pattern.key.assign(line.begin() + 1, line.begin() + 1 + cells);
      pattern.label = line[static_cast<std::size_t>(cells) + 1];
      pattern.coverage = to_int(line[static_cast<std::size_t>(cells) + 2],
                                "coverage");
      pattern.reflex_count = to_int(line[static_cast<std::size_t>(cells) + 3],
                                    "reflex count");
      model.corpar.patterns.push_back(std::move(pattern));
    }
  } else {
    throw FormatError("model file: unknown classifier \"" + classifier[1] +
                      "\"");
  }
  return model;
}

}  // namespace protorec
