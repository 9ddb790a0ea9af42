#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "protorec/context.hpp"
#include "protorec/corpar.hpp"
#include "protorec/eval.hpp"
#include "protorec/svm.hpp"
#include "protorec/wordlist.hpp"

namespace protorec {

enum class Classifier { kSvm, kCorpar };

std::string classifier_name(Classifier c);            // "SVM" / "CorPaR"
Classifier parse_classifier(const std::string& name); // "svm" / "corpar"

struct ExperimentConfig {
  std::string proto_language;
  Classifier classifier = Classifier::kSvm;
  ContextConfig context;
  int trials = 100;
  double train_fraction = 0.9;
  std::int64_t seed = 0;
  SvmConfig svm;
  CorparConfig corpar;
  int threads = 1;  // > 1 runs cross-validation trials concurrently
};

// A trained reconstruction model: the classifier plus everything needed
// to align and code unseen reflex sets the same way as in training.
struct TrainedReconstructor {
  Classifier classifier = Classifier::kSvm;
  ContextConfig context;
  std::vector<std::string> languages;  // descendant order
  std::string proto_language;
  const SoundClassMap* sound_classes = &SoundClassMap::builtin();
  const ScoringScheme* scoring = &ScoringScheme::builtin();
  LinearModel svm;
  CorparModel corpar;
};

// Align (proto first), trim, code context, train the classifier. Only
// sets with a proto form and at least one reflex contribute; throws
// DataError when none qualifies. The descendant language order is taken
// from the sets' order of first appearance.
TrainedReconstructor train_pipeline(const std::vector<CognateSet>& sets,
                                    const ExperimentConfig& cfg);

// Same, with an explicit descendant language order (languages absent
// from the training sets may still be part of the schema).
TrainedReconstructor train_pipeline(const std::vector<CognateSet>& sets,
                                    const ExperimentConfig& cfg,
                                    const std::vector<std::string>& languages);

// Aligns the given reflexes, codes context (model languages without a
// reflex count as missing), predicts one proto label per column, drops
// gap labels, and expands merged labels. Languages unknown to the model
// are ignored; throws DataError when no usable reflex remains. The
// result can be empty when every column predicts a gap.
std::vector<std::string> predict_pipeline(
    const TrainedReconstructor& model,
    const std::map<std::string, TokenRow>& reflexes);

// Deterministic shuffle-and-split of n usable sets for one trial; the
// first element holds the training indices. Exposed for tests.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> crossval_split(
    std::size_t n, double train_fraction, std::int64_t seed, int trial);

// Runs cfg.trials rounds of shuffle/split/train/predict/evaluate over the
// usable cognate sets and averages the per-trial reports (n = trials).
// Identical inputs give identical reports, also with cfg.threads > 1.
// Empty predictions enter evaluation as the unknown marker. Throws
// DataError when fewer than 10 usable sets exist.
EvalReport crossval(const Wordlist& wl, const ExperimentConfig& cfg);

// One Table-style result row.
struct ReportRow {
  Classifier classifier;
  ContextConfig context;
  EvalReport report;
};

// TSV with columns CLASSIFIER, ANALYSIS, ED, NED, BC (four decimals).
std::string format_report(const std::vector<ReportRow>& rows);

// Versioned plain-text model persistence.
void save_model(const TrainedReconstructor& model, std::ostream& out);
TrainedReconstructor load_model(std::istream& in);

}  // namespace protorec
