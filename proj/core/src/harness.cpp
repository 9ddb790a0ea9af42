#include "protorec/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "protorec/errors.hpp"
#include "protorec/rng.hpp"
#include "protorec/symbols.hpp"

namespace protorec {

std::string classifier_name(Classifier c) {
  return c == Classifier::kSvm ? "SVM" : "CorPaR";
}

Classifier parse_classifier(const std::string& name) {
  if (name == "svm" || name == "SVM") return Classifier::kSvm;
  if (name == "corpar" || name == "CorPaR") return Classifier::kCorpar;
  throw DataError("unknown classifier \"" + name +
                  "\" (expected svm or corpar)");
}

namespace {

// Labeled sites of one usable cognate set: align proto-first, trim, code.
std::vector<EnrichedSite> sites_of_set(const CognateSet& set,
                                       const SiteSchema& schema,
                                       const ScoringScheme& scoring) {
  std::vector<std::string> row_languages;
  std::vector<TokenRow> words;
  row_languages.push_back("");  // proto row, label source only
  words.push_back(set.proto->tokens);
  for (const auto& [language, form] : set.reflexes) {
    row_languages.push_back(language);
    words.push_back(form.tokens);
  }
  Alignment al = align_multiple(words, scoring);
  al.languages = std::move(row_languages);
  TrimmedAlignment tal = trim(al, 0);
  return enrich(tal, schema, *scoring.classes);
}

std::vector<std::string> collect_languages(const std::vector<CognateSet>& sets) {
  std::vector<std::string> languages;
  for (const auto& set : sets) {
    for (const auto& [language, _] : set.reflexes) {
      if (std::find(languages.begin(), languages.end(), language) ==
          languages.end()) {
        languages.push_back(language);
      }
    }
  }
  return languages;
}

}  // namespace

TrainedReconstructor train_pipeline(const std::vector<CognateSet>& sets,
                                    const ExperimentConfig& cfg) {
  return train_pipeline(sets, cfg, collect_languages(sets));
}

TrainedReconstructor train_pipeline(const std::vector<CognateSet>& sets,
                                    const ExperimentConfig& cfg,
                                    const std::vector<std::string>& languages) {
  TrainedReconstructor model;
  model.classifier = cfg.classifier;
  model.context = cfg.context;
  model.languages = languages;
  model.proto_language = cfg.proto_language;

  SiteSchema schema{model.languages, cfg.context};
  std::vector<EnrichedSite> sites;
  std::size_t usable = 0;
  for (const auto& set : sets) {
    if (!set.usable_for_training()) continue;
    ++usable;
    std::vector<EnrichedSite> set_sites =
        sites_of_set(set, schema, *model.scoring);
    sites.insert(sites.end(), std::make_move_iterator(set_sites.begin()),
                 std::make_move_iterator(set_sites.end()));
  }
  if (usable == 0) {
    throw DataError(
        "no usable cognate sets: training needs a proto form plus at least "
        "one reflex per set");
  }

  if (cfg.classifier == Classifier::kSvm) {
    model.svm = svm_train(sites, schema, cfg.svm);
  } else {
    model.corpar = corpar_train(sites, cfg.context, cfg.corpar);
  }
  return model;
}

std::vector<std::string> predict_pipeline(
    const TrainedReconstructor& model,
    const std::map<std::string, TokenRow>& reflexes) {
  std::vector<std::string> row_languages;
  std::vector<TokenRow> words;
  for (const auto& language : model.languages) {
    auto it = reflexes.find(language);
    if (it == reflexes.end()) continue;
    row_languages.push_back(language);
    words.push_back(it->second);
  }
  if (words.empty()) {
    throw DataError("prediction needs at least one reflex in a language "
                    "known to the model");
  }

  Alignment al = align_multiple(words, *model.scoring);
  SiteSchema schema{model.languages, model.context};
  std::vector<EnrichedSite> sites =
      enrich(row_languages, al.rows, nullptr, schema, *model.sound_classes);

  TokenRow labels;
  labels.reserve(sites.size());
  for (const auto& site : sites) {
    labels.push_back(model.classifier == Classifier::kSvm
                         ? svm_predict(site, model.svm)
                         : corpar_predict(site, model.context, model.corpar));
  }
  return expand_merged(labels);
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> crossval_split(
    std::size_t n, double train_fraction, std::int64_t seed, int trial) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  SplitMix64 rng(static_cast<std::uint64_t>(seed) +
                 static_cast<std::uint64_t>(trial));
  rng.shuffle(order);

  auto train_count = static_cast<std::size_t>(
      std::floor(static_cast<double>(n) * train_fraction));
  train_count = std::clamp<std::size_t>(train_count, 1, n - 1);
  std::vector<std::size_t> train(order.begin(), order.begin() + train_count);
  std::vector<std::size_t> test(order.begin() + train_count, order.end());
  return {std::move(train), std::move(test)};
}

namespace {

EvalReport run_trial(const std::vector<CognateSet>& usable,
                     const std::vector<std::string>& languages,
                     const ExperimentConfig& cfg, int trial) {
  auto [train_idx, test_idx] =
      crossval_split(usable.size(), cfg.train_fraction, cfg.seed, trial);

  std::vector<CognateSet> train_sets;
  train_sets.reserve(train_idx.size());
  for (std::size_t i : train_idx) train_sets.push_back(usable[i]);
  TrainedReconstructor model = train_pipeline(train_sets, cfg, languages);

  std::vector<std::pair<TokenRow, TokenRow>> pairs;
  pairs.reserve(test_idx.size());
  for (std::size_t i : test_idx) {
    const CognateSet& set = usable[i];
    std::map<std::string, TokenRow> reflexes;
    for (const auto& [language, form] : set.reflexes) {
      reflexes.emplace(language, form.tokens);
    }
    TokenRow predicted = predict_pipeline(model, reflexes);
    if (predicted.empty()) predicted.push_back(kUnknown);
    pairs.emplace_back(std::move(predicted), set.proto->tokens);
  }
  return evaluate(pairs);
}

}  // namespace

EvalReport crossval(const Wordlist& wl, const ExperimentConfig& cfg) {
  if (cfg.trials < 1) throw DataError("crossval needs at least one trial");
  if (!(cfg.train_fraction > 0.0 && cfg.train_fraction < 1.0)) {
    throw DataError("train fraction must lie strictly between 0 and 1");
  }

  std::vector<CognateSet> sets = cognate_sets(wl, cfg.proto_language);
  std::vector<CognateSet> usable;
  for (auto& set : sets) {
    if (set.usable_for_training()) usable.push_back(std::move(set));
  }
  constexpr std::size_t kMinimumSets = 10;
  if (usable.size() < kMinimumSets) {
    throw DataError("crossval needs at least " + std::to_string(kMinimumSets) +
                    " usable cognate sets, got " +
                    std::to_string(usable.size()));
  }

  std::vector<std::string> languages;
  for (const auto& language : wl.languages) {
    if (language != cfg.proto_language) languages.push_back(language);
  }

  std::vector<EvalReport> trial_reports(static_cast<std::size_t>(cfg.trials));
  if (cfg.threads <= 1) {
    for (int t = 0; t < cfg.trials; ++t) {
      trial_reports[static_cast<std::size_t>(t)] =
          run_trial(usable, languages, cfg, t);
    }
  } else {
    // Trials are independent; results land in trial order, so the report
    // matches sequential execution byte for byte.
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        int t = next.fetch_add(1);
        if (t >= cfg.trials) return;
        try {
          trial_reports[static_cast<std::size_t>(t)] =
              run_trial(usable, languages, cfg, t);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min(cfg.threads, cfg.trials);
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
    if (failure) std::rethrow_exception(failure);
  }

  EvalReport total;
  total.n = static_cast<std::size_t>(cfg.trials);
  for (const auto& report : trial_reports) {
    total.ed += report.ed;
    total.ned += report.ned;
    total.bc += report.bc;
  }
  total.ed /= static_cast<double>(cfg.trials);
  total.ned /= static_cast<double>(cfg.trials);
  total.bc /= static_cast<double>(cfg.trials);
  return total;
}

std::string format_report(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "CLASSIFIER\tANALYSIS\tED\tNED\tBC\n";
  char buffer[64];
  for (const auto& row : rows) {
    out << classifier_name(row.classifier) << '\t' << row.context.label();
    std::snprintf(buffer, sizeof(buffer), "\t%.4f\t%.4f\t%.4f\n",
                  row.report.ed, row.report.ned, row.report.bc);
    out << buffer;
  }
  return out.str();
}

}  // namespace protorec
