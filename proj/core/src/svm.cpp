#include "protorec/svm.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>

#include "protorec/corpar.hpp"
#include "protorec/errors.hpp"
#include "protorec/rng.hpp"

namespace protorec {

FeatureSpace build_feature_space(const std::vector<EnrichedSite>& sites,
                                 const SiteSchema& schema) {
  FeatureSpace space;
  space.slot_names = schema.languages;
  if (schema.context.pos) space.slot_names.push_back("#pos");
  if (schema.context.str) space.slot_names.push_back("#str");
  if (schema.context.ini) space.slot_names.push_back("#ini");
  space.slot_index.resize(space.slot_names.size());

  for (const auto& site : sites) {
    std::vector<std::string> cells = site_key(site, schema.context);
    assert(cells.size() == space.slot_names.size());
    for (std::size_t slot = 0; slot < cells.size(); ++slot) {
      auto [it, inserted] =
          space.slot_index[slot].emplace(cells[slot], space.dimension);
      if (inserted) space.dimension += 1;
    }
  }
  return space;
}

std::vector<int> encode(const EnrichedSite& site, const ContextConfig& cfg,
                        const FeatureSpace& space) {
  std::vector<std::string> cells = site_key(site, cfg);
  assert(cells.size() == space.slot_index.size());
  std::vector<int> active;
  active.reserve(cells.size());
  for (std::size_t slot = 0; slot < cells.size(); ++slot) {
    auto it = space.slot_index[slot].find(cells[slot]);
    if (it != space.slot_index[slot].end()) active.push_back(it->second);
  }
  return active;
}

LinearModel svm_train(const std::vector<EnrichedSite>& sites,
                      const SiteSchema& schema, const SvmConfig& config) {
  if (sites.empty()) throw DataError("empty SVM training set");
  for (const auto& site : sites) {
    if (!site.label.has_value()) {
      throw DataError("unlabeled site in SVM training data");
    }
  }

  LinearModel model;
  model.context = schema.context;
  model.config = config;
  model.space = build_feature_space(sites, schema);

  std::set<std::string> class_set;
  for (const auto& site : sites) class_set.insert(*site.label);
  model.classes.assign(class_set.begin(), class_set.end());

  const std::size_t n = sites.size();
  const std::size_t n_classes = model.classes.size();
  const int bias = model.space.bias_index();

  std::vector<std::vector<int>> encoded(n);
  std::vector<std::size_t> label_of(n);
  for (std::size_t i = 0; i < n; ++i) {
    encoded[i] = encode(sites[i], schema.context, model.space);
    encoded[i].push_back(bias);
    label_of[i] = static_cast<std::size_t>(
        std::lower_bound(model.classes.begin(), model.classes.end(),
                         *sites[i].label) -
        model.classes.begin());
  }

  // w = scale * v; the 1/(lambda*t) step shrinks scale by (1 - 1/t) each
  // update, which zeroes w at t = 1.
  std::vector<std::vector<double>> v(n_classes,
                                     std::vector<double>(bias + 1, 0.0));
  std::vector<double> scale(n_classes, 1.0);

  SplitMix64 rng(static_cast<std::uint64_t>(config.seed));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);

  const double lambda = config.lambda;
  std::uint64_t t = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(order);
    for (std::size_t i : order) {
      ++t;
      const double eta = 1.0 / (lambda * static_cast<double>(t));
      const double shrink = 1.0 - eta * lambda;  // = 1 - 1/t
      const auto& x = encoded[i];
      for (std::size_t c = 0; c < n_classes; ++c) {
        const double y = label_of[i] == c ? 1.0 : -1.0;
        double dot = 0.0;
        for (int idx : x) dot += v[c][idx];
        const double margin = y * scale[c] * dot;
        if (shrink == 0.0) {
          std::fill(v[c].begin(), v[c].end(), 0.0);
          scale[c] = 1.0;
        } else {
          scale[c] *= shrink;
        }
        if (margin < 1.0) {
          const double step = eta * y / scale[c];
          for (int idx : x) v[c][idx] += step;
        }
      }
    }
  }

  model.weights.assign(n_classes, std::vector<double>(bias + 1, 0.0));
  for (std::size_t c = 0; c < n_classes; ++c) {
    for (int d = 0; d <= bias; ++d) model.weights[c][d] = scale[c] * v[c][d];
  }
  return model;
}

std::string svm_predict(const EnrichedSite& site, const LinearModel& model) {
  if (model.classes.empty()) throw DataError("empty SVM model");
  std::vector<int> active = encode(site, model.context, model.space);
  active.push_back(model.space.bias_index());

  std::size_t best = 0;
  double best_score = 0.0;
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    double score = 0.0;
    for (int idx : active) score += model.weights[c][idx];
    if (c == 0 || score > best_score) {  // ties keep the smallest class
      best = c;
      best_score = score;
    }
  }
  return model.classes[best];
}

double svm_objective(const LinearModel& model,
                     const std::vector<EnrichedSite>& sites) {
  if (sites.empty()) throw DataError("empty site set");
  double total = 0.0;
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    const auto& w = model.weights[c];
    double norm2 = 0.0;
    for (double x : w) norm2 += x * x;
    double hinge = 0.0;
    for (const auto& site : sites) {
      std::vector<int> active = encode(site, model.context, model.space);
      active.push_back(model.space.bias_index());
      double dot = 0.0;
      for (int idx : active) dot += w[idx];
      const double y = *site.label == model.classes[c] ? 1.0 : -1.0;
      hinge += std::max(0.0, 1.0 - y * dot);
    }
    total += 0.5 * model.config.lambda * norm2 +
             hinge / static_cast<double>(sites.size());
  }
  return total;
}

}  // namespace protorec
