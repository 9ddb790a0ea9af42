#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "protorec/context.hpp"

namespace protorec {

struct SvmConfig {
  double lambda = 1e-4;
  int epochs = 30;
  std::int64_t seed = 0;
};

// One-hot feature index over (slot, symbol) pairs, where the slots are
// the descendant languages followed by the enabled context features.
// Frozen after the training scan; unseen symbols map to no feature.
struct FeatureSpace {
  std::vector<std::string> slot_names;
  std::vector<std::map<std::string, int>> slot_index;  // symbol -> feature id
  int dimension = 0;

  int bias_index() const { return dimension; }
};

// Linear one-vs-rest model: one weight vector (plus bias) per proto-token
// class. Classes include "-" and merged tokens like "r.E".
struct LinearModel {
  std::vector<std::string> classes;  // sorted
  std::vector<std::vector<double>> weights;  // per class, dimension + 1
  FeatureSpace space;
  ContextConfig context;
  SvmConfig config;
};

// Builds the frozen feature index from the training sites.
FeatureSpace build_feature_space(const std::vector<EnrichedSite>& sites,
                                 const SiteSchema& schema);

// Active feature ids of a site: at most one per slot, plus the implicit
// bias (not included in the result).
std::vector<int> encode(const EnrichedSite& site, const ContextConfig& cfg,
                        const FeatureSpace& space);

// Primal subgradient descent on the L2-regularized hinge loss, one vs
// rest, step 1/(lambda*t), one shared shuffle per epoch. Deterministic
// for a fixed site order and config.
LinearModel svm_train(const std::vector<EnrichedSite>& sites,
                      const SiteSchema& schema, const SvmConfig& config = {});

// Argmax class score; ties go to the lexicographically smallest class.
std::string svm_predict(const EnrichedSite& site, const LinearModel& model);

// Total regularized hinge objective over all one-vs-rest problems.
double svm_objective(const LinearModel& model,
                     const std::vector<EnrichedSite>& sites);

}  // namespace protorec
