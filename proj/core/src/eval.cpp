#include "protorec/eval.hpp"

#include <algorithm>

#include "protorec/errors.hpp"

namespace protorec {

std::size_t edit_distance(const TokenRow& a, const TokenRow& b) {
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> prev(m + 1), curr(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    curr[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      curr[j] = std::min({sub, prev[j] + 1, curr[j - 1] + 1});
    }
    std::swap(prev, curr);
  }
  return prev[m];
}

double ned(const TokenRow& a, const TokenRow& b) {
  if (a.empty() && b.empty()) return 0.0;
  return static_cast<double>(edit_distance(a, b)) /
         static_cast<double>(std::max(a.size(), b.size()));
}

double bcubed_f(const TokenRow& pred, const TokenRow& gold,
                const ScoringScheme& scheme) {
  if (pred.empty() || gold.empty()) {
    throw DataError("bcubed_f requires non-empty sequences");
  }
  PairwiseResult al = align_pairwise(pred, gold, scheme);
  const std::size_t width = al.a.size();

  double precision = 0.0, recall = 0.0;
  for (std::size_t i = 0; i < width; ++i) {
    std::size_t pred_cluster = 0, gold_cluster = 0, both = 0;
    for (std::size_t j = 0; j < width; ++j) {
      bool same_pred = al.a[j] == al.a[i];
      bool same_gold = al.b[j] == al.b[i];
      pred_cluster += same_pred;
      gold_cluster += same_gold;
      both += same_pred && same_gold;
    }
    precision += static_cast<double>(both) / static_cast<double>(pred_cluster);
    recall += static_cast<double>(both) / static_cast<double>(gold_cluster);
  }
  precision /= static_cast<double>(width);
  recall /= static_cast<double>(width);
  return 2.0 * precision * recall / (precision + recall);
}

EvalReport evaluate(const std::vector<std::pair<TokenRow, TokenRow>>& pairs) {
  if (pairs.empty()) throw DataError("evaluate requires at least one pair");
  EvalReport report;
  report.n = pairs.size();
  for (const auto& [pred, gold] : pairs) {
    report.ed += static_cast<double>(edit_distance(pred, gold));
    report.ned += ned(pred, gold);
    report.bc += bcubed_f(pred, gold);
  }
  report.ed /= static_cast<double>(pairs.size());
  report.ned /= static_cast<double>(pairs.size());
  report.bc /= static_cast<double>(pairs.size());
  return report;
}

}  // namespace protorec
