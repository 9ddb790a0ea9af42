#include "protorec/corpar.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <unordered_map>

#include "protorec/errors.hpp"
#include "protorec/symbols.hpp"

namespace protorec {

std::vector<std::string> site_key(const EnrichedSite& site,
                                  const ContextConfig& cfg) {
  std::vector<std::string> key = site.reflexes;
  if (cfg.pos) {
    assert(site.pos.has_value());
    key.push_back(std::to_string(*site.pos));
  }
  if (cfg.str) {
    assert(site.str.has_value());
    key.push_back(std::string(1, *site.str));
  }
  if (cfg.ini) {
    assert(site.ini.has_value());
    key.push_back(std::string(1, *site.ini));
  }
  return key;
}

bool compatible(const SitePattern& p, const SitePattern& q) {
  if (p.key.size() != q.key.size()) {
    throw DataError("incompatible pattern schemas: key lengths " +
                    std::to_string(p.key.size()) + " vs " +
                    std::to_string(q.key.size()));
  }
  for (std::size_t i = 0; i < p.key.size(); ++i) {
    if (p.key[i] == kMissing || q.key[i] == kMissing) continue;
    if (p.key[i] != q.key[i]) return false;
  }
  return true;
}

PatternGraph build_pattern_graph(const std::vector<EnrichedSite>& sites,
                                 const ContextConfig& cfg,
                                 std::size_t node_cap) {
  PatternGraph g;
  std::map<std::vector<std::string>, std::size_t> index;
  for (const auto& site : sites) {
    if (!site.label.has_value()) {
      throw DataError("unlabeled site in CorPaR training data");
    }
    std::vector<std::string> key = site_key(site, cfg);
    auto [it, inserted] = index.emplace(std::move(key), g.nodes.size());
    if (inserted) {
      if (g.nodes.size() >= node_cap) {
        throw ResourceError("pattern graph exceeds node cap of " +
                            std::to_string(node_cap));
      }
      g.nodes.push_back(SitePattern{it->first, {}, 0});
    }
    SitePattern& node = g.nodes[it->second];
    node.labels[*site.label] += 1;
    node.support += 1;
  }

  // Intern cells so the O(n^2) compatibility scan compares ints; 0 = "Ø".
  const std::size_t n = g.nodes.size();
  std::unordered_map<std::string, int> symbols{{kMissing, 0}};
  std::vector<std::vector<int>> coded(n);
  for (std::size_t i = 0; i < n; ++i) {
    coded[i].reserve(g.nodes[i].key.size());
    for (const auto& cell : g.nodes[i].key) {
      auto [it, _] = symbols.emplace(cell, static_cast<int>(symbols.size()));
      coded[i].push_back(it->second);
    }
  }

  const std::size_t words = (n + 63) / 64;
  g.adjacency.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool ok = true;
      for (std::size_t c = 0; c < coded[i].size(); ++c) {
        int a = coded[i][c], b = coded[j][c];
        if (a != 0 && b != 0 && a != b) {
          ok = false;
          break;
        }
      }
      if (ok) {
        g.adjacency[i][j >> 6] |= std::uint64_t{1} << (j & 63);
        g.adjacency[j][i >> 6] |= std::uint64_t{1} << (i & 63);
      }
    }
  }
  return g;
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool bits_empty(const Bits& b) {
  for (auto w : b) {
    if (w != 0) return false;
  }
  return true;
}

int bits_count(const Bits& b) {
  int n = 0;
  for (auto w : b) n += __builtin_popcountll(w);
  return n;
}

void bron_kerbosch(const PatternGraph& g, std::vector<int>& clique, Bits cand,
                   Bits excluded, std::vector<std::vector<int>>& out) {
  if (bits_empty(cand) && bits_empty(excluded)) {
    out.push_back(clique);
    return;
  }

  // Pivot: vertex of cand ∪ excluded with the most candidate neighbours.
  const std::size_t words = cand.size();
  int pivot = -1, pivot_degree = -1;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t both = cand[w] | excluded[w];
    while (both != 0) {
      int bit = __builtin_ctzll(both);
      both &= both - 1;
      int v = static_cast<int>(w * 64) + bit;
      int degree = 0;
      for (std::size_t k = 0; k < words; ++k) {
        degree += __builtin_popcountll(cand[k] & g.adjacency[v][k]);
      }
      if (degree > pivot_degree) {
        pivot_degree = degree;
        pivot = v;
      }
    }
  }

  Bits frontier(words, 0);
  for (std::size_t w = 0; w < words; ++w) {
    frontier[w] = cand[w] & ~g.adjacency[pivot][w];
  }
  for (std::size_t w = 0; w < words; ++w) {
    while (frontier[w] != 0) {
      int bit = __builtin_ctzll(frontier[w]);
      frontier[w] &= frontier[w] - 1;
      int v = static_cast<int>(w * 64) + bit;

      Bits next_cand(words), next_excl(words);
      for (std::size_t k = 0; k < words; ++k) {
        next_cand[k] = cand[k] & g.adjacency[v][k];
        next_excl[k] = excluded[k] & g.adjacency[v][k];
      }
      clique.push_back(v);
      bron_kerbosch(g, clique, std::move(next_cand), std::move(next_excl), out);
      clique.pop_back();

      cand[w] &= ~(std::uint64_t{1} << bit);
      excluded[w] |= std::uint64_t{1} << bit;
    }
  }
}

int clique_support(const PatternGraph& g, const std::vector<int>& clique) {
  int total = 0;
  for (int v : clique) total += g.nodes[v].support;
  return total;
}

}  // namespace

std::vector<std::vector<int>> enumerate_cliques(const PatternGraph& g) {
  const std::size_t n = g.nodes.size();
  std::vector<std::vector<int>> cliques;
  if (n == 0) return cliques;

  const std::size_t words = (n + 63) / 64;
  Bits cand(words, 0);
  for (std::size_t v = 0; v < n; ++v) cand[v >> 6] |= std::uint64_t{1} << (v & 63);
  std::vector<int> clique;
  bron_kerbosch(g, clique, std::move(cand), Bits(words, 0), cliques);

  for (auto& c : cliques) std::sort(c.begin(), c.end());
  std::sort(cliques.begin(), cliques.end(),
            [&](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() > b.size();
              int sa = clique_support(g, a), sb = clique_support(g, b);
              if (sa != sb) return sa > sb;
              return a < b;
            });
  return cliques;
}

ConsensusPattern consensus(const PatternGraph& g, const std::vector<int>& clique) {
  assert(!clique.empty());
  const std::size_t cells = g.nodes[clique.front()].key.size();

  ConsensusPattern out;
  out.coverage = static_cast<int>(clique.size());
  out.key.assign(cells, kMissing);
  std::map<std::string, int> label_counts;
  for (int v : clique) {
    const SitePattern& node = g.nodes[v];
    out.reflex_count += node.support;
    for (std::size_t c = 0; c < cells; ++c) {
      if (node.key[c] == kMissing) continue;
      // Pairwise compatibility makes the non-"Ø" value unique.
      assert(out.key[c] == kMissing || out.key[c] == node.key[c]);
      out.key[c] = node.key[c];
    }
    for (const auto& [label, count] : node.labels) label_counts[label] += count;
  }

  int best = 0;
  for (const auto& [label, count] : label_counts) {
    if (count > best) {  // map order makes ties lexicographically smallest
      best = count;
      out.label = label;
    }
  }
  return out;
}

CorparModel corpar_train(const std::vector<EnrichedSite>& sites,
                         const ContextConfig& cfg, const CorparConfig& config) {
  if (sites.empty()) throw DataError("empty CorPaR training set");
  PatternGraph g = build_pattern_graph(sites, cfg, config.node_cap);
  std::vector<std::vector<int>> cliques = enumerate_cliques(g);

  CorparModel model;
  model.patterns.reserve(cliques.size());
  for (const auto& clique : cliques) {
    model.patterns.push_back(consensus(g, clique));
  }
  std::sort(model.patterns.begin(), model.patterns.end(),
            [](const ConsensusPattern& a, const ConsensusPattern& b) {
              if (a.reflex_count != b.reflex_count) {
                return a.reflex_count > b.reflex_count;
              }
              if (a.coverage != b.coverage) return a.coverage > b.coverage;
              return a.key < b.key;
            });
  return model;
}

namespace {

bool key_compatible(const std::vector<std::string>& a,
                    const std::vector<std::string>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == kMissing || b[i] == kMissing) continue;
    if (a[i] != b[i]) return false;
  }
  return true;
}

int agreement(const std::vector<std::string>& a,
              const std::vector<std::string>& b) {
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != kMissing && b[i] != kMissing && a[i] == b[i]) ++n;
  }
  return n;
}

}  // namespace

std::string corpar_predict(const EnrichedSite& site, const ContextConfig& cfg,
                           const CorparModel& model) {
  if (model.patterns.empty()) throw DataError("empty CorPaR model");
  const std::vector<std::string> key = site_key(site, cfg);
  if (key.size() != model.patterns.front().key.size()) {
    throw DataError("site schema does not match the CorPaR model");
  }

  // Patterns are stored in prediction order, so the first fully
  // compatible one wins.
  for (const auto& pattern : model.patterns) {
    if (key_compatible(key, pattern.key)) return pattern.label;
  }

  // Fallback: most agreeing filled cells, same tie order.
  int best_score = 0;
  const ConsensusPattern* best = nullptr;
  for (const auto& pattern : model.patterns) {
    int score = agreement(key, pattern.key);
    if (score > best_score) {
      best_score = score;
      best = &pattern;
    }
  }
  return best == nullptr ? kUnknown : best->label;
}

std::string format_patterns(const CorparModel& model) {
  std::ostringstream out;
  for (const auto& pattern : model.patterns) {
    for (const auto& cell : pattern.key) out << cell << '\t';
    out << pattern.label << '\t' << pattern.coverage << '\t'
        << pattern.reflex_count << '\n';
  }
  return out.str();
}

}  // namespace protorec
