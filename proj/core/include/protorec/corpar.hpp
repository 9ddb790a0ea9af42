#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "protorec/context.hpp"

namespace protorec {

// A distinct correspondence pattern observed in training: the reflex
// tuple plus enabled context features, with the proto labels seen for it.
// Identical keys are collapsed into one pattern with multiplicity.
struct SitePattern {
  std::vector<std::string> key;       // reflexes then context cells; "Ø" = unknown
  std::map<std::string, int> labels;  // proto label -> multiplicity
  int support = 0;                    // total multiplicity
};

// Compatibility graph: nodes are patterns, an edge joins two patterns
// whose keys agree wherever both are filled.
struct PatternGraph {
  std::vector<SitePattern> nodes;
  std::vector<std::vector<std::uint64_t>> adjacency;  // bitset rows

  bool adjacent(std::size_t i, std::size_t j) const {
    return (adjacency[i][j >> 6] >> (j & 63)) & 1u;
  }
};

// Consensus of one maximal clique: "Ø" cells filled in from clique mates,
// the support-weighted majority label, and the clique's size/support.
struct ConsensusPattern {
  std::vector<std::string> key;
  std::string label;
  int reflex_count = 0;  // total support of the clique's members
  int coverage = 0;      // number of member patterns
};

struct CorparConfig {
  std::size_t node_cap = 20000;  // guard against pathological graphs
};

// Consensus patterns in prediction order: reflex_count desc, coverage
// desc, key ascending.
struct CorparModel {
  std::vector<ConsensusPattern> patterns;
};

// Pattern key of a site under the given context coding: the reflex cells
// followed by Pos, Str, Ini cells for the enabled features.
std::vector<std::string> site_key(const EnrichedSite& site,
                                  const ContextConfig& cfg);

// True iff the keys agree at every position where both are filled
// (context cells compared like reflex cells). Throws DataError when the
// keys have different lengths.
bool compatible(const SitePattern& p, const SitePattern& q);

// Collapses labeled sites into distinct patterns and links compatible
// ones. Throws ResourceError when the number of distinct patterns
// exceeds the node cap.
PatternGraph build_pattern_graph(const std::vector<EnrichedSite>& sites,
                                 const ContextConfig& cfg,
                                 std::size_t node_cap = CorparConfig{}.node_cap);

// All maximal cliques (Bron-Kerbosch with pivoting), sorted by coverage
// desc, total support desc, then node ids ascending.
std::vector<std::vector<int>> enumerate_cliques(const PatternGraph& g);

ConsensusPattern consensus(const PatternGraph& g, const std::vector<int>& clique);

CorparModel corpar_train(const std::vector<EnrichedSite>& sites,
                         const ContextConfig& cfg,
                         const CorparConfig& config = {});

// Label of the best fully compatible consensus pattern; when none is
// compatible, the best partially matching one (most agreeing filled
// cells); "¿" when nothing agrees at all.
std::string corpar_predict(const EnrichedSite& site, const ContextConfig& cfg,
                           const CorparModel& model);

// Debug export: one TSV line per consensus pattern — key cells, label,
// coverage, reflex count.
std::string format_patterns(const CorparModel& model);

}  // namespace protorec
