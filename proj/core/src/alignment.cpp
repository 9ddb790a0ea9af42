#include "protorec/alignment.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "protorec/errors.hpp"
#include "protorec/symbols.hpp"

namespace protorec {

namespace {

enum class Move : unsigned char { kDiag, kUp, kLeft };

}  // namespace

PairwiseResult align_pairwise(const TokenRow& a, const TokenRow& b,
                              const ScoringScheme& scheme) {
  if (a.empty() || b.empty()) {
    throw std::invalid_argument("align_pairwise requires non-empty words");
  }
  const std::size_t n = a.size();
  const std::size_t m = b.size();

  std::vector<char> ca(n), cb(m);
  for (std::size_t i = 0; i < n; ++i) ca[i] = scheme.classes->classify(a[i]);
  for (std::size_t j = 0; j < m; ++j) cb[j] = scheme.classes->classify(b[j]);

  std::vector<std::vector<int>> dp(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = 1; i <= n; ++i) dp[i][0] = static_cast<int>(i) * scheme.gap;
  for (std::size_t j = 1; j <= m; ++j) dp[0][j] = static_cast<int>(j) * scheme.gap;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      int diag = dp[i - 1][j - 1] + scheme.score_classes(ca[i - 1], cb[j - 1]);
      int up = dp[i - 1][j] + scheme.gap;    // gap in b
      int left = dp[i][j - 1] + scheme.gap;  // gap in a
      dp[i][j] = std::max(diag, std::max(up, left));
    }
  }

  // Traceback, preferring diag > up > left on ties.
  std::vector<Move> moves;
  std::size_t i = n, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        dp[i][j] == dp[i - 1][j - 1] + scheme.score_classes(ca[i - 1], cb[j - 1])) {
      moves.push_back(Move::kDiag);
      --i;
      --j;
    } else if (i > 0 && dp[i][j] == dp[i - 1][j] + scheme.gap) {
      moves.push_back(Move::kUp);
      --i;
    } else {
      moves.push_back(Move::kLeft);
      --j;
    }
  }

  PairwiseResult result;
  result.score = dp[n][m];
  std::size_t ai = 0, bj = 0;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    switch (*it) {
      case Move::kDiag:
        result.a.push_back(a[ai++]);
        result.b.push_back(b[bj++]);
        break;
      case Move::kUp:
        result.a.push_back(a[ai++]);
        result.b.push_back(kGap);
        break;
      case Move::kLeft:
        result.a.push_back(kGap);
        result.b.push_back(b[bj++]);
        break;
    }
  }
  return result;
}

namespace {

// Aligns the next word against the profile of the rows built so far and
// returns the merged rows (existing rows plus the new one).
std::vector<TokenRow> align_to_profile(const std::vector<TokenRow>& rows,
                                       const TokenRow& word,
                                       const ScoringScheme& scheme) {
  const std::size_t width = rows.front().size();
  const std::size_t m = word.size();

  // Per column: classes of the non-gap cells.
  std::vector<std::vector<char>> column_classes(width);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < width; ++c) {
      if (row[c] != kGap) {
        column_classes[c].push_back(scheme.classes->classify(row[c]));
      }
    }
  }
  std::vector<char> word_classes(m);
  for (std::size_t j = 0; j < m; ++j) {
    word_classes[j] = scheme.classes->classify(word[j]);
  }
  auto column_score = [&](std::size_t c, char cls) {
    const auto& cells = column_classes[c];
    int sum = 0;
    for (char cell : cells) sum += scheme.score_classes(cell, cls);
    return static_cast<double>(sum) / static_cast<double>(cells.size());
  };

  const double gap = scheme.gap;
  std::vector<std::vector<double>> dp(width + 1, std::vector<double>(m + 1, 0.0));
  for (std::size_t i = 1; i <= width; ++i) dp[i][0] = static_cast<double>(i) * gap;
  for (std::size_t j = 1; j <= m; ++j) dp[0][j] = static_cast<double>(j) * gap;
  for (std::size_t i = 1; i <= width; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      double diag = dp[i - 1][j - 1] + column_score(i - 1, word_classes[j - 1]);
      double up = dp[i - 1][j] + gap;    // gap in the new row
      double left = dp[i][j - 1] + gap;  // all-gap column inserted
      dp[i][j] = std::max(diag, std::max(up, left));
    }
  }

  std::vector<Move> moves;
  std::size_t i = width, j = m;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 &&
        dp[i][j] == dp[i - 1][j - 1] + column_score(i - 1, word_classes[j - 1])) {
      moves.push_back(Move::kDiag);
      --i;
      --j;
    } else if (i > 0 && dp[i][j] == dp[i - 1][j] + gap) {
      moves.push_back(Move::kUp);
      --i;
    } else {
      moves.push_back(Move::kLeft);
      --j;
    }
  }

  std::vector<TokenRow> merged(rows.size() + 1);
  std::size_t col = 0, tok = 0;
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    switch (*it) {
      case Move::kDiag:
        for (std::size_t r = 0; r < rows.size(); ++r) {
          merged[r].push_back(rows[r][col]);
        }
        merged.back().push_back(word[tok++]);
        ++col;
        break;
      case Move::kUp:
        for (std::size_t r = 0; r < rows.size(); ++r) {
          merged[r].push_back(rows[r][col]);
        }
        merged.back().push_back(kGap);
        ++col;
        break;
      case Move::kLeft:
        for (std::size_t r = 0; r < rows.size(); ++r) {
          merged[r].push_back(kGap);
        }
        merged.back().push_back(word[tok++]);
        break;
    }
  }
  return merged;
}

}  // namespace

Alignment align_multiple(const std::vector<TokenRow>& words,
                         const ScoringScheme& scheme) {
  if (words.empty()) {
    throw std::invalid_argument("align_multiple requires at least one word");
  }
  for (const auto& word : words) {
    if (word.empty()) {
      throw std::invalid_argument("align_multiple requires non-empty words");
    }
  }
  Alignment al;
  al.rows.push_back(words.front());
  for (std::size_t w = 1; w < words.size(); ++w) {
    al.rows = align_to_profile(al.rows, words[w], scheme);
  }
  return al;
}

TrimmedAlignment trim(const Alignment& al, std::size_t proto_index) {
  if (al.rows.size() < 2) {
    throw std::invalid_argument("trim requires at least two rows");
  }
  if (proto_index >= al.rows.size()) {
    throw std::invalid_argument("trim: proto_index out of range");
  }
  const std::size_t width = al.width();

  auto descendants_all_gap = [&](std::size_t c) {
    for (std::size_t r = 0; r < al.rows.size(); ++r) {
      if (r == proto_index) continue;
      if (al.rows[r][c] != kGap) return false;
    }
    return true;
  };

  struct Column {
    std::size_t source;                    // index in the input alignment
    std::vector<std::string> proto_parts;  // merged proto tokens, in order
  };
  std::vector<Column> surviving;
  std::vector<std::string> leading;  // proto parts seen before any survivor
  for (std::size_t c = 0; c < width; ++c) {
    const std::string& proto_cell = al.rows[proto_index][c];
    if (descendants_all_gap(c)) {
      if (proto_cell != kGap) {
        if (surviving.empty()) {
          leading.push_back(proto_cell);
        } else {
          surviving.back().proto_parts.push_back(proto_cell);
        }
      }
    } else {
      Column col;
      col.source = c;
      if (!leading.empty()) {
        col.proto_parts = std::move(leading);
        leading.clear();
      }
      if (proto_cell != kGap) col.proto_parts.push_back(proto_cell);
      surviving.push_back(std::move(col));
    }
  }
  if (surviving.empty()) {
    throw DataError("untrimmable alignment: no column has descendant material");
  }

  TrimmedAlignment out;
  out.languages = al.languages;
  out.proto_index = proto_index;
  out.rows.assign(al.rows.size(), TokenRow());
  for (const auto& col : surviving) {
    for (std::size_t r = 0; r < al.rows.size(); ++r) {
      if (r == proto_index) {
        if (col.proto_parts.empty()) {
          out.rows[r].push_back(kGap);
        } else {
          std::string merged = col.proto_parts.front();
          for (std::size_t p = 1; p < col.proto_parts.size(); ++p) {
            merged += kMergeSeparator;
            merged += col.proto_parts[p];
          }
          out.rows[r].push_back(std::move(merged));
        }
      } else {
        out.rows[r].push_back(al.rows[r][col.source]);
      }
    }
  }
  return out;
}

TokenRow ungap(const TokenRow& row) {
  TokenRow out;
  for (const auto& cell : row) {
    if (cell != kGap) out.push_back(cell);
  }
  return out;
}

TokenRow expand_merged(const TokenRow& row) {
  TokenRow out;
  for (const auto& cell : row) {
    if (cell == kGap) continue;
    std::size_t start = 0;
    while (true) {
      std::size_t pos = cell.find(kMergeSeparator, start);
      if (pos == std::string::npos) {
        out.push_back(cell.substr(start));
        break;
      }
      out.push_back(cell.substr(start, pos - start));
      start = pos + 1;
    }
  }
  return out;
}

std::string format_alignment(const std::vector<std::string>& languages,
                             const std::vector<TokenRow>& rows) {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (languages.size() == rows.size()) out << languages[r] << '\t';
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) out << '\t';
      out << rows[r][c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace protorec
