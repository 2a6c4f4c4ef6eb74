#ifndef GHRS_LDPC_HPP
#define GHRS_LDPC_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghrs/code.hpp"
#include "ghrs/matrix.hpp"

namespace ghrs {

struct SparsityReport {
  int rows = 0, cols = 0;
  long long total = 0, zeros = 0, nonzeros = 0;
  std::vector<int> row_weights, col_weights;
  int max_row_weight = 0, max_col_weight = 0;
  bool sparse = false;  // strictly more zeros than nonzeros
  std::string percent() const;
};

SparsityReport sparsity_report(const Mat& m);

/// zeros/total as a percentage with two decimals, round half up ("68.25%").
std::string format_percent(long long zeros, long long total);

/// Lower bound on zeros of the forward-echelon generator.
/// Case 1 (2 <= s <= t): rt - r(r+1)/2 + r s(s-1)/2.
/// Case 2 (1 < t < s):  rt(s-t) + rt - r(r+1)/2 + r t(t-1)/2.
/// Throws CaseOutOfRange when neither applies.
long long zero_lower_bound(int r, int s, int t);

enum class LdpcCondition { cond1, cond2, none };
const char* to_string(LdpcCondition c);

/// cond1 when t = s and r+1 <= s; else cond2 when st >= t^2 + t + r + 1;
/// else none. Requires r, s, t >= 2 and t <= rs - 1 (HypothesisViolation).
LdpcCondition ldpc_condition(int r, int s, int t);

struct SparsityCertificate {
  int r = 0, s = 0, t = 0;
  long long zeros = 0, nonzeros = 0;
  std::optional<long long> bound;  // absent when no case applies
  bool bound_ok = false;
  LdpcCondition condition = LdpcCondition::none;
  bool sparse = false;
  /// condition held and the forward-echelon generator was sparse; the dual
  /// code then has this matrix as a sparse parity check.
  bool certified = false;
};

/// Forward-echelon zero count of the generator of the code on (alpha,V,t-1),
/// compared against zero_lower_bound and the sparse-matrix criterion.
/// Requires all multipliers nonzero and the ldpc_condition parameter ranges.
SparsityCertificate sparsity_certificate(const Code& code);

struct TannerGraph {
  int variables = 0;
  int checks = 0;
  std::vector<std::vector<int>> var_adj;    // per variable: sorted check indexes (0-based)
  std::vector<std::vector<int>> check_adj;  // per check: sorted variable indexes (0-based)
  long long edges() const;
  bool operator==(const TannerGraph&) const = default;
};

/// Variable v_i adjacent to check c_j iff H(j, i) != 0.
TannerGraph tanner_graph(const Mat& h);

/// Standard alist layout: "n m", "max_col_weight max_row_weight", n column
/// weights, m row weights, then per-variable check lists and per-check
/// variable lists, 1-based, zero-padded to the max weight.
std::string export_alist(const TannerGraph& g);
TannerGraph parse_alist(std::string_view text);

/// Undirected bipartite DOT: variables v1..vn as circles, checks c1..cm as boxes.
std::string export_dot(const TannerGraph& g);

struct WeightSummary {
  int max_row_weight = 0, max_col_weight = 0;
  std::vector<int> row_weights, col_weights;
  /// Set when a jet depth s was supplied: max column weight <= s.
  std::optional<bool> within_column_bound;
};

WeightSummary measured_weights(const Mat& h, std::optional<int> jet_depth = std::nullopt);

}  // namespace ghrs

#endif  // GHRS_LDPC_HPP
