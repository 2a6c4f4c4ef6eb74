#include "ghrs/ldpc.hpp"

#include <algorithm>
#include <sstream>

namespace ghrs {

std::string format_percent(long long zeros, long long total) {
  if (total <= 0) throw DimensionMismatch("percentage of an empty matrix");
  // two decimals of percent, round half up, exact integer arithmetic
  const long long scaled = zeros * 10000;
  long long units = scaled / total;
  const long long rem = scaled % total;
  if (2 * rem >= total) ++units;
  std::ostringstream os;
  os << units / 100 << '.' << (units % 100 < 10 ? "0" : "") << units % 100 << '%';
  return os.str();
}

std::string SparsityReport::percent() const { return format_percent(zeros, total); }

SparsityReport sparsity_report(const Mat& m) {
  SparsityReport rep;
  rep.rows = m.rows();
  rep.cols = m.cols();
  rep.total = static_cast<long long>(m.rows()) * m.cols();
  rep.row_weights.assign(static_cast<std::size_t>(m.rows()), 0);
  rep.col_weights.assign(static_cast<std::size_t>(m.cols()), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.rep(i, j) != 0) {
        ++rep.row_weights[static_cast<std::size_t>(i)];
        ++rep.col_weights[static_cast<std::size_t>(j)];
        ++rep.nonzeros;
      }
  rep.zeros = rep.total - rep.nonzeros;
  rep.max_row_weight = rep.row_weights.empty() ? 0 : *std::max_element(rep.row_weights.begin(), rep.row_weights.end());
  rep.max_col_weight = rep.col_weights.empty() ? 0 : *std::max_element(rep.col_weights.begin(), rep.col_weights.end());
  rep.sparse = rep.nonzeros < rep.zeros;
  return rep;
}

long long zero_lower_bound(int r, int s, int t) {
  if (r < 1) throw CaseOutOfRange("r must be >= 1");
  const long long R = r, S = s, T = t;
  if (2 <= s && s <= t) return R * T - R * (R + 1) / 2 + R * S * (S - 1) / 2;
  if (1 < t && t < s) return R * T * (S - T) + R * T - R * (R + 1) / 2 + R * T * (T - 1) / 2;
  throw CaseOutOfRange("no zero-count bound for these (s, t)");
}

const char* to_string(LdpcCondition c) {
  switch (c) {
    case LdpcCondition::cond1:
      return "Cond1";
    case LdpcCondition::cond2:
      return "Cond2";
    case LdpcCondition::none:
      return "None";
  }
  return "?";
}

LdpcCondition ldpc_condition(int r, int s, int t) {
  if (r < 2 || s < 2 || t < 2 || t > r * s - 1)
    throw HypothesisViolation("ldpc_condition needs r, s, t >= 2 and t <= rs - 1");
  if (t == s && r + 1 <= s) return LdpcCondition::cond1;
  const long long S = s, T = t, R = r;
  if (S * T >= T * T + T + R + 1) return LdpcCondition::cond2;
  return LdpcCondition::none;
}

SparsityCertificate sparsity_certificate(const Code& code) {
  if (!code.all_nonzero())
    throw HypothesisViolation("sparsity certificate needs all multipliers nonzero");
  SparsityCertificate cert;
  cert.r = code.r();
  cert.s = code.s();
  cert.t = code.t();
  cert.condition = ldpc_condition(cert.r, cert.s, cert.t);

  Mat gen = generator_matrix(code, GenForm::forward, VecOrder::row_major);
  SparsityReport rep = sparsity_report(gen);
  cert.zeros = rep.zeros;
  cert.nonzeros = rep.nonzeros;
  cert.sparse = rep.sparse;
  try {
    cert.bound = zero_lower_bound(cert.r, cert.s, cert.t);
    cert.bound_ok = cert.zeros >= *cert.bound;
  } catch (const CaseOutOfRange&) {
    cert.bound.reset();
    cert.bound_ok = true;  // nothing to check
  }
  if (cert.bound && !cert.bound_ok)
    throw VerificationError("forward-echelon zero count fell below its lower bound");
  if (cert.condition != LdpcCondition::none && !cert.sparse)
    throw VerificationError("LDPC condition held but the generator is not sparse");
  cert.certified = cert.condition != LdpcCondition::none && cert.sparse;
  return cert;
}

long long TannerGraph::edges() const {
  long long e = 0;
  for (const auto& adj : check_adj) e += static_cast<long long>(adj.size());
  return e;
}

TannerGraph tanner_graph(const Mat& h) {
  TannerGraph g;
  g.variables = h.cols();
  g.checks = h.rows();
  g.var_adj.assign(static_cast<std::size_t>(h.cols()), {});
  g.check_adj.assign(static_cast<std::size_t>(h.rows()), {});
  for (int j = 0; j < h.rows(); ++j)
    for (int i = 0; i < h.cols(); ++i)
      if (h.rep(j, i) != 0) {
        g.check_adj[static_cast<std::size_t>(j)].push_back(i);
        g.var_adj[static_cast<std::size_t>(i)].push_back(j);
      }
  return g;
}

std::string export_alist(const TannerGraph& g) {
  std::size_t max_var = 0, max_check = 0;
  for (const auto& a : g.var_adj) max_var = std::max(max_var, a.size());
  for (const auto& a : g.check_adj) max_check = std::max(max_check, a.size());
  std::ostringstream os;
  os << g.variables << ' ' << g.checks << '\n';
  os << max_var << ' ' << max_check << '\n';
  for (int i = 0; i < g.variables; ++i)
    os << g.var_adj[static_cast<std::size_t>(i)].size() << (i + 1 < g.variables ? ' ' : '\n');
  if (g.variables == 0) os << '\n';
  for (int j = 0; j < g.checks; ++j)
    os << g.check_adj[static_cast<std::size_t>(j)].size() << (j + 1 < g.checks ? ' ' : '\n');
  if (g.checks == 0) os << '\n';
  for (const auto& adj : g.var_adj) {
    for (std::size_t k = 0; k < max_var; ++k) {
      if (k) os << ' ';
      os << (k < adj.size() ? adj[k] + 1 : 0);
    }
    os << '\n';
  }
  for (const auto& adj : g.check_adj) {
    for (std::size_t k = 0; k < max_check; ++k) {
      if (k) os << ' ';
      os << (k < adj.size() ? adj[k] + 1 : 0);
    }
    os << '\n';
  }
  return os.str();
}

TannerGraph parse_alist(std::string_view text) {
  std::istringstream is{std::string(text)};
  TannerGraph g;
  long long max_var = 0, max_check = 0;
  if (!(is >> g.variables >> g.checks >> max_var >> max_check))
    throw ParseError("invalid alist header");
  if (g.variables < 0 || g.checks < 0 || max_var < 0 || max_check < 0)
    throw ParseError("invalid alist header values");
  std::vector<int> var_w(static_cast<std::size_t>(g.variables), 0);
  std::vector<int> check_w(static_cast<std::size_t>(g.checks), 0);
  for (auto& w : var_w)
    if (!(is >> w)) throw ParseError("truncated alist column weights");
  for (auto& w : check_w)
    if (!(is >> w)) throw ParseError("truncated alist row weights");
  g.var_adj.assign(static_cast<std::size_t>(g.variables), {});
  g.check_adj.assign(static_cast<std::size_t>(g.checks), {});
  for (int i = 0; i < g.variables; ++i)
    for (long long k = 0; k < max_var; ++k) {
      int v = 0;
      if (!(is >> v)) throw ParseError("truncated alist variable adjacency");
      if (v == 0) continue;  // padding
      if (v < 1 || v > g.checks) throw ParseError("alist check index out of range");
      g.var_adj[static_cast<std::size_t>(i)].push_back(v - 1);
    }
  for (int j = 0; j < g.checks; ++j)
    for (long long k = 0; k < max_check; ++k) {
      int v = 0;
      if (!(is >> v)) throw ParseError("truncated alist check adjacency");
      if (v == 0) continue;
      if (v < 1 || v > g.variables) throw ParseError("alist variable index out of range");
      g.check_adj[static_cast<std::size_t>(j)].push_back(v - 1);
    }
  for (int i = 0; i < g.variables; ++i)
    if (static_cast<int>(g.var_adj[static_cast<std::size_t>(i)].size()) != var_w[static_cast<std::size_t>(i)])
      throw ParseError("alist column weight disagrees with adjacency");
  for (int j = 0; j < g.checks; ++j)
    if (static_cast<int>(g.check_adj[static_cast<std::size_t>(j)].size()) != check_w[static_cast<std::size_t>(j)])
      throw ParseError("alist row weight disagrees with adjacency");
  return g;
}

std::string export_dot(const TannerGraph& g) {
  std::ostringstream os;
  os << "graph tanner {\n";
  os << "  rankdir=TB;\n";
  for (int i = 0; i < g.variables; ++i)
    os << "  v" << i + 1 << " [shape=circle];\n";
  for (int j = 0; j < g.checks; ++j)
    os << "  c" << j + 1 << " [shape=box];\n";
  for (int j = 0; j < g.checks; ++j)
    for (int i : g.check_adj[static_cast<std::size_t>(j)])
      os << "  v" << i + 1 << " -- c" << j + 1 << ";\n";
  os << "}\n";
  return os.str();
}

WeightSummary measured_weights(const Mat& h, std::optional<int> jet_depth) {
  SparsityReport rep = sparsity_report(h);
  WeightSummary w;
  w.max_row_weight = rep.max_row_weight;
  w.max_col_weight = rep.max_col_weight;
  w.row_weights = std::move(rep.row_weights);
  w.col_weights = std::move(rep.col_weights);
  if (jet_depth) w.within_column_bound = w.max_col_weight <= *jet_depth;
  return w;
}

}  // namespace ghrs
