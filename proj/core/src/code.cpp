#include "ghrs/code.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

namespace ghrs {
namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Jet of a coefficient vector at u, s terms, by repeated synthetic division.
// After one division the quotient sits at work[0 .. len-2] in place.
void jet_into(const Field& k, const std::vector<std::uint32_t>& f, std::uint32_t u, int s,
              std::vector<std::uint32_t>& work, std::vector<std::uint32_t>& out) {
  work = f;
  std::fill(out.begin(), out.end(), 0);
  int len = static_cast<int>(work.size());
  while (len > 0 && work[static_cast<std::size_t>(len - 1)] == 0) --len;
  for (int m = 0; m < s && len > 0; ++m) {
    std::uint32_t carry = work[static_cast<std::size_t>(len - 1)];
    for (int i = len - 1; i-- > 0;) {
      std::uint32_t next = k.add(work[static_cast<std::size_t>(i)], k.mul(carry, u));
      work[static_cast<std::size_t>(i)] = carry;
      carry = next;
    }
    out[static_cast<std::size_t>(m)] = carry;
    --len;
  }
}

}  // namespace

Code::Code(Field field, std::vector<Fq> alpha, Mat multipliers, int t)
    : f_(std::move(field)), v_(std::move(multipliers)), t_(t) {
  if (v_.field() != f_) throw FieldMismatch("multiplier matrix over a different field");
  if (v_.rows() < 1 || v_.cols() < 1) throw DimensionMismatch("multiplier matrix must be nonempty");
  if (static_cast<int>(alpha.size()) != v_.cols())
    throw DimensionMismatch("alpha length must equal multiplier columns");
  if (alpha.size() > f_.q()) throw DuplicatePoints("more evaluation points than field elements");
  alpha_.reserve(alpha.size());
  for (const Fq& a : alpha) {
    if (a.field() != f_) throw FieldMismatch("evaluation point from a different field");
    alpha_.push_back(a.rep());
  }
  auto sorted = alpha_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicatePoints("evaluation points must be pairwise distinct");
  if (t_ < 1 || t_ > block_length()) throw DimensionMismatch("t must satisfy 1 <= t <= r*s");
  all_nonzero_ = true;
  for (int i = 0; i < v_.rows(); ++i)
    for (int j = 0; j < v_.cols(); ++j)
      if (v_.rep(i, j) == 0) all_nonzero_ = false;
}

Mat evaluate(const Code& code, const Poly& f) {
  if (f.field() != code.field()) throw FieldMismatch("polynomial over a different field");
  if (f.degree() > code.t() - 1) throw DegreeTooHigh("polynomial degree exceeds t-1");
  const Field& k = code.field();
  const int s = code.s(), r = code.r();
  Mat a(k, s, r);
  for (int j = 0; j < r; ++j) {
    auto jet = f.jet(code.alpha_reps()[static_cast<std::size_t>(j)], s);
    for (int i = 0; i < s; ++i)
      a.set_rep(i, j, k.mul(code.multipliers().rep(i, j), jet[static_cast<std::size_t>(i)]));
  }
  return a;
}

Mat generator_matrix(const Code& code, GenForm form, VecOrder order) {
  const Field& k = code.field();
  Mat g(k, 0, code.block_length());
  for (int m = 0; m < code.t(); ++m) {
    Mat block = evaluate(code, Poly::monomial(k, m));
    Mat row(k, 1, code.block_length());
    auto v = vectorize(block, order);
    for (std::size_t j = 0; j < v.size(); ++j) row.set(0, static_cast<int>(j), v[j]);
    g.append_row(row);
  }
  switch (form) {
    case GenForm::raw:
      return g;
    case GenForm::rref:
      return rref(g).m;
    case GenForm::forward:
      return forward_echelon(g);
  }
  throw Error("unknown generator form");
}

Mat parity_check_matrix(const Code& code, VecOrder order) {
  return null_space_rref(generator_matrix(code, GenForm::raw, order));
}

bool contains(const Code& code, const Mat& a) {
  if (a.field() != code.field()) throw FieldMismatch("matrix over a different field");
  if (a.rows() != code.s() || a.cols() != code.r())
    throw DimensionMismatch("matrix shape must be s x r");
  Mat g = generator_matrix(code, GenForm::raw, VecOrder::row_major);
  const int base = rank(g);
  Mat row(code.field(), 1, code.block_length());
  auto v = vectorize(a, VecOrder::row_major);
  for (std::size_t j = 0; j < v.size(); ++j) row.set(0, static_cast<int>(j), v[j]);
  g.append_row(row);
  return rank(g) == base;
}

namespace {

struct Enumeration {
  // candidate count and decoding for projective / full enumeration
  std::uint64_t count = 0;
  std::vector<std::uint64_t> cum;  // projective: prefix counts per leading index
};

Enumeration plan_enumeration(std::uint64_t q, int t, bool projective) {
  Enumeration e;
  if (projective) {
    e.cum.assign(static_cast<std::size_t>(t) + 1, 0);
    std::uint64_t block = 1;  // q^{t-1-k} built from the back
    std::vector<std::uint64_t> sizes(static_cast<std::size_t>(t));
    for (int k = t - 1; k >= 0; --k) {
      sizes[static_cast<std::size_t>(k)] = block;
      block *= q;
    }
    for (int k = 0; k < t; ++k) e.cum[static_cast<std::size_t>(k + 1)] = e.cum[static_cast<std::size_t>(k)] + sizes[static_cast<std::size_t>(k)];
    e.count = e.cum.back();
  } else {
    std::uint64_t total = 1;
    for (int i = 0; i < t; ++i) total *= q;
    e.count = total - 1;  // skip the zero vector
  }
  return e;
}

void decode_candidate(const Enumeration& e, std::uint64_t q, int t, bool projective,
                      std::uint64_t index, std::vector<std::uint32_t>& coeffs) {
  std::fill(coeffs.begin(), coeffs.end(), 0);
  if (projective) {
    int k = 0;
    while (index >= e.cum[static_cast<std::size_t>(k + 1)]) ++k;
    std::uint64_t off = index - e.cum[static_cast<std::size_t>(k)];
    coeffs[static_cast<std::size_t>(k)] = 1;
    for (int i = k + 1; i < t; ++i) {
      coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(off % q);
      off /= q;
    }
  } else {
    std::uint64_t v = index + 1;  // 0 is the zero vector
    for (int i = 0; i < t; ++i) {
      coeffs[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
  }
}

}  // namespace

int min_distance_exhaustive(const Code& code, const MinDistanceOptions& opts) {
  const Field& k = code.field();
  const std::uint64_t q = k.q();
  const int t = code.t(), s = code.s(), r = code.r();

  std::uint64_t qt = 1;
  for (int i = 0; i < t; ++i) {
    if (qt > opts.budget / q) throw BudgetExceeded("q^t exceeds the enumeration budget");
    qt *= q;
  }
  if (qt > opts.budget) throw BudgetExceeded("q^t exceeds the enumeration budget");

  // Nonzero coefficient vectors are raised from the subfield GF(p) of
  // integers only through reps; enumeration runs over canonical reps < q.
  const Enumeration plan = plan_enumeration(q, t, opts.projective);

  std::atomic<bool> formula_mismatch{false};
  const auto worker = [&](std::uint64_t lo, std::uint64_t hi, int& best) {
    std::vector<std::uint32_t> coeffs(static_cast<std::size_t>(t), 0);
    std::vector<std::uint32_t> work, jet(static_cast<std::size_t>(s), 0);
    best = r * s + 1;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      decode_candidate(plan, q, t, opts.projective, idx, coeffs);
      int scan_weight = 0;
      int lemma_weight = r * s;
      for (int j = 0; j < r; ++j) {
        jet_into(k, coeffs, code.alpha_reps()[static_cast<std::size_t>(j)], s, work, jet);
        int first = s;  // first row with nonzero scaled entry
        for (int i = 0; i < s; ++i) {
          if (jet[static_cast<std::size_t>(i)] != 0 && code.multipliers().rep(i, j) != 0) {
            first = i;
            break;
          }
        }
        scan_weight += (first == s) ? 0 : (s - first);
        int nu_capped = 0;  // min(nu, s) = leading zeros of the unscaled jet
        while (nu_capped < s && jet[static_cast<std::size_t>(nu_capped)] == 0) ++nu_capped;
        lemma_weight -= nu_capped;
      }
      if (code.all_nonzero() && scan_weight != lemma_weight) formula_mismatch = true;
      best = std::min(best, scan_weight);
    }
  };

  const int jobs = std::max(1, opts.jobs);
  int result;
  if (jobs == 1 || plan.count < 1024) {
    worker(0, plan.count, result);
  } else {
    std::vector<int> results(static_cast<std::size_t>(jobs), r * s + 1);
    std::vector<std::thread> threads;
    const std::uint64_t chunk = (plan.count + static_cast<std::uint64_t>(jobs) - 1) / static_cast<std::uint64_t>(jobs);
    for (int w = 0; w < jobs; ++w) {
      const std::uint64_t lo = std::min(plan.count, chunk * static_cast<std::uint64_t>(w));
      const std::uint64_t hi = std::min(plan.count, lo + chunk);
      threads.emplace_back([&, w, lo, hi] { worker(lo, hi, results[static_cast<std::size_t>(w)]); });
    }
    for (auto& th : threads) th.join();
    result = *std::min_element(results.begin(), results.end());
  }
  if (formula_mismatch) throw VerificationError("weight formula mismatch against matrix scan");
  return result;
}

MdsReport mds_check(const Code& code, const MinDistanceOptions& opts) {
  MdsReport rep;
  rep.dimension = code.t();
  if (rank(generator_matrix(code, GenForm::raw, VecOrder::row_major)) != code.t())
    throw VerificationError("raw generator rank differs from t");
  rep.distance = min_distance_exhaustive(code, opts);
  rep.singleton_defect = code.block_length() + 1 - (code.t() + rep.distance);
  rep.all_nonzero = code.all_nonzero();
  rep.mds = rep.singleton_defect == 0;
  return rep;
}

std::string to_text(const Code& code) {
  std::ostringstream os;
  os << code.field().to_string() << '\n';
  os << "alpha: ";
  for (int j = 0; j < code.r(); ++j) {
    if (j) os << ',';
    os << code.alpha_reps()[static_cast<std::size_t>(j)];
  }
  os << '\n';
  os << "t: " << code.t() << '\n';
  os << "V:\n";
  for (int i = 0; i < code.s(); ++i) {
    for (int j = 0; j < code.r(); ++j) {
      if (j) os << ' ';
      os << code.multipliers().rep(i, j);
    }
    os << '\n';
  }
  return os.str();
}

Code code_from_text(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    lines.push_back(trim_view(text.substr(0, nl)));
    if (nl == std::string_view::npos) break;
    text = text.substr(nl + 1);
  }
  std::size_t li = 0;
  auto next_line = [&]() -> std::string_view {
    while (li < lines.size() && lines[li].empty()) ++li;
    if (li >= lines.size()) throw ParseError("truncated code file");
    return lines[li++];
  };

  Field field = Field::parse(next_line());

  std::string_view aline = next_line();
  if (!aline.starts_with("alpha:")) throw ParseError("expected 'alpha:' line");
  aline = trim_view(aline.substr(6));
  std::vector<Fq> alpha;
  while (!aline.empty()) {
    auto comma = aline.find(',');
    std::string_view tok = trim_view(aline.substr(0, comma));
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("invalid alpha entry '" + std::string(tok) + "'");
    alpha.push_back(field.element(v));
    if (comma == std::string_view::npos) break;
    aline = aline.substr(comma + 1);
  }
  if (alpha.empty()) throw ParseError("empty alpha list");

  std::string_view tline = next_line();
  if (!tline.starts_with("t:")) throw ParseError("expected 't:' line");
  tline = trim_view(tline.substr(2));
  int t = 0;
  {
    auto [ptr, ec] = std::from_chars(tline.data(), tline.data() + tline.size(), t);
    if (ec != std::errc{} || ptr != tline.data() + tline.size()) throw ParseError("invalid t value");
  }

  std::string_view vline = next_line();
  if (vline != "V:") throw ParseError("expected 'V:' line");

  std::vector<std::vector<std::uint32_t>> rows;
  while (li < lines.size()) {
    std::string_view line = lines[li++];
    if (line.empty()) continue;
    std::vector<std::uint32_t> row;
    std::istringstream is{std::string(line)};
    std::uint32_t v = 0;
    while (is >> v) row.push_back(v);
    if (!is.eof()) throw ParseError("invalid multiplier row");
    if (row.size() != alpha.size()) throw ParseError("multiplier row length must equal r");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty multiplier matrix");
  Mat v = Mat::from_rows(field, static_cast<int>(alpha.size()), rows);
  return Code(std::move(field), std::move(alpha), std::move(v), t);
}

}  // namespace ghrs
