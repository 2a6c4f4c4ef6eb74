#include "ghrs/qc.hpp"

#include <charconv>
#include <sstream>

namespace ghrs {
namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

std::uint32_t parse_field_u32(std::string_view tok, const char* what) {
  tok = trim_view(tok);
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(std::string("invalid ") + what + " '" + std::string(tok) + "'");
  return v;
}

}  // namespace

int multiplicative_order(const Field& field, std::uint32_t a) {
  if (a == 0) throw DivisionByZero("zero has no multiplicative order");
  const std::uint32_t one = field.from_int(1);
  std::uint32_t x = a;
  int ord = 1;
  while (x != one) {
    x = field.mul(x, a);
    ++ord;
  }
  return ord;
}

QcSpec make_qc_spec(Field field, Fq alpha, int r, int s, const std::vector<Fq>& seed) {
  if (alpha.field() != field) throw FieldMismatch("alpha from a different field");
  if (r < 1 || s < 1) throw DimensionMismatch("r and s must be >= 1");
  if (alpha.is_zero()) throw OrderMismatch("alpha must be a nonzero element");
  if (multiplicative_order(field, alpha.rep()) != r)
    throw OrderMismatch("alpha must have multiplicative order exactly r");
  if (static_cast<int>(seed.size()) != s) throw DimensionMismatch("seed length must equal s");
  QcSpec spec{std::move(field), alpha.rep(), r, s, {}};
  spec.seed.reserve(seed.size());
  for (const Fq& v : seed) {
    if (v.field() != spec.field) throw FieldMismatch("seed entry from a different field");
    if (v.is_zero()) throw ZeroSeed("seed entries must be nonzero");
    spec.seed.push_back(v.rep());
  }
  return spec;
}

Code qc_code(const QcSpec& spec, int t) {
  const Field& k = spec.field;
  std::vector<Fq> points;
  points.reserve(static_cast<std::size_t>(spec.r));
  std::uint32_t u = k.from_int(1);
  for (int j = 0; j < spec.r; ++j) {
    points.emplace_back(k, u);
    u = k.mul(u, spec.alpha_rep);
  }
  Mat v(k, spec.s, spec.r);
  for (int i = 0; i < spec.s; ++i) {
    // v_{ij} = seed_i alpha^{(i-1)(j-1)} (1-based); ratio across a row is alpha^{i-1}
    std::uint32_t ratio = k.pow(spec.alpha_rep, static_cast<std::uint64_t>(i));
    std::uint32_t val = spec.seed[static_cast<std::size_t>(i)];
    for (int j = 0; j < spec.r; ++j) {
      v.set_rep(i, j, val);
      val = k.mul(val, ratio);
    }
  }
  return Code(k, std::move(points), std::move(v), t);
}

bool satisfies_qc_ratios(const Mat& v, const Fq& alpha) {
  const Field& k = v.field();
  if (alpha.field() != k) throw FieldMismatch("alpha from a different field");
  if (alpha.is_zero()) return false;
  for (int i = 0; i < v.rows(); ++i) {
    const std::uint32_t ratio = k.pow(alpha.rep(), static_cast<std::uint64_t>(i));
    for (int j = 0; j < v.cols(); ++j) {
      const int prev = (j + v.cols() - 1) % v.cols();  // column 0 wraps to column r
      if (v.rep(i, j) != k.mul(ratio, v.rep(i, prev))) return false;
    }
  }
  return true;
}

Mat column_shift(const Mat& a, int ell) {
  const int r = a.cols();
  if (r == 0) return a;
  int sh = ell % r;
  if (sh < 0) sh += r;
  Mat out(a.field(), a.rows(), r);
  for (int j = 0; j < r; ++j) {
    const int src = (j - sh + r) % r;
    for (int i = 0; i < a.rows(); ++i) out.set_rep(i, j, a.rep(i, src));
  }
  return out;
}

bool is_quasi_cyclic(const Code& code) {
  // H x^T = 0 tests membership; one parity check shared across all monomials
  Mat h = parity_check_matrix(code, VecOrder::row_major);
  const Field& k = code.field();
  for (int m = 0; m < code.t(); ++m) {
    Mat shifted = column_shift(evaluate(code, Poly::monomial(k, m)), 1);
    auto v = vectorize(shifted, VecOrder::row_major);
    for (int i = 0; i < h.rows(); ++i) {
      std::uint32_t acc = 0;
      for (int j = 0; j < h.cols(); ++j) acc = k.add(acc, k.mul(h.rep(i, j), v[static_cast<std::size_t>(j)].rep()));
      if (acc != 0) return false;
    }
  }
  return true;
}

Poly shift_witness(const Code& code, const Poly& f) {
  const Field& k = code.field();
  if (f.field() != k) throw FieldMismatch("polynomial over a different field");
  if (f.degree() > code.t() - 1) throw DegreeTooHigh("polynomial degree exceeds t-1");

  // recover alpha from the geometric point list (1, alpha, alpha^2, ...)
  const auto& pts = code.alpha_reps();
  if (pts[0] != k.from_int(1)) throw HypothesisViolation("evaluation points are not geometric from 1");
  const std::uint32_t alpha = code.r() >= 2 ? pts[1] : k.from_int(1);
  if (alpha == 0) throw HypothesisViolation("geometric ratio is zero");
  for (int j = 1; j < code.r(); ++j)
    if (pts[static_cast<std::size_t>(j)] != k.mul(pts[static_cast<std::size_t>(j - 1)], alpha))
      throw HypothesisViolation("evaluation points are not a geometric progression");
  if (!satisfies_qc_ratios(code.multipliers(), Fq(k, alpha)))
    throw HypothesisViolation("multipliers do not satisfy the shift ratios");

  Poly g = f.scale_substitute(k.inv(alpha));
  if (evaluate(code, g) != column_shift(evaluate(code, f), 1))
    throw VerificationError("shift witness identity failed");
  return g;
}

ParsedQcSpec qc_spec_from_text(std::string_view text) {
  std::vector<std::string_view> toks;
  std::string_view rest = trim_view(text);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    toks.push_back(trim_view(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (toks.size() < 6) throw ParseError("qc spec needs q, r, alpha, s, seed: ..., t");
  Field field = Field::of_order(parse_field_u32(toks[0], "field order"));
  const int r = static_cast<int>(parse_field_u32(toks[1], "r"));
  const std::uint32_t alpha = parse_field_u32(toks[2], "alpha");
  const int s = static_cast<int>(parse_field_u32(toks[3], "s"));
  if (!toks[4].starts_with("seed:")) throw ParseError("expected 'seed:' marker");
  if (toks.size() != static_cast<std::size_t>(5 + s)) throw ParseError("qc spec token count disagrees with s");
  std::vector<Fq> seed;
  seed.push_back(field.element(parse_field_u32(trim_view(toks[4].substr(5)), "seed entry")));
  for (int i = 1; i < s; ++i)
    seed.push_back(field.element(parse_field_u32(toks[static_cast<std::size_t>(4 + i)], "seed entry")));
  const int t = static_cast<int>(parse_field_u32(toks.back(), "t"));
  QcSpec spec = make_qc_spec(field, field.element(alpha), r, s, seed);
  return {std::move(spec), t};
}

std::string to_text(const QcSpec& spec, int t) {
  std::ostringstream os;
  os << spec.field.q() << ", " << spec.r << ", " << spec.alpha_rep << ", " << spec.s << ", seed: ";
  for (int i = 0; i < spec.s; ++i) {
    if (i) os << ',';
    os << spec.seed[static_cast<std::size_t>(i)];
  }
  os << ", " << t;
  return os.str();
}

}  // namespace ghrs
