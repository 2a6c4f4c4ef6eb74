#ifndef GHRS_QC_HPP
#define GHRS_QC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghrs/code.hpp"

namespace ghrs {

/// Parameters of a quasi-cyclic construction: a point alpha of multiplicative
/// order exactly r, geometric evaluation points (1, alpha, ..., alpha^{r-1}),
/// and a seed column generating v_{ij} = seed_i alpha^{(i-1)(j-1)}.
struct QcSpec {
  Field field;
  std::uint32_t alpha_rep = 0;
  int r = 0;
  int s = 0;
  std::vector<std::uint32_t> seed;
};

/// Throws OrderMismatch unless ord(alpha) = r, ZeroSeed on zero seed entries.
QcSpec make_qc_spec(Field field, Fq alpha, int r, int s, const std::vector<Fq>& seed);

int multiplicative_order(const Field& field, std::uint32_t a);

Code qc_code(const QcSpec& spec, int t);

/// v_{ij} / v_{i,j-1} = alpha^{i-1} for all i, j, with column 0 = column r.
bool satisfies_qc_ratios(const Mat& v, const Fq& alpha);

/// Columns rotated right by ell (mod cols); ell may be any integer.
Mat column_shift(const Mat& a, int ell);

/// True iff the shift of every monomial codeword stays in the code
/// (sufficient by linearity).
bool is_quasi_cyclic(const Code& code);

/// g = f(alpha^{-1} x) together with the check
/// evaluate(code, g) == column_shift(evaluate(code, f), 1).
/// Requires geometric points and ratio-compatible multipliers
/// (HypothesisViolation); the check failing raises VerificationError.
Poly shift_witness(const Code& code, const Poly& f);

struct ParsedQcSpec {
  QcSpec spec;
  int t = 0;
};

/// One-line format: "q, r, alpha, s, seed: v1,...,vs, t".
ParsedQcSpec qc_spec_from_text(std::string_view text);
std::string to_text(const QcSpec& spec, int t);

}  // namespace ghrs

#endif  // GHRS_QC_HPP
