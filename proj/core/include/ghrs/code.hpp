#ifndef GHRS_CODE_HPP
#define GHRS_CODE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ghrs/matrix.hpp"
#include "ghrs/poly.hpp"

namespace ghrs {

/// Evaluation-map code: the image in Mat_{s x r}(GF(q)) of polynomials of
/// degree at most t-1 under f -> (v_{ij} d^{i-1} f(alpha_j)).
class Code {
 public:
  /// alpha: r distinct points, r <= q; V: s x r multipliers; 1 <= t <= r*s.
  /// Zero multiplier entries are allowed; operations that need the
  /// all-nonzero hypothesis check all_nonzero() and report.
  Code(Field field, std::vector<Fq> alpha, Mat multipliers, int t);

  const Field& field() const { return f_; }
  const std::vector<std::uint32_t>& alpha_reps() const { return alpha_; }
  Fq alpha(int j) const { return Fq(f_, alpha_[static_cast<std::size_t>(j)]); }
  const Mat& multipliers() const { return v_; }
  int r() const { return v_.cols(); }
  int s() const { return v_.rows(); }
  int t() const { return t_; }
  int block_length() const { return r() * s(); }
  bool all_nonzero() const { return all_nonzero_; }

 private:
  Field f_;
  std::vector<std::uint32_t> alpha_;
  Mat v_;
  int t_;
  bool all_nonzero_;
};

enum class GenForm { raw, rref, forward };

/// Codeword matrix of f: entry (i, j) = v_{i+1,j} d^i f(alpha_j).
/// Throws DegreeTooHigh when deg f > t - 1.
Mat evaluate(const Code& code, const Poly& f);

/// t x rs generator. raw: rows vectorize(evaluate(x^m)) for m = 0..t-1;
/// rref / forward apply the respective elimination.
Mat generator_matrix(const Code& code, GenForm form = GenForm::raw,
                     VecOrder order = VecOrder::row_major);

/// Canonical (rs - t) x rs parity check: null_space_rref of the raw generator.
Mat parity_check_matrix(const Code& code, VecOrder order = VecOrder::row_major);

/// Membership of an s x r matrix, by rank test against the raw generator.
bool contains(const Code& code, const Mat& a);

struct MinDistanceOptions {
  std::uint64_t budget = 1'000'000;  // max q^t
  int jobs = 1;
  bool projective = true;  // enumerate one representative per scalar class
};

/// Exhaustive NRT minimum distance over nonzero f in P(t-1). When all
/// multipliers are nonzero, every candidate weight is computed both by
/// matrix scan and by rs - sum_j min(nu_f(alpha_j), s) and the two must
/// agree. Throws BudgetExceeded when q^t > budget.
int min_distance_exhaustive(const Code& code, const MinDistanceOptions& opts = {});

struct MdsReport {
  int dimension = 0;
  int distance = 0;
  int singleton_defect = 0;
  bool all_nonzero = false;  // Theorem hypothesis; checked, not assumed
  bool mds = false;
};

MdsReport mds_check(const Code& code, const MinDistanceOptions& opts = {});

/// Code file: field spec line; "alpha: a1,...,ar"; "t: <int>"; "V:" and
/// s rows of r space-separated residues.
std::string to_text(const Code& code);
Code code_from_text(std::string_view text);

}  // namespace ghrs

#endif  // GHRS_CODE_HPP
