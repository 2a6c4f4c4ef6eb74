#ifndef GHRS_MATRIX_HPP
#define GHRS_MATRIX_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghrs/field.hpp"

namespace ghrs {

enum class VecOrder { row_major, col_major };

/// Dense matrix over GF(q). Indices are 0-based throughout the API.
/// Results of elimination may have zero rows (0 x n null spaces).
class Mat {
 public:
  Mat(Field field, int rows, int cols);
  static Mat identity(const Field& field, int n);
  /// E_{i,j}: 1 at (i, j), 0 elsewhere.
  static Mat elementary(const Field& field, int rows, int cols, int i, int j);
  static Mat from_rows(const Field& field, int cols,
                       const std::vector<std::vector<std::uint32_t>>& rows);

  const Field& field() const { return f_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t rep(int i, int j) const { return a_[idx(i, j)]; }
  void set_rep(int i, int j, std::uint32_t v) { a_[idx(i, j)] = v; }
  Fq at(int i, int j) const { return Fq(f_, rep(i, j)); }
  void set(int i, int j, const Fq& v);

  bool is_zero() const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;  // matrix product
  Mat scaled(std::uint32_t c) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_ && f_ == o.f_; }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  void swap_rows(int i, int k);
  /// row i -= c * row k
  void subtract_scaled_row(int i, int k, std::uint32_t c);
  void scale_row(int i, std::uint32_t c);
  Mat row(int i) const;
  void append_row(const Mat& r);

 private:
  std::size_t idx(int i, int j) const;
  Field f_;
  int rows_, cols_;
  std::vector<std::uint32_t> a_;
};

struct RrefResult {
  Mat m;
  std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

/// Reduced row echelon form: greedy left-to-right pivots, unit pivots,
/// pivot columns cleared above and below, zero rows at the bottom.
RrefResult rref(const Mat& m);

/// Row echelon by forward elimination only: pivot search among remaining
/// rows (topmost nonzero), multiples of earlier rows added to later rows.
/// No normalization, no back-substitution.
Mat forward_echelon(const Mat& m);

int rank(const Mat& m);

/// Canonical basis of {x : M x^T = 0}: the RREF of a spanning set,
/// returned as a (n - rank) x n matrix (0 x n when the kernel is trivial).
Mat null_space_rref(const Mat& m);

/// Entrywise-product sum; equals Tr(A^T B).
Fq dot(const Mat& a, const Mat& b);
Fq trace_inner(const Mat& a, const Mat& b);

/// 0 for a zero column, else s - i + 1 with i the 1-based first nonzero row.
int nrt_column_weight(const Mat& a, int j);
int nrt_weight(const Mat& a);
int nrt_distance(const Mat& a, const Mat& b);

std::vector<Fq> vectorize(const Mat& a, VecOrder order);
Mat devectorize(const Field& field, const std::vector<Fq>& v, int rows, int cols, VecOrder order);

/// Matrix text format: header "rows cols q", then one line per row of
/// space-separated canonical residues.
std::string to_text(const Mat& m);
Mat mat_from_text(const Field& field, std::string_view text);

}  // namespace ghrs

#endif  // GHRS_MATRIX_HPP
