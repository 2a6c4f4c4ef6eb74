#include "ghrs/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ghrs {

Mat::Mat(Field field, int rows, int cols) : f_(std::move(field)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  a_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
}

std::size_t Mat::idx(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DimensionMismatch("matrix index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

Mat Mat::identity(const Field& field, int n) {
  Mat m(field, n, n);
  const std::uint32_t one = field.from_int(1);
  for (int i = 0; i < n; ++i) m.set_rep(i, i, one);
  return m;
}

Mat Mat::elementary(const Field& field, int rows, int cols, int i, int j) {
  Mat m(field, rows, cols);
  m.set_rep(i, j, field.from_int(1));
  return m;
}

Mat Mat::from_rows(const Field& field, int cols, const std::vector<std::vector<std::uint32_t>>& rows) {
  Mat m(field, static_cast<int>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols) throw DimensionMismatch("ragged row list");
    for (int j = 0; j < cols; ++j) {
      if (rows[i][static_cast<std::size_t>(j)] >= field.q()) throw ParseError("entry out of range for field");
      m.set_rep(static_cast<int>(i), j, rows[i][static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

void Mat::set(int i, int j, const Fq& v) {
  if (v.field() != f_) throw FieldMismatch("entry from a different field");
  set_rep(i, j, v.rep());
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix addition shape mismatch");
  if (f_ != o.f_) throw FieldMismatch("matrices over different fields");
  Mat out(f_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f_.add(a_[k], o.a_[k]);
  return out;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix subtraction shape mismatch");
  if (f_ != o.f_) throw FieldMismatch("matrices over different fields");
  Mat out(f_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f_.sub(a_[k], o.a_[k]);
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  if (f_ != o.f_) throw FieldMismatch("matrices over different fields");
  Mat out(f_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const std::uint32_t a = rep(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.set_rep(i, j, f_.add(out.rep(i, j), f_.mul(a, o.rep(k, j))));
    }
  return out;
}

Mat Mat::scaled(std::uint32_t c) const {
  Mat out(f_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = f_.mul(c, a_[k]);
  return out;
}

Mat Mat::transpose() const {
  Mat out(f_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set_rep(j, i, rep(i, j));
  return out;
}

void Mat::swap_rows(int i, int k) {
  if (i == k) return;
  for (int j = 0; j < cols_; ++j) {
    std::swap(a_[idx(i, j)], a_[idx(k, j)]);
  }
}

void Mat::subtract_scaled_row(int i, int k, std::uint32_t c) {
  if (c == 0) return;
  for (int j = 0; j < cols_; ++j) set_rep(i, j, f_.sub(rep(i, j), f_.mul(c, rep(k, j))));
}

void Mat::scale_row(int i, std::uint32_t c) {
  for (int j = 0; j < cols_; ++j) set_rep(i, j, f_.mul(c, rep(i, j)));
}

Mat Mat::row(int i) const {
  Mat out(f_, 1, cols_);
  for (int j = 0; j < cols_; ++j) out.set_rep(0, j, rep(i, j));
  return out;
}

void Mat::append_row(const Mat& r) {
  if (r.cols_ != cols_ || r.rows_ != 1) throw DimensionMismatch("append_row expects a 1 x cols row");
  if (r.f_ != f_) throw FieldMismatch("row from a different field");
  a_.insert(a_.end(), r.a_.begin(), r.a_.end());
  ++rows_;
}

RrefResult rref(const Mat& m) {
  Mat r = m;
  const Field& k = r.field();
  std::vector<int> pivots;
  int rank = 0;
  for (int c = 0; c < r.cols() && rank < r.rows(); ++c) {
    int sel = -1;
    for (int i = rank; i < r.rows(); ++i)
      if (r.rep(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    r.swap_rows(rank, sel);
    r.scale_row(rank, k.inv(r.rep(rank, c)));
    for (int i = 0; i < r.rows(); ++i)
      if (i != rank) r.subtract_scaled_row(i, rank, r.rep(i, c));
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(r), std::move(pivots)};
}

Mat forward_echelon(const Mat& m) {
  Mat r = m;
  const Field& k = r.field();
  int rank = 0;
  for (int c = 0; c < r.cols() && rank < r.rows(); ++c) {
    int sel = -1;
    for (int i = rank; i < r.rows(); ++i)
      if (r.rep(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    r.swap_rows(rank, sel);
    const std::uint32_t pivot = r.rep(rank, c);
    for (int i = rank + 1; i < r.rows(); ++i)
      r.subtract_scaled_row(i, rank, k.div(r.rep(i, c), pivot));
    ++rank;
  }
  return r;
}

int rank(const Mat& m) { return static_cast<int>(rref(m).pivots.size()); }

Mat null_space_rref(const Mat& m) {
  auto [r, pivots] = rref(m);
  const Field& k = m.field();
  const int n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  Mat basis(k, 0, n);
  for (int fc = 0; fc < n; ++fc) {
    if (is_pivot[static_cast<std::size_t>(fc)]) continue;
    Mat v(k, 1, n);
    v.set_rep(0, fc, k.from_int(1));
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v.set_rep(0, pivots[i], k.neg(r.rep(static_cast<int>(i), fc)));
    basis.append_row(v);
  }
  if (basis.rows() == 0) return basis;
  return rref(basis).m;
}

Fq dot(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("dot shape mismatch");
  if (a.field() != b.field()) throw FieldMismatch("dot over different fields");
  const Field& k = a.field();
  std::uint32_t acc = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) acc = k.add(acc, k.mul(a.rep(i, j), b.rep(i, j)));
  return Fq(k, acc);
}

Fq trace_inner(const Mat& a, const Mat& b) {
  Mat p = a.transpose() * b;
  const Field& k = p.field();
  std::uint32_t acc = 0;
  for (int i = 0; i < p.rows(); ++i) acc = k.add(acc, p.rep(i, i));
  return Fq(k, acc);
}

int nrt_column_weight(const Mat& a, int j) {
  for (int i = 0; i < a.rows(); ++i)
    if (a.rep(i, j) != 0) return a.rows() - i;  // s - (i+1) + 1
  return 0;
}

int nrt_weight(const Mat& a) {
  int w = 0;
  for (int j = 0; j < a.cols(); ++j) w += nrt_column_weight(a, j);
  return w;
}

int nrt_distance(const Mat& a, const Mat& b) { return nrt_weight(a - b); }

std::vector<Fq> vectorize(const Mat& a, VecOrder order) {
  std::vector<Fq> out;
  out.reserve(static_cast<std::size_t>(a.rows()) * static_cast<std::size_t>(a.cols()));
  if (order == VecOrder::row_major) {
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) out.push_back(a.at(i, j));
  } else {
    for (int j = 0; j < a.cols(); ++j)
      for (int i = 0; i < a.rows(); ++i) out.push_back(a.at(i, j));
  }
  return out;
}

Mat devectorize(const Field& field, const std::vector<Fq>& v, int rows, int cols, VecOrder order) {
  if (static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols) != v.size())
    throw DimensionMismatch("devectorize length mismatch");
  Mat out(field, rows, cols);
  std::size_t k = 0;
  if (order == VecOrder::row_major) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) out.set(i, j, v[k++]);
  } else {
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) out.set(i, j, v[k++]);
  }
  return out;
}

std::string to_text(const Mat& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().q() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m.rep(i, j);
    }
    os << '\n';
  }
  return os.str();
}

Mat mat_from_text(const Field& field, std::string_view text) {
  std::istringstream is{std::string(text)};
  int rows = 0, cols = 0;
  std::uint64_t q = 0;
  if (!(is >> rows >> cols >> q)) throw ParseError("invalid matrix header");
  if (q != field.q()) throw ParseError("matrix header field order mismatch");
  if (rows < 0 || cols < 0) throw ParseError("invalid matrix dimensions");
  Mat m(field, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      std::uint32_t v = 0;
      if (!(is >> v)) throw ParseError("matrix body shorter than header dimensions");
      if (v >= field.q()) throw ParseError("matrix entry out of range for field");
      m.set_rep(i, j, v);
    }
  return m;
}

}  // namespace ghrs
