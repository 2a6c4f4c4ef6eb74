#include "ghrs/interp.hpp"

#include <algorithm>

namespace ghrs {
namespace {

// x - u
Poly linear_factor(const Field& k, std::uint32_t u) {
  return Poly(k, {k.neg(u), k.from_int(1)});
}

// Unit-lower-triangular inverse by forward substitution.
Mat invert_unit_lower(const Mat& m) {
  const Field& k = m.field();
  const int n = m.rows();
  Mat inv(k, n, n);
  for (int col = 0; col < n; ++col) {
    inv.set_rep(col, col, k.from_int(1));
    for (int i = col + 1; i < n; ++i) {
      std::uint32_t acc = 0;
      for (int t = col; t < i; ++t) acc = k.add(acc, k.mul(m.rep(i, t), inv.rep(t, col)));
      inv.set_rep(i, col, k.neg(acc));
    }
  }
  return inv;
}

}  // namespace

std::size_t InterpolationBasis::grid_index(int i, int j) const {
  if (i < 0 || i >= s_ || j < 0 || j >= r()) throw DimensionMismatch("basis index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(r()) + static_cast<std::size_t>(j);
}

InterpolationBasis::InterpolationBasis(Field field, std::vector<Fq> alpha, int s)
    : f_(std::move(field)), s_(s) {
  if (s_ < 1) throw DimensionMismatch("jet depth s must be >= 1");
  if (alpha.empty()) throw DuplicatePoints("need at least one evaluation point");
  alpha_.reserve(alpha.size());
  for (const Fq& a : alpha) {
    if (a.field() != f_) throw FieldMismatch("evaluation point from a different field");
    alpha_.push_back(a.rep());
  }
  auto sorted = alpha_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw DuplicatePoints("evaluation points must be pairwise distinct");

  const int rr = r();
  const Field& k = f_;

  // L_j = prod_{l != j} (x - a_l)^s / (a_j - a_l)^s, empty product = 1.
  lagrange_.reserve(static_cast<std::size_t>(rr));
  for (int j = 0; j < rr; ++j) {
    Poly num(k, {k.from_int(1)});
    std::uint32_t denom = k.from_int(1);
    for (int l = 0; l < rr; ++l) {
      if (l == j) continue;
      Poly factor = linear_factor(k, alpha_[static_cast<std::size_t>(l)]);
      std::uint32_t diff = k.sub(alpha_[static_cast<std::size_t>(j)], alpha_[static_cast<std::size_t>(l)]);
      for (int m = 0; m < s_; ++m) {
        num = num * factor;
        denom = k.mul(denom, diff);
      }
    }
    Poly lj = num.scaled(k.inv(denom));
    if (rr > 1 && lj.degree() != s_ * (rr - 1))
      throw VerificationError("Lagrange factor has unexpected degree");
    for (int m = 0; m < rr; ++m) {
      std::uint32_t want = (m == j) ? k.from_int(1) : 0;
      if (lj.eval(alpha_[static_cast<std::size_t>(m)]) != want)
        throw VerificationError("Lagrange factor delta property failed");
    }
    lagrange_.push_back(std::move(lj));
  }

  // H_{i,j} = (x - a_j)^i L_j
  h_.reserve(static_cast<std::size_t>(s_) * static_cast<std::size_t>(rr));
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < rr; ++j) {
      Poly p = lagrange_[static_cast<std::size_t>(j)];
      Poly factor = linear_factor(k, alpha_[static_cast<std::size_t>(j)]);
      for (int m = 0; m < i; ++m) p = p * factor;
      h_.push_back(std::move(p));
    }

  // M^(j)(i, t) = d^i H_{t,j}(a_j); must be unit lower triangular.
  m_.reserve(static_cast<std::size_t>(rr));
  for (int j = 0; j < rr; ++j) {
    Mat mj(k, s_, s_);
    for (int t = 0; t < s_; ++t) {
      auto jet = h(t, j).jet(alpha_[static_cast<std::size_t>(j)], s_);
      for (int i = 0; i < s_; ++i) mj.set_rep(i, t, jet[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < s_; ++i) {
      if (mj.rep(i, i) != k.from_int(1)) throw VerificationError("multiplier matrix diagonal is not one");
      for (int t = i + 1; t < s_; ++t)
        if (mj.rep(i, t) != 0) throw VerificationError("multiplier matrix is not lower triangular");
    }
    m_.push_back(std::move(mj));
  }

  // H'_{k,j} = sum_t (M^-1)_{t,k} H_{t,j}: expansion coefficients come from
  // column k of M^-1 so that M applied to them yields the k-th unit vector
  // (H'_k is H_k corrected by higher-vanishing H_t, t > k).
  hprime_.assign(static_cast<std::size_t>(s_) * static_cast<std::size_t>(rr), Poly(k));
  for (int j = 0; j < rr; ++j) {
    Mat inv = invert_unit_lower(m_[static_cast<std::size_t>(j)]);
    for (int col = 0; col < s_; ++col) {
      Poly acc(k);
      for (int t = 0; t < s_; ++t) {
        if (inv.rep(t, col) == 0) continue;
        acc = acc + h(t, j).scaled(inv.rep(t, col));
      }
      hprime_[grid_index(col, j)] = std::move(acc);
    }
  }

  // Full delta identity: d^{i} H'_{k,j}(a_l) = delta_{i,k} delta_{j,l}.
  for (int j = 0; j < rr; ++j)
    for (int kk = 0; kk < s_; ++kk) {
      const Poly& hp = h_prime(kk, j);
      if (hp.degree() > s_ * rr - 1) throw VerificationError("H' degree exceeds rs-1");
      for (int l = 0; l < rr; ++l) {
        auto jet = hp.jet(alpha_[static_cast<std::size_t>(l)], s_);
        for (int i = 0; i < s_; ++i) {
          std::uint32_t want = (i == kk && j == l) ? k.from_int(1) : 0;
          if (jet[static_cast<std::size_t>(i)] != want)
            throw VerificationError("H' delta identity failed");
        }
      }
    }
}

Mat InterpolationBasis::expand(const Poly& f) const {
  if (f.field() != f_) throw FieldMismatch("polynomial over a different field");
  if (f.degree() > s_ * r() - 1) throw DegreeTooHigh("polynomial degree exceeds rs-1");
  Mat grid(f_, s_, r());
  for (int j = 0; j < r(); ++j) {
    auto jet = f.jet(alpha_[static_cast<std::size_t>(j)], s_);
    for (int i = 0; i < s_; ++i) grid.set_rep(i, j, jet[static_cast<std::size_t>(i)]);
  }
  return grid;
}

Poly InterpolationBasis::reconstruct(const Mat& grid) const {
  if (grid.field() != f_) throw FieldMismatch("grid over a different field");
  if (grid.rows() != s_ || grid.cols() != r()) throw DimensionMismatch("grid shape must be s x r");
  Poly acc(f_);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < r(); ++j) {
      if (grid.rep(i, j) == 0) continue;
      acc = acc + h_prime(i, j).scaled(grid.rep(i, j));
    }
  return acc;
}

std::vector<std::vector<Mat>> standard_basis_images(const InterpolationBasis& basis, const Mat& v) {
  const Field& k = basis.field();
  if (v.field() != k) throw FieldMismatch("multiplier matrix over a different field");
  if (v.rows() != basis.s() || v.cols() != basis.r())
    throw DimensionMismatch("multiplier matrix shape must be s x r");
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j)
      if (v.rep(i, j) == 0) throw ZeroMultiplier("standard basis images need all multipliers nonzero");

  std::vector<Fq> alpha;
  for (auto a : basis.alpha_reps()) alpha.emplace_back(k, a);
  Code full(k, alpha, v, basis.s() * basis.r());

  std::vector<std::vector<Mat>> out;
  out.reserve(static_cast<std::size_t>(basis.s()));
  for (int i = 0; i < basis.s(); ++i) {
    std::vector<Mat> row;
    row.reserve(static_cast<std::size_t>(basis.r()));
    for (int j = 0; j < basis.r(); ++j) {
      Poly scaled = basis.h_prime(i, j).scaled(k.inv(v.rep(i, j)));
      Mat image = evaluate(full, scaled);
      if (image != Mat::elementary(k, basis.s(), basis.r(), i, j))
        throw VerificationError("H' image is not the elementary matrix");
      row.push_back(std::move(image));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Mat dual_multiplier(const Field& field, const std::vector<Fq>& alpha, const Mat& v) {
  const int r = static_cast<int>(alpha.size());
  const int s = v.rows();
  const int rs = r * s;
  if (rs < 2) throw DimensionMismatch("dual multiplier needs rs >= 2");
  Code nearly_full(field, alpha, v, rs - 1);
  Mat kernel = null_space_rref(generator_matrix(nearly_full, GenForm::raw, VecOrder::row_major));
  if (kernel.rows() != 1) throw DegenerateSystem("dual space dimension is not one");
  std::vector<Fq> w;
  w.reserve(static_cast<std::size_t>(rs));
  for (int j = 0; j < rs; ++j) w.push_back(kernel.at(0, j));
  Mat wm = devectorize(field, w, s, r, VecOrder::row_major);
  // normalize: first nonzero entry in row-major scan set to 1
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < r; ++j)
      if (wm.rep(i, j) != 0) return wm.scaled(field.inv(wm.rep(i, j)));
  throw DegenerateSystem("dual spanning matrix is zero");
}

DualityReport verify_duality(const Field& field, const std::vector<Fq>& alpha, const Mat& v, int t) {
  const int r = static_cast<int>(alpha.size());
  const int s = v.rows();
  const int rs = r * s;
  if (t < 1 || t > rs - 1) throw DimensionMismatch("verify_duality needs 1 <= t <= rs-1");

  DualityReport rep{.t = t, .rs = rs, .w = dual_multiplier(field, alpha, v)};
  for (int i = 0; i < s && !rep.w_has_zero_entries; ++i)
    for (int j = 0; j < r; ++j)
      if (rep.w.rep(i, j) == 0) {
        rep.w_has_zero_entries = true;
        break;
      }

  Code cv(field, alpha, v, t);
  Code cw(field, alpha, rep.w, rs - t);
  Mat gv = generator_matrix(cv, GenForm::raw, VecOrder::row_major);
  Mat gw = generator_matrix(cw, GenForm::raw, VecOrder::row_major);

  rep.dim_v = rank(gv);
  rep.dim_w = rank(gw);
  rep.dims_ok = (rep.dim_v == t) && (rep.dim_w == rs - t) && (rep.dim_v + rep.dim_w == rs);

  rep.orthogonal = true;
  for (int a = 0; a < t && rep.orthogonal; ++a)
    for (int b = 0; b < rs - t; ++b) {
      if (!dot(gv.row(a), gw.row(b)).is_zero()) {
        rep.orthogonal = false;
        rep.first_violation = std::make_pair(a, b);
        break;
      }
    }

  Mat dual_of_v = null_space_rref(gv);
  Mat gw_canon = rref(gw).m;
  // drop zero rows of the rref for the comparison
  Mat gw_span(field, 0, rs);
  for (int i = 0; i < gw_canon.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < rs; ++j) nonzero = nonzero || gw_canon.rep(i, j) != 0;
    if (nonzero) gw_span.append_row(gw_canon.row(i));
  }
  rep.rowspace_equal = (dual_of_v == gw_span);
  return rep;
}

}  // namespace ghrs
