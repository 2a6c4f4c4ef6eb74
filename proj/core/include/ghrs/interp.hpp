#ifndef GHRS_INTERP_HPP
#define GHRS_INTERP_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ghrs/code.hpp"
#include "ghrs/matrix.hpp"
#include "ghrs/poly.hpp"

namespace ghrs {

/// Hyperderivative Hermite interpolation data for fixed points and jet depth:
/// Lagrange-type factors L_j of degree s(r-1), products H_{i,j} = (x-a_j)^i L_j,
/// the unit-lower-triangular change-of-basis matrices M^(j), and the dual
/// family H'_{i,j} with d^{i-1} H'_{k-1,j}(a_l) = delta_{i,k} delta_{j,l}.
/// All identities are checked eagerly on construction.
class InterpolationBasis {
 public:
  InterpolationBasis(Field field, std::vector<Fq> alpha, int s);

  const Field& field() const { return f_; }
  int r() const { return static_cast<int>(alpha_.size()); }
  int s() const { return s_; }
  const std::vector<std::uint32_t>& alpha_reps() const { return alpha_; }

  const Poly& lagrange(int j) const { return lagrange_[static_cast<std::size_t>(j)]; }
  /// H_{i,j}, i in [0, s).
  const Poly& h(int i, int j) const { return h_[grid_index(i, j)]; }
  /// M^(j): s x s with entry (i, k) = d^i H_{k,j}(a_j) (0-based orders).
  const Mat& multiplier_matrix(int j) const { return m_[static_cast<std::size_t>(j)]; }
  const Poly& h_prime(int i, int j) const { return hprime_[grid_index(i, j)]; }

  /// Coefficient grid c_{i,j} = d^i f(a_j) of the unique expansion in H'.
  /// Throws DegreeTooHigh when deg f > rs - 1.
  Mat expand(const Poly& f) const;
  /// Sum of c_{i,j} H'_{i,j}; inverse of expand on P(rs-1).
  Poly reconstruct(const Mat& grid) const;

 private:
  std::size_t grid_index(int i, int j) const;
  Field f_;
  std::vector<std::uint32_t> alpha_;
  int s_;
  std::vector<Poly> lagrange_;
  std::vector<Poly> h_;       // s x r grid, row-major by (i, j)
  std::vector<Mat> m_;        // per column
  std::vector<Poly> hprime_;  // s x r grid
};

/// Ev_{alpha,V}((1/v_{i+1,j}) H'_{i,j}) for all (i, j); each must be the
/// elementary matrix E_{i+1,j}. Throws ZeroMultiplier if any v is zero and
/// VerificationError if an image is not elementary.
std::vector<std::vector<Mat>> standard_basis_images(const InterpolationBasis& basis, const Mat& v);

/// Spanning matrix of the one-dimensional dual of the (rs-1)-dimensional
/// code on (alpha, V): the null space of its raw row-major generator,
/// devectorized row-major, first nonzero entry normalized to 1.
Mat dual_multiplier(const Field& field, const std::vector<Fq>& alpha, const Mat& v);

struct DualityReport {
  int t = 0;
  int rs = 0;
  Mat w;
  bool w_has_zero_entries = false;
  bool dims_ok = false;
  int dim_v = 0;
  int dim_w = 0;
  bool orthogonal = false;
  /// Monomial degrees of the first non-orthogonal pair, when any.
  std::optional<std::pair<int, int>> first_violation;
  bool rowspace_equal = false;
  bool passed() const { return dims_ok && orthogonal && rowspace_equal; }
};

/// Checks whether the code on (alpha, W, rs-t-1), W = dual_multiplier, is
/// the dual of the code on (alpha, V, t-1): monomial-pair orthogonality
/// (complete by bilinearity), dimension count, and mutual row-space
/// equality. Failures are report entries, not errors.
DualityReport verify_duality(const Field& field, const std::vector<Fq>& alpha, const Mat& v, int t);

}  // namespace ghrs

#endif  // GHRS_INTERP_HPP
