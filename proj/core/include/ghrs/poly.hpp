#ifndef GHRS_POLY_HPP
#define GHRS_POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "ghrs/field.hpp"

namespace ghrs {

/// Degree of the zero polynomial; compares below every integer degree.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// Vanishing order of the zero polynomial at any point.
inline constexpr int kInfiniteOrder = std::numeric_limits<int>::max();

/// Univariate polynomial over GF(q), coefficients low-to-high, trailing
/// zeros trimmed. The zero polynomial is the empty coefficient sequence.
class Poly {
 public:
  explicit Poly(Field field) : f_(std::move(field)) {}
  Poly(Field field, std::vector<std::uint32_t> coeffs);

  static Poly monomial(const Field& field, int deg, std::uint32_t lead = 1);
  /// Comma-separated coefficients low-to-high, e.g. "1,0,3" = 1 + 3x^2.
  static Poly from_text(const Field& field, std::string_view text);

  const Field& field() const { return f_; }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of x^k (zero beyond the stored range).
  std::uint32_t coeff(int k) const {
    return (k < 0 || k >= static_cast<int>(c_.size())) ? 0 : c_[static_cast<std::size_t>(k)];
  }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(std::uint32_t c) const;  // c * f
  bool operator==(const Poly& o) const { return c_ == o.c_ && f_ == o.f_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  std::uint32_t eval(std::uint32_t u) const;
  Fq eval(const Fq& u) const;

  /// (d^0 f(u), ..., d^{s-1} f(u)) by repeated synthetic division by (x - u).
  std::vector<std::uint32_t> jet(std::uint32_t u, int s) const;

  /// Sum over k >= j of binom(k, j) f_k x^{k-j}; zero when j > degree.
  Poly hyperderivative(int j) const;

  /// (d^0 f(u), ..., d^{deg f} f(u)); empty for the zero polynomial.
  std::vector<std::uint32_t> taylor_coeffs(std::uint32_t u) const;

  /// Smallest m with d^m f(u) != 0; kInfiniteOrder for the zero polynomial.
  int vanishing_order(std::uint32_t u) const;

  /// f(c x); constant f(0) when c = 0.
  Poly scale_substitute(std::uint32_t c) const;

  std::string to_text() const;

 private:
  void trim();
  Field f_;
  std::vector<std::uint32_t> c_;
};

/// Quotient and remainder of f by (x - u); remainder returned as a scalar.
std::pair<Poly, std::uint32_t> divide_linear(const Poly& f, std::uint32_t u);

}  // namespace ghrs

#endif  // GHRS_POLY_HPP
