#ifndef GHRS_FIELD_HPP
#define GHRS_FIELD_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ghrs/errors.hpp"

namespace ghrs {

class Fq;

/// Exact arithmetic in GF(q), q = p^e <= 2^16.
///
/// Elements are canonical residues packed as integers in [0, q): for e = 1
/// the residue itself, for e > 1 the base-p encoding of the length-e
/// coefficient vector (coefficient of x^i in digit i). Prime-power fields
/// reduce modulo a monic irreducible modulus, either user-supplied or the
/// lexicographically first monic irreducible of degree e over GF(p).
///
/// Field is an immutable value; copies share state and cost a pointer.
class Field {
 public:
  /// "p" for prime fields, "p^e" for a built-in modulus, or
  /// "p^e:c0,c1,...,ce" with modulus coefficients low-to-high.
  static Field parse(std::string_view spec);
  static Field prime(std::uint32_t p);
  /// modulus: monic degree-e coefficient list low-to-high over GF(p), e = size-1.
  static Field extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus);
  /// Any prime power q; picks the built-in modulus for e > 1.
  static Field of_order(std::uint32_t q);

  std::uint32_t p() const { return d_->p; }
  std::uint32_t e() const { return d_->e; }
  std::uint32_t q() const { return d_->q; }
  /// Empty for prime fields, else the monic degree-e modulus, low-to-high.
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws DivisionByZero on a = 0
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;

  /// Image of an integer under Z -> GF(p) c GF(q).
  std::uint32_t from_int(std::int64_t v) const;
  /// Coefficient vector of a residue, length e.
  std::vector<std::uint32_t> coeffs(std::uint32_t rep) const;
  std::uint32_t from_coeffs(const std::vector<std::uint32_t>& c) const;

  Fq element(std::uint32_t rep) const;
  Fq operator()(std::int64_t v) const;  // element via from_int

  bool operator==(const Field& other) const;
  bool operator!=(const Field& other) const { return !(*this == other); }
  bool same(const Field& other) const { return *this == other; }

  /// The spec string this field round-trips through parse().
  std::string to_string() const;

 private:
  struct Data {
    std::uint32_t p = 0, e = 1, q = 0;
    std::vector<std::uint32_t> modulus;  // empty when e == 1
  };
  explicit Field(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

/// A field element: canonical residue plus its field.
class Fq {
 public:
  Fq(Field field, std::uint32_t rep) : f_(std::move(field)), rep_(rep) {}

  std::uint32_t rep() const { return rep_; }
  const Field& field() const { return f_; }
  bool is_zero() const { return rep_ == 0; }

  Fq operator+(const Fq& o) const { return {f_, f_.add(rep_, check(o))}; }
  Fq operator-(const Fq& o) const { return {f_, f_.sub(rep_, check(o))}; }
  Fq operator*(const Fq& o) const { return {f_, f_.mul(rep_, check(o))}; }
  Fq operator/(const Fq& o) const { return {f_, f_.div(rep_, check(o))}; }
  Fq operator-() const { return {f_, f_.neg(rep_)}; }
  Fq inv() const { return {f_, f_.inv(rep_)}; }
  Fq pow(std::uint64_t k) const { return {f_, f_.pow(rep_, k)}; }

  bool operator==(const Fq& o) const { return rep_ == o.rep_ && f_ == o.f_; }
  bool operator!=(const Fq& o) const { return !(*this == o); }

 private:
  std::uint32_t check(const Fq& o) const {
    if (f_ != o.f_) throw FieldMismatch("operands belong to different fields");
    return o.rep_;
  }
  Field f_;
  std::uint32_t rep_;
};

/// Binomial coefficient mod p via the Pascal recurrence (integer-exact before
/// reduction). Conventions: 0 for a < 0, 1 for a = 0.
std::uint32_t binom_mod(std::uint64_t n, std::int64_t a, std::uint32_t p);

/// Lucas-theorem fast path; agrees with binom_mod for all n >= 0.
std::uint32_t binom_mod_lucas(std::uint64_t n, std::int64_t a, std::uint32_t p);

bool is_prime(std::uint32_t n);

}  // namespace ghrs

#endif  // GHRS_FIELD_HPP
