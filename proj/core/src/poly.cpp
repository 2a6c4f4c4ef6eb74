#include "ghrs/poly.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace ghrs {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(Field field, std::vector<std::uint32_t> coeffs) : f_(std::move(field)), c_(std::move(coeffs)) {
  for (auto c : c_)
    if (c >= f_.q()) throw ParseError("coefficient out of range for field");
  trim();
}

Poly Poly::monomial(const Field& field, int deg, std::uint32_t lead) {
  if (deg < 0 || lead == 0) return Poly(field);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(deg) + 1, 0);
  c.back() = lead;
  return Poly(field, std::move(c));
}

Poly Poly::from_text(const Field& field, std::string_view text) {
  std::vector<std::uint32_t> c;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view tok = text.substr(0, comma);
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError("invalid polynomial coefficient '" + std::string(tok) + "'");
    c.push_back(v);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (c.empty()) throw ParseError("empty polynomial text");
  return Poly(field, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  if (f_ != o.f_) throw FieldMismatch("polynomials over different fields");
  std::vector<std::uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f_.add(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  Poly out(f_);
  out.c_ = std::move(c);
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  if (f_ != o.f_) throw FieldMismatch("polynomials over different fields");
  std::vector<std::uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = f_.sub(i < c_.size() ? c_[i] : 0, i < o.c_.size() ? o.c_[i] : 0);
  Poly out(f_);
  out.c_ = std::move(c);
  out.trim();
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (f_ != o.f_) throw FieldMismatch("polynomials over different fields");
  if (is_zero() || o.is_zero()) return Poly(f_);
  std::vector<std::uint32_t> c(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = f_.add(c[i + j], f_.mul(c_[i], o.c_[j]));
  }
  Poly out(f_);
  out.c_ = std::move(c);
  out.trim();
  return out;
}

Poly Poly::scaled(std::uint32_t c) const {
  Poly out(f_);
  out.c_.reserve(c_.size());
  for (auto x : c_) out.c_.push_back(f_.mul(c, x));
  out.trim();
  return out;
}

std::uint32_t Poly::eval(std::uint32_t u) const {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_.add(f_.mul(acc, u), *it);
  return acc;
}

Fq Poly::eval(const Fq& u) const {
  if (f_ != u.field()) throw FieldMismatch("evaluation point from a different field");
  return Fq(f_, eval(u.rep()));
}

std::pair<Poly, std::uint32_t> divide_linear(const Poly& f, std::uint32_t u) {
  const Field& k = f.field();
  if (f.is_zero()) return {Poly(k), 0};
  const auto& c = f.coeffs();
  std::vector<std::uint32_t> q(c.size() - 1, 0);
  std::uint32_t carry = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    q[i] = carry;
    carry = k.add(c[i], k.mul(carry, u));
  }
  return {Poly(k, std::move(q)), carry};
}

std::vector<std::uint32_t> Poly::jet(std::uint32_t u, int s) const {
  std::vector<std::uint32_t> out(static_cast<std::size_t>(std::max(s, 0)), 0);
  Poly g = *this;
  for (int m = 0; m < s && !g.is_zero(); ++m) {
    auto [q, rem] = divide_linear(g, u);
    out[static_cast<std::size_t>(m)] = rem;
    g = std::move(q);
  }
  return out;
}

Poly Poly::hyperderivative(int j) const {
  if (j < 0) throw Error("hyperderivative order must be nonnegative");
  if (j == 0) return *this;
  if (j > degree()) return Poly(f_);
  const std::size_t uj = static_cast<std::size_t>(j);
  std::vector<std::uint32_t> c(c_.size() - uj, 0);
  const std::uint32_t p = f_.p();
  // Pascal rows mod p, kept only up to column j; row[j] = binom(k, j) at step k.
  std::vector<std::uint32_t> row(uj + 1, 0);
  row[0] = 1 % p;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    for (std::size_t i = std::min(k, uj); i >= 1; --i) row[i] = (row[i] + row[i - 1]) % p;
    if (k >= uj) c[k - uj] = f_.mul(f_.from_int(row[uj]), c_[k]);
  }
  Poly out(f_);
  out.c_ = std::move(c);
  out.trim();
  return out;
}

std::vector<std::uint32_t> Poly::taylor_coeffs(std::uint32_t u) const {
  if (is_zero()) return {};
  return jet(u, degree() + 1);
}

int Poly::vanishing_order(std::uint32_t u) const {
  if (is_zero()) return kInfiniteOrder;
  Poly g = *this;
  int m = 0;
  for (;; ++m) {
    auto [q, rem] = divide_linear(g, u);
    if (rem != 0) return m;
    g = std::move(q);
  }
}

Poly Poly::scale_substitute(std::uint32_t c) const {
  std::vector<std::uint32_t> out(c_.size(), 0);
  std::uint32_t ck = f_.from_int(1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    out[k] = f_.mul(c_[k], ck);
    ck = f_.mul(ck, c);
  }
  Poly r(f_);
  r.c_ = std::move(out);
  r.trim();
  return r;
}

std::string Poly::to_text() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

}  // namespace ghrs
