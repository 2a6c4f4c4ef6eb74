#include "ghrs/field.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <sstream>

namespace ghrs {
namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kMaxExt = 16;  // e <= 16 since p >= 2 and q <= 2^16

std::uint32_t parse_u32(std::string_view s, const char* what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
  return v;
}

// Polynomials over GF(p) as coefficient vectors, low-to-high, used only for
// modulus validation and the built-in modulus search.
using PolyP = std::vector<std::uint32_t>;

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g, g monic, arithmetic mod p.
PolyP poly_mod(PolyP f, const PolyP& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  while (f.size() > dg) {
    const std::uint64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      std::uint64_t x = f[shift + i] + (p - ((lead * g[i]) % p)) % p;
      f[shift + i] = static_cast<std::uint32_t>(x % p);
    }
    trim(f);
  }
  return f;
}

bool divides(const PolyP& g, const PolyP& f, std::uint32_t p) {
  return poly_mod(f, g, p).empty();
}

std::uint64_t eval_poly_p(const PolyP& f, std::uint64_t x, std::uint32_t p) {
  std::uint64_t acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = (acc * x + *it) % p;
  return acc;
}

// Brute-force irreducibility: no roots in GF(p) and no monic factor of
// degree <= e/2.
bool is_irreducible(const PolyP& f, std::uint32_t p) {
  const std::size_t e = f.size() - 1;
  if (e == 0) return false;
  for (std::uint32_t x = 0; x < p; ++x)
    if (eval_poly_p(f, x, p) == 0) return false;
  for (std::size_t d = 2; 2 * d <= e; ++d) {
    // all monic degree-d polynomials: p^d candidates
    PolyP g(d + 1, 0);
    g[d] = 1;
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

PolyP first_irreducible(std::uint32_t p, std::uint32_t e) {
  PolyP f(e + 1, 0);
  f[e] = 1;
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t v = idx;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible modulus found");  // unreachable for valid p, e
}

}  // namespace

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime");
  if (p > kMaxOrder) throw ParseError("field order exceeds 2^16");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = 1;
  d->q = p;
  return Field(std::move(d));
}

Field Field::extension(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw ParseError("characteristic " + std::to_string(p) + " is not prime");
  if (modulus.size() < 2) throw ParseError("modulus must have degree >= 1");
  const std::uint32_t e = static_cast<std::uint32_t>(modulus.size() - 1);
  if (e == 1) return prime(p);
  if (e > kMaxExt) throw ParseError("extension degree too large");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ParseError("field order exceeds 2^16");
  }
  PolyP m(modulus);
  for (auto& c : m) c %= p;
  if (m.back() != 1) throw ParseError("modulus must be monic");
  if (!is_irreducible(m, p)) throw ParseError("modulus is reducible over GF(p)");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->e = e;
  d->q = static_cast<std::uint32_t>(q);
  d->modulus = std::move(m);
  return Field(std::move(d));
}

Field Field::of_order(std::uint32_t q) {
  if (q < 2 || q > kMaxOrder) throw ParseError("field order out of range");
  std::uint32_t p = 2;
  while (q % p != 0) {
    ++p;
    if (static_cast<std::uint64_t>(p) * p > q) {
      p = q;
      break;
    }
  }
  std::uint32_t e = 0;
  std::uint64_t pe = 1;
  while (pe < q) {
    pe *= p;
    ++e;
  }
  if (pe != q) throw ParseError(std::to_string(q) + " is not a prime power");
  if (e == 1) return prime(p);
  PolyP m = first_irreducible(p, e);
  return extension(p, m);
}

Field Field::parse(std::string_view spec) {
  auto caret = spec.find('^');
  if (caret == std::string_view::npos) {
    std::uint32_t q = parse_u32(spec, "field order");
    return of_order(q);
  }
  std::uint32_t p = parse_u32(spec.substr(0, caret), "characteristic");
  std::string_view rest = spec.substr(caret + 1);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    std::uint32_t e = parse_u32(rest, "extension degree");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
      q *= p;
      if (q > kMaxOrder) throw ParseError("field order exceeds 2^16");
    }
    return of_order(static_cast<std::uint32_t>(q));
  }
  std::uint32_t e = parse_u32(rest.substr(0, colon), "extension degree");
  std::vector<std::uint32_t> coeffs;
  std::string_view tail = rest.substr(colon + 1);
  while (!tail.empty()) {
    auto comma = tail.find(',');
    coeffs.push_back(parse_u32(tail.substr(0, comma), "modulus coefficient"));
    if (comma == std::string_view::npos) break;
    tail = tail.substr(comma + 1);
  }
  if (coeffs.size() != e + 1)
    throw ParseError("modulus must list e+1 coefficients low-to-high");
  return extension(p, coeffs);
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  const auto& d = *d_;
  if (d.e == 1) {
    std::uint32_t s = a + b;
    return s >= d.p ? s - d.p : s;
  }
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < d.e; ++i) {
    std::uint32_t ca = a % d.p, cb = b % d.p;
    a /= d.p;
    b /= d.p;
    std::uint32_t s = ca + cb;
    if (s >= d.p) s -= d.p;
    out += s * mul;
    mul *= d.p;
  }
  return out;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  const auto& d = *d_;
  if (d.e == 1) return a == 0 ? 0 : d.p - a;
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < d.e; ++i) {
    std::uint32_t ca = a % d.p;
    a /= d.p;
    out += (ca == 0 ? 0 : d.p - ca) * mul;
    mul *= d.p;
  }
  return out;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  const auto& d = *d_;
  if (d.e == 1) return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % d.p);
  if (a == 0 || b == 0) return 0;
  std::array<std::uint32_t, kMaxExt> ca{}, cb{};
  std::array<std::uint32_t, 2 * kMaxExt> prod{};
  for (std::uint32_t i = 0; i < d.e; ++i) {
    ca[i] = a % d.p;
    a /= d.p;
    cb[i] = b % d.p;
    b /= d.p;
  }
  for (std::uint32_t i = 0; i < d.e; ++i) {
    if (ca[i] == 0) continue;
    for (std::uint32_t j = 0; j < d.e; ++j)
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % d.p);
  }
  // reduce by the monic modulus
  for (std::uint32_t k = 2 * d.e - 2; k >= d.e; --k) {
    const std::uint64_t lead = prod[k];
    if (lead == 0) continue;
    prod[k] = 0;
    for (std::uint32_t i = 0; i < d.e; ++i) {
      std::uint64_t x = prod[k - d.e + i] + (d.p - ((lead * d.modulus[i]) % d.p)) % d.p;
      prod[k - d.e + i] = static_cast<std::uint32_t>(x % d.p);
    }
  }
  std::uint32_t out = 0, m = 1;
  for (std::uint32_t i = 0; i < d.e; ++i) {
    out += prod[i] * m;
    m *= d.p;
  }
  return out;
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t k) const {
  std::uint32_t base = a, out = from_int(1);
  while (k != 0) {
    if (k & 1) out = mul(out, base);
    base = mul(base, base);
    k >>= 1;
  }
  return out;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  return pow(a, d_->q - 2);
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const {
  if (b == 0) throw DivisionByZero("division by zero");
  return mul(a, inv(b));
}

std::uint32_t Field::from_int(std::int64_t v) const {
  const std::int64_t p = d_->p;
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::vector<std::uint32_t> Field::coeffs(std::uint32_t rep) const {
  std::vector<std::uint32_t> out(d_->e);
  for (std::uint32_t i = 0; i < d_->e; ++i) {
    out[i] = rep % d_->p;
    rep /= d_->p;
  }
  return out;
}

std::uint32_t Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != d_->e) throw ParseError("coefficient vector must have length e");
  std::uint32_t out = 0, m = 1;
  for (std::uint32_t i = 0; i < d_->e; ++i) {
    out += (c[i] % d_->p) * m;
    m *= d_->p;
  }
  return out;
}

Fq Field::element(std::uint32_t rep) const {
  if (rep >= d_->q) throw ParseError("residue out of range for field");
  return Fq(*this, rep);
}

Fq Field::operator()(std::int64_t v) const { return Fq(*this, from_int(v)); }

bool Field::operator==(const Field& other) const {
  if (d_ == other.d_) return true;
  return d_->p == other.d_->p && d_->e == other.d_->e && d_->modulus == other.d_->modulus;
}

std::string Field::to_string() const {
  if (d_->e == 1) return std::to_string(d_->p);
  std::ostringstream os;
  os << d_->p << '^' << d_->e << ':';
  for (std::size_t i = 0; i < d_->modulus.size(); ++i) {
    if (i) os << ',';
    os << d_->modulus[i];
  }
  return os.str();
}

std::uint32_t binom_mod(std::uint64_t n, std::int64_t a, std::uint32_t p) {
  if (a < 0) return 0;
  if (a == 0) return 1;
  if (static_cast<std::uint64_t>(a) > n) return 0;
  // Pascal row n, reduced mod p throughout; the recurrence is integer-valid
  // so reduction commutes.
  std::vector<std::uint32_t> row(static_cast<std::size_t>(a) + 1, 0);
  row[0] = 1 % p;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::size_t j = std::min<std::uint64_t>(i, static_cast<std::uint64_t>(a)); j >= 1; --j) {
      row[j] = (row[j] + row[j - 1]) % p;
    }
  }
  return row[static_cast<std::size_t>(a)];
}

std::uint32_t binom_mod_lucas(std::uint64_t n, std::int64_t a, std::uint32_t p) {
  if (a < 0) return 0;
  if (a == 0) return 1;
  std::uint64_t m = static_cast<std::uint64_t>(a);
  std::uint64_t out = 1;
  while (n != 0 || m != 0) {
    std::uint64_t nd = n % p, md = m % p;
    n /= p;
    m /= p;
    if (md > nd) return 0;
    // binomial of digits mod p; digits < p so no factor vanishes mod p
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < md; ++i) {
      num = (num * ((nd - i) % p)) % p;
      den = (den * ((i + 1) % p)) % p;
    }
    std::uint64_t dinv = 1, base = den, k = p - 2;
    while (k) {
      if (k & 1) dinv = (dinv * base) % p;
      base = (base * base) % p;
      k >>= 1;
    }
    out = (out * ((num * dinv) % p)) % p;
  }
  return static_cast<std::uint32_t>(out);
}

}  // namespace ghrs
