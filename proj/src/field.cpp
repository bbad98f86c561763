#include "finc/field.hpp"

#include <charconv>
#include <stdexcept>

namespace finc {

namespace {

using Poly = std::vector<std::uint64_t>;  // constant term first

// Strips leading zero coefficients.
void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p, g monic.
Poly poly_mod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  while (f.size() >= g.size()) {
    std::uint64_t lead = f.back();
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      std::uint64_t t = (lead * g[i]) % p;
      f[shift + i] = (f[shift + i] + p - t) % p;
    }
    trim(f);
  }
  return f;
}

bool divides(const Poly& g, const Poly& f, std::uint64_t p) {
  return poly_mod(f, g, p).empty();
}

Poly decode_poly(std::uint64_t v, std::uint64_t p) {
  Poly c;
  while (v != 0) {
    c.push_back(v % p);
    v /= p;
  }
  return c;
}

// Irreducibility over F_p by trial division: f (monic, deg k >= 2) is
// irreducible iff no monic divisor of degree in [1, k/2] exists.
bool is_irreducible(const Poly& f, std::uint64_t p) {
  std::size_t k = f.size() - 1;
  for (std::size_t deg = 1; deg <= k / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      Poly g = decode_poly(low, p);
      g.resize(deg + 1, 0);
      g[deg] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(std::uint64_t p, unsigned k, std::uint64_t q,
             std::vector<std::uint64_t> modulus)
    : p_(p), k_(k), q_(q), modulus_(std::move(modulus)) {}

Field Field::make(std::uint64_t p, unsigned k) {
  if (k == 0) throw std::invalid_argument("extension degree k must be >= 1");
  if (!is_prime(p))
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " is not prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > (std::uint64_t{1} << 62) / p)
      throw std::invalid_argument("p^k overflows the supported range");
    q *= p;
  }
  if (k == 1) return Field(p, 1, q, {});

  for (std::uint64_t low = 0; low < q; ++low) {
    Poly f = decode_poly(low, p);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (is_irreducible(f, p)) return Field(p, k, q, std::move(f));
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

Field Field::parse(std::string_view s) {
  std::uint64_t p = 0;
  unsigned k = 1;
  auto caret = s.find('^');
  std::string_view ps = s.substr(0, caret);
  auto r = std::from_chars(ps.data(), ps.data() + ps.size(), p);
  if (r.ec != std::errc{} || r.ptr != ps.data() + ps.size())
    throw std::invalid_argument("bad field designator: " + std::string(s));
  if (caret != std::string_view::npos) {
    std::string_view ks = s.substr(caret + 1);
    auto rk = std::from_chars(ks.data(), ks.data() + ks.size(), k);
    if (rk.ec != std::errc{} || rk.ptr != ks.data() + ks.size())
      throw std::invalid_argument("bad field designator: " + std::string(s));
  }
  return make(p, k);
}

void Field::check(Elt a) const {
  if (a >= q_)
    throw std::invalid_argument("element " + std::to_string(a) +
                                " out of range for F_" + std::to_string(q_));
}

Elt Field::add(Elt a, Elt b) const {
  check(a);
  check(b);
  if (k_ == 1) return (a + b) % p_;
  Elt out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

Elt Field::neg(Elt a) const {
  check(a);
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elt out = 0, mult = 1;
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

Elt Field::sub(Elt a, Elt b) const { return add(a, neg(b)); }

Elt Field::mul(Elt a, Elt b) const {
  check(a);
  check(b);
  if (k_ == 1) return (a * b) % p_;
  Poly fa = decode_poly(a, p_);
  Poly fb = decode_poly(b, p_);
  if (fa.empty() || fb.empty()) return 0;
  Poly prod(fa.size() + fb.size() - 1, 0);
  for (std::size_t i = 0; i < fa.size(); ++i)
    for (std::size_t j = 0; j < fb.size(); ++j)
      prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
  Poly red = poly_mod(std::move(prod), modulus_, p_);
  Elt out = 0;
  for (std::size_t i = red.size(); i-- > 0;) out = out * p_ + red[i];
  return out;
}

Elt Field::pow(Elt a, std::uint64_t e) const {
  check(a);
  Elt out = 1, base = a;
  while (e != 0) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

Elt Field::inv(Elt a) const {
  check(a);
  if (a == 0) throw std::invalid_argument("inverse of zero");
  return pow(a, q_ - 2);
}

std::vector<std::uint64_t> Field::coeffs(Elt a) const {
  check(a);
  std::vector<std::uint64_t> c(k_);
  for (unsigned i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elt Field::from_coeffs(const std::vector<std::uint64_t>& c) const {
  if (c.size() > k_) throw std::invalid_argument("coefficient vector too long");
  Elt out = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    out = out * p_ + c[i];
  }
  return out;
}

std::vector<Elt> Field::elements() const {
  std::vector<Elt> out(q_);
  for (std::uint64_t i = 0; i < q_; ++i) out[i] = i;
  return out;
}

std::string Field::designator() const {
  if (k_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(k_);
}

}  // namespace finc
