#include "fmzv/symbolic/poly.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace fmzv {

Poly::Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const BigRational& c) { return Poly({c}); }

Poly Poly::linear(const BigRational& a0, const BigRational& a1) { return Poly({a0, a1}); }

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0)
    c_.pop_back();
}

BigRational Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigRational(0); }

BigRational Poly::eval(const BigRational& z) const {
  BigRational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = acc * z + c_[i];
  return acc;
}

Poly Poly::reflected() const {
  Poly out = *this;
  for (std::size_t i = 1; i < out.c_.size(); i += 2)
    out.c_[i] = -out.c_[i];
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.c_)
    c = -c;
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<BigRational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(i) + b.coeff(i);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero())
    return Poly();
  std::vector<BigRational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const BigRational& s, const Poly& a) {
  std::vector<BigRational> c(a.c_);
  for (auto& x : c)
    x *= s;
  return Poly(std::move(c));
}

std::string Poly::to_string(std::string_view var) const {
  if (c_.empty())
    return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (sgn(c_[i]) == 0)
      continue;
    if (!out.empty())
      out += sgn(c_[i]) < 0 ? " - " : " + ";
    else if (sgn(c_[i]) < 0)
      out += "-";
    BigRational mag = abs(c_[i]);
    const bool unit = mag == 1;
    if (i == 0 || !unit)
      out += mag.get_str();
    if (i >= 1)
      out += (i == 0 || !unit ? "*" : "") + std::string(var);
    if (i >= 2)
      out += fmt::format("^{}", i);
  }
  return out;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero())
    throw std::domain_error("polynomial division by zero");
  std::vector<BigRational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<BigRational> quo(std::max(a.degree() - db + 1, 0));
  const BigRational lead = b.leading();
  for (int d = a.degree(); d >= db; --d) {
    const BigRational f = rem[d] / lead;
    quo[d - db] = f;
    if (sgn(f) == 0)
      continue;
    for (int i = 0; i <= db; ++i)
      rem[d - db + i] -= f * b.coeff(i);
  }
  rem.resize(std::max(db, 0));
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw std::domain_error("exact_quotient: nonzero remainder");
  return q;
}

namespace {

using ZPoly = std::vector<BigInt>;

void trim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0)
    p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

BigInt content(const ZPoly& p) {
  BigInt g = 0;
  for (const auto& c : p)
    g = gcd(g, c);
  return g;
}

ZPoly primitive_part(ZPoly p) {
  const BigInt g = content(p);
  if (g > 1)
    for (auto& c : p)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

// Integer polynomial with the same roots: clear denominators.
ZPoly integral(const Poly& p) {
  BigInt l = 1;
  for (const auto& c : p.coeffs())
    l = lcm(l, BigInt(c.get_den()));
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs())
    out.push_back(BigInt(c.get_num() * (l / c.get_den())));
  return out;
}

// lc(B)^(deg A - deg B + 1) * A mod B, exactly over Z.
ZPoly pseudo_remainder(ZPoly r, const ZPoly& b) {
  const int db = degree(b);
  const BigInt& lb = b.back();
  int e = degree(r) - db + 1;
  while (!r.empty() && degree(r) >= db) {
    const BigInt lr = r.back();
    const int shift = degree(r) - db;
    for (auto& c : r)
      c *= lb;
    for (int i = 0; i <= db; ++i)
      r[shift + i] -= lr * b[i];
    trim(r);
    --e;
  }
  BigInt scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(std::max(e, 0)));
  for (auto& c : r)
    c *= scale;
  return r;
}

BigInt power(const BigInt& b, unsigned long e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
  return out;
}

ZPoly subresultant_gcd(ZPoly a, ZPoly b) {
  if (degree(a) < degree(b))
    std::swap(a, b);
  if (b.empty())
    return primitive_part(a);
  const BigInt d = gcd(content(a), content(b));
  a = primitive_part(std::move(a));
  b = primitive_part(std::move(b));
  BigInt g = 1, h = 1;
  while (true) {
    const int delta = degree(a) - degree(b);
    ZPoly r = pseudo_remainder(a, b);
    if (r.empty())
      break;
    if (degree(r) == 0)
      return ZPoly{d};
    a = std::move(b);
    const BigInt divisor = g * power(h, static_cast<unsigned long>(delta));
    for (auto& c : r)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    b = std::move(r);
    g = a.back();
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      BigInt num = power(g, static_cast<unsigned long>(delta));
      BigInt den = power(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  ZPoly out = primitive_part(std::move(b));
  for (auto& c : out)
    c *= d;
  return out;
}

Poly monic(const Poly& p) {
  if (p.is_zero())
    return p;
  return BigRational(1) / p.leading() * p;
}

} // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero())
    return monic(b);
  if (b.is_zero())
    return monic(a);
  const ZPoly g = subresultant_gcd(integral(a), integral(b));
  std::vector<BigRational> c;
  c.reserve(g.size());
  for (const auto& x : g)
    c.emplace_back(x);
  return monic(Poly(std::move(c)));
}

std::vector<BigRational> series_quotient(const Poly& num, const Poly& den, unsigned order) {
  const BigRational d0 = den.coeff(0);
  if (sgn(d0) == 0)
    throw std::domain_error("series_quotient: denominator vanishes at 0");
  std::vector<BigRational> q(order + 1);
  for (unsigned j = 0; j <= order; ++j) {
    BigRational acc = num.coeff(j);
    const unsigned top = std::min<unsigned>(j, static_cast<unsigned>(std::max(den.degree(), 0)));
    for (unsigned t = 1; t <= top; ++t)
      acc -= den.coeff(t) * q[j - t];
    q[j] = acc / d0;
  }
  return q;
}

} // namespace fmzv
