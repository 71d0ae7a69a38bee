#include "fmzv/modfield.hpp"

#include "fmzv/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <mutex>
#include <numeric>

namespace fmzv {

namespace {

thread_local u64 g_inversions = 0;

bool miller_rabin_witness(u64 n, u64 a, u64 d, int r) noexcept {
  u64 x = detail::pow_mod(a % n, d, n);
  if (x == 0 || x == 1 || x == n - 1)
    return false;
  for (int i = 1; i < r; ++i) {
    x = detail::mul_mod(x, x, n);
    if (x == n - 1)
      return false;
  }
  return true;
}

} // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2)
    return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q)
      return true;
    if (n % q == 0)
      return false;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // This base set is deterministic below 2^64.
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull})
    if (miller_rabin_witness(n, a, d, r))
      return false;
  return true;
}

std::vector<u64> primes_in_range(u64 lo, u64 hi) {
  std::vector<u64> out;
  for (u64 n = lo; n <= hi; ++n) {
    if (is_prime(n))
      out.push_back(n);
    if (n == ~u64{0})
      break;
  }
  return out;
}

namespace detail {

u64 pow_mod(u64 a, u64 e, u64 p) noexcept {
  u64 result = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

u64 inv_mod(u64 a, u64 p) {
  ++g_inversions;
  a %= p;
  if (a == 0)
    throw ZeroInverse(fmt::format("inverse of 0 mod {}", p), 0);
  // Extended Euclid on signed 128-bit to stay clear of overflow near 2^61.
  __int128 old_r = a, r = p, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    __int128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  old_s %= static_cast<__int128>(p);
  if (old_s < 0)
    old_s += p;
  return static_cast<u64>(old_s);
}

void batch_inv_inplace(std::span<u64> values, u64 p) {
  if (values.empty())
    return;
  std::vector<u64> prefix(values.size());
  u64 acc = 1;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] % p == 0)
      throw ZeroInverse(fmt::format("batch inverse: zero at position {} (mod {})", i, p), i);
    prefix[i] = acc;
    acc = mul_mod(acc, values[i] % p, p);
  }
  u64 inv = inv_mod(acc, p);
  for (std::size_t i = values.size(); i-- > 0;) {
    u64 v = values[i] % p;
    values[i] = mul_mod(inv, prefix[i], p);
    inv = mul_mod(inv, v, p);
  }
}

u64 inversion_count() noexcept { return g_inversions; }

} // namespace detail

struct PrimeCtx::Tables {
  std::once_flag once;
  std::vector<u64> fact;
  std::vector<u64> inv_fact;
};

PrimeCtx::PrimeCtx(u64 p) : p_(p), tables_(std::make_shared<Tables>()) {
  if (p < 3 || p % 2 == 0)
    throw NotPrime(fmt::format("{} is not an odd prime", p));
  if (p >= kMaxPrime)
    throw RangeError(fmt::format("prime {} exceeds the 2^61 cap", p));
  if (!is_prime(p))
    throw NotPrime(fmt::format("{} is not prime", p));
}

const PrimeCtx::Tables& PrimeCtx::tables() const {
  std::call_once(tables_->once, [this] {
    const u64 n = std::min(p_, kTableCap);
    auto& t = *tables_;
    t.fact.resize(n);
    t.inv_fact.resize(n);
    t.fact[0] = 1;
    for (u64 i = 1; i < n; ++i)
      t.fact[i] = detail::mul_mod(t.fact[i - 1], i, p_);
    t.inv_fact[n - 1] = detail::inv_mod(t.fact[n - 1], p_);
    for (u64 i = n - 1; i > 0; --i)
      t.inv_fact[i - 1] = detail::mul_mod(t.inv_fact[i], i, p_);
  });
  return *tables_;
}

u64 PrimeCtx::factorial(u64 n) const {
  if (n >= p_)
    throw RangeError(fmt::format("factorial {}! is 0 mod {} and not tabulated", n, p_));
  const auto& t = tables();
  if (n < t.fact.size())
    return t.fact[n];
  u64 acc = t.fact.back();
  for (u64 i = t.fact.size(); i <= n; ++i)
    acc = detail::mul_mod(acc, i, p_);
  return acc;
}

u64 PrimeCtx::inv_factorial(u64 n) const {
  const auto& t = tables();
  if (n < t.inv_fact.size())
    return t.inv_fact[n];
  return detail::inv_mod(factorial(n), p_);
}

Residue Residue::from_signed(std::int64_t value, const PrimeCtx& ctx) noexcept {
  const auto p = static_cast<std::int64_t>(ctx.prime());
  std::int64_t r = value % p;
  if (r < 0)
    r += p;
  return Residue(static_cast<u64>(r), ctx.prime(), 0);
}

void Residue::require_same_prime(const Residue& o) const {
  if (p_ != o.p_)
    throw PrimeMismatch(fmt::format("residues mod {} and mod {} cannot be combined", p_, o.p_));
}

Residue Residue::operator+(const Residue& o) const {
  require_same_prime(o);
  return Residue(detail::add_mod(value_, o.value_, p_), p_, 0);
}

Residue Residue::operator-(const Residue& o) const {
  require_same_prime(o);
  return Residue(detail::sub_mod(value_, o.value_, p_), p_, 0);
}

Residue Residue::operator*(const Residue& o) const {
  require_same_prime(o);
  return Residue(detail::mul_mod(value_, o.value_, p_), p_, 0);
}

Residue Residue::operator-() const noexcept {
  return Residue(value_ == 0 ? 0 : p_ - value_, p_, 0);
}

Residue Residue::pow(u64 e) const noexcept {
  return Residue(detail::pow_mod(value_, e, p_), p_, 0);
}

bool Residue::operator==(const Residue& o) const {
  require_same_prime(o);
  return value_ == o.value_;
}

Residue mod_inv(const Residue& a) {
  if (a.is_zero())
    throw ZeroInverse(fmt::format("inverse of 0 mod {}", a.modulus()), 0);
  return a.with_value(detail::inv_mod(a.value(), a.modulus()));
}

std::vector<Residue> batch_inv(std::span<const Residue> values) {
  if (values.empty())
    return {};
  const u64 p = values.front().modulus();
  std::vector<u64> raw(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i].modulus() != p)
      throw PrimeMismatch(fmt::format("batch inverse: position {} is mod {}, expected mod {}", i,
                                      values[i].modulus(), p));
    raw[i] = values[i].value();
  }
  detail::batch_inv_inplace(raw, p);
  std::vector<Residue> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    out.push_back(values[i].with_value(raw[i]));
  return out;
}

Residue pochhammer_mod(const Residue& a, u64 n) {
  const u64 p = a.modulus();
  // n >= p runs through a full residue system, so the product contains 0.
  if (n >= p)
    return a.with_value(0);
  u64 acc = 1 % p;
  u64 term = a.value();
  for (u64 j = 0; j < n; ++j) {
    acc = detail::mul_mod(acc, term, p);
    term = detail::add_mod(term, 1, p);
  }
  return a.with_value(acc);
}

Residue binom_mod(u64 n, std::int64_t k, const PrimeCtx& ctx) {
  const u64 p = ctx.prime();
  if (n >= p)
    throw RangeError(fmt::format("binom_mod requires n < p (n = {}, p = {})", n, p));
  if (k < 0 || static_cast<u64>(k) > n)
    return Residue(0, ctx);
  const u64 uk = static_cast<u64>(k);
  u64 v = detail::mul_mod(ctx.factorial(n), ctx.inv_factorial(uk), p);
  v = detail::mul_mod(v, ctx.inv_factorial(n - uk), p);
  return Residue(v, ctx);
}

std::vector<u64> inverse_table(const PrimeCtx& ctx) {
  const u64 p = ctx.prime();
  std::vector<u64> inv(p);
  std::iota(inv.begin() + 1, inv.end(), u64{1});
  detail::batch_inv_inplace(std::span<u64>(inv).subspan(1), p);
  return inv;
}

Residue power_sum_mod(u64 m, const PrimeCtx& ctx) {
  const u64 p = ctx.prime();
  const u64 e = m % (p - 1);
  auto inv = inverse_table(ctx);
  u64 acc = 0;
  for (u64 l = 1; l < p; ++l)
    acc = detail::add_mod(acc, detail::pow_mod(inv[l], e, p), p);
  return Residue(acc, ctx);
}

} // namespace fmzv
