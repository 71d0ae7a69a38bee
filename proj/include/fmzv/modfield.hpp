#pragma once

/**
 * @file modfield.hpp
 * @brief Arithmetic in Z/pZ for word-sized odd primes.
 *
 * Residues carry their modulus; mixing residues of different primes throws
 * PrimeMismatch. Products go through a 128-bit intermediate, which is why
 * primes are capped at 2^61.
 */

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace fmzv {

using u64 = std::uint64_t;

inline constexpr u64 kMaxPrime = u64{1} << 61;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(u64 n) noexcept;

/// Primes in the inclusive range [lo, hi], ascending.
std::vector<u64> primes_in_range(u64 lo, u64 hi);

namespace detail {

inline u64 mul_mod(u64 a, u64 b, u64 p) noexcept {
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
inline u64 add_mod(u64 a, u64 b, u64 p) noexcept {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) noexcept {
  return a >= b ? a - b : a + p - b;
}
u64 pow_mod(u64 a, u64 e, u64 p) noexcept;

/// Inverse by extended Euclid. Throws ZeroInverse for a == 0 (mod p).
u64 inv_mod(u64 a, u64 p);

/// Prefix-product batch inversion in place; one call to inv_mod in total.
void batch_inv_inplace(std::span<u64> values, u64 p);

/// Number of inv_mod calls made on this thread so far.
u64 inversion_count() noexcept;

} // namespace detail

/// An odd prime modulus together with lazily built factorial tables.
/// Copies share the tables.
class PrimeCtx {
public:
  explicit PrimeCtx(u64 p);

  u64 prime() const noexcept { return p_; }

  /// n! mod p for 0 <= n < p.
  u64 factorial(u64 n) const;
  /// (n!)^{-1} mod p for 0 <= n < p.
  u64 inv_factorial(u64 n) const;

  friend bool operator==(const PrimeCtx& a, const PrimeCtx& b) noexcept {
    return a.p_ == b.p_;
  }

  /// Tables are materialized for n below this bound; larger n are computed
  /// on demand by direct products.
  static constexpr u64 kTableCap = u64{1} << 20;

private:
  struct Tables;
  const Tables& tables() const;

  u64 p_;
  std::shared_ptr<Tables> tables_;
};

class Residue {
public:
  /// `value` is reduced modulo ctx.prime().
  Residue(u64 value, const PrimeCtx& ctx) noexcept
      : value_(value % ctx.prime()), p_(ctx.prime()) {}

  static Residue from_signed(std::int64_t value, const PrimeCtx& ctx) noexcept;

  u64 value() const noexcept { return value_; }
  u64 modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return value_ == 0; }

  /// A residue of the same prime with the given value (reduced).
  Residue with_value(u64 v) const noexcept { return Residue(v % p_, p_, 0); }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const noexcept;
  Residue& operator+=(const Residue& o) { return *this = *this + o; }
  Residue& operator-=(const Residue& o) { return *this = *this - o; }
  Residue& operator*=(const Residue& o) { return *this = *this * o; }

  Residue pow(u64 e) const noexcept;

  /// Same prime and same value. Comparing residues of different primes
  /// throws PrimeMismatch.
  bool operator==(const Residue& o) const;

private:
  Residue(u64 value, u64 p, int) noexcept : value_(value), p_(p) {}
  void require_same_prime(const Residue& o) const;

  u64 value_;
  u64 p_;
};

Residue mod_inv(const Residue& a);

/// Elementwise inverses using one modular inversion. Throws ZeroInverse
/// carrying the first zero position.
std::vector<Residue> batch_inv(std::span<const Residue> values);

/// Rising factorial (a)_n = a(a+1)...(a+n-1); (a)_0 = 1.
Residue pochhammer_mod(const Residue& a, u64 n);

/// C(n, k) mod p from factorial tables. Requires n < p; 0 outside 0 <= k <= n.
Residue binom_mod(u64 n, std::int64_t k, const PrimeCtx& ctx);

/// sum_{l=1}^{p-1} l^{-m} mod p.
Residue power_sum_mod(u64 m, const PrimeCtx& ctx);

/// Table inv[l] = l^{-1} for 1 <= l < p (inv[0] = 0).
std::vector<u64> inverse_table(const PrimeCtx& ctx);

} // namespace fmzv
