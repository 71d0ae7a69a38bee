#pragma once

#include "fmzv/modfield.hpp"

#include <string>

namespace fmzv {

/// The quadratic extension F_p[w]/(w^2 - d) for a fixed quadratic
/// non-residue d. Elements a + b w with b != 0 lie outside F_p, so no linear
/// polynomial over F_p vanishes at them.
class Fp2Field {
public:
  explicit Fp2Field(const PrimeCtx& ctx);

  u64 prime() const noexcept { return p_; }
  u64 nonresidue() const noexcept { return d_; }

private:
  u64 p_;
  u64 d_;
};

class Fp2 {
public:
  Fp2(const Fp2Field& field, u64 re, u64 im = 0) noexcept
      : p_(field.prime()), d_(field.nonresidue()), re_(re % p_), im_(im % p_) {}

  u64 re() const noexcept { return re_; }
  u64 im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_ == 0 && im_ == 0; }

  Fp2 operator+(const Fp2& o) const noexcept {
    return make(detail::add_mod(re_, o.re_, p_), detail::add_mod(im_, o.im_, p_));
  }
  Fp2 operator-(const Fp2& o) const noexcept {
    return make(detail::sub_mod(re_, o.re_, p_), detail::sub_mod(im_, o.im_, p_));
  }
  Fp2 operator-() const noexcept { return make(detail::sub_mod(0, re_, p_), detail::sub_mod(0, im_, p_)); }
  Fp2 operator*(const Fp2& o) const noexcept {
    using detail::add_mod;
    using detail::mul_mod;
    const u64 re = add_mod(mul_mod(re_, o.re_, p_), mul_mod(d_, mul_mod(im_, o.im_, p_), p_), p_);
    const u64 im = add_mod(mul_mod(re_, o.im_, p_), mul_mod(im_, o.re_, p_), p_);
    return make(re, im);
  }
  /// Scalar from F_p (any integer, reduced).
  Fp2 scalar(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0)
      r += static_cast<std::int64_t>(p_);
    return make(static_cast<u64>(r), 0);
  }
  Fp2 pow(u64 e) const noexcept {
    Fp2 result = make(1, 0), base = *this;
    while (e) {
      if (e & 1)
        result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }
  /// Throws ZeroInverse for 0.
  Fp2 inverse() const;
  Fp2 operator/(const Fp2& o) const { return *this * o.inverse(); }
  bool operator==(const Fp2& o) const noexcept { return re_ == o.re_ && im_ == o.im_ && p_ == o.p_; }

  /// "a+b*w"
  std::string to_string() const { return std::to_string(re_) + "+" + std::to_string(im_) + "*w"; }

private:
  Fp2 make(u64 re, u64 im) const noexcept {
    Fp2 out = *this;
    out.re_ = re;
    out.im_ = im;
    return out;
  }

  u64 p_;
  u64 d_;
  u64 re_;
  u64 im_;
};

} // namespace fmzv
