#pragma once

#include "fmzv/symbolic/poly.hpp"

#include <string>

namespace fmzv {

/// Reduced rational function num/den over Q: gcd(num, den) = 1 and den monic.
/// Two RatFuncs are equal iff their normal forms coincide.
class RatFunc {
public:
  RatFunc() : den_(Poly::constant(1)) {}
  /// Throws std::domain_error on a zero denominator.
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly num) : RatFunc(std::move(num), Poly::constant(1)) {}

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  /// f(-z)
  RatFunc reflected() const;
  bool regular_at_zero() const { return sgn(den_.coeff(0)) != 0; }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  std::string to_string() const;

private:
  Poly num_;
  Poly den_;
};

} // namespace fmzv
