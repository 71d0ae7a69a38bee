#pragma once

#include "fmzv/symbolic/rational.hpp"

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fmzv {

/// Univariate polynomial over Q, coefficients in ascending degree with
/// trailing zeros trimmed. The zero polynomial has degree -1.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> coeffs);

  static Poly constant(const BigRational& c);
  /// a0 + a1 z
  static Poly linear(const BigRational& a0, const BigRational& a1);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Coefficient of z^i; zero past the degree.
  BigRational coeff(std::size_t i) const;
  const BigRational& leading() const { return c_.back(); }
  std::span<const BigRational> coeffs() const noexcept { return c_; }

  BigRational eval(const BigRational& z) const;
  /// p(-z)
  Poly reflected() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const BigRational& c, const Poly& a);
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  std::string to_string(std::string_view var = "z") const;

private:
  void trim();
  std::vector<BigRational> c_;
};

/// Euclidean division a = q b + r with deg r < deg b. b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// Exact division; throws std::domain_error if b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);

/// Monic gcd (zero iff both inputs are zero), computed on integer primitive
/// parts with a subresultant remainder sequence.
Poly gcd(const Poly& a, const Poly& b);

/// Power-series coefficients of num/den at z = 0 through z^order.
/// Requires den(0) != 0.
std::vector<BigRational> series_quotient(const Poly& num, const Poly& den, unsigned order);

} // namespace fmzv
