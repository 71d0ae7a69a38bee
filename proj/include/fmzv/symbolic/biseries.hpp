#pragma once

#include "fmzv/symbolic/rational.hpp"

#include <vector>

namespace fmzv {

/// Truncated power series sum c_{ij} x^i z^j with 0 <= i <= dx, 0 <= j <= dz.
/// Every coefficient in the grid is stored; products drop terms past the
/// truncation orders.
class BiSeries {
public:
  BiSeries(unsigned dx, unsigned dz) : dx_(dx), dz_(dz), c_((dx + 1u) * (dz + 1u)) {}

  unsigned dx() const noexcept { return dx_; }
  unsigned dz() const noexcept { return dz_; }

  const BigRational& coeff(unsigned i, unsigned j) const { return c_.at(i * (dz_ + 1u) + j); }
  BigRational& coeff(unsigned i, unsigned j) { return c_.at(i * (dz_ + 1u) + j); }

  /// Orders must match (std::invalid_argument otherwise).
  friend BiSeries operator+(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  bool operator==(const BiSeries& o) const = default;

  /// Every coefficient of an odd power of z is zero.
  bool is_even_in_z() const;

private:
  unsigned dx_;
  unsigned dz_;
  std::vector<BigRational> c_;
};

} // namespace fmzv
