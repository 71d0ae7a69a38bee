#include "fmzv/symbolic/biseries.hpp"

#include <stdexcept>

namespace fmzv {

namespace {

void require_same_orders(const BiSeries& a, const BiSeries& b) {
  if (a.dx() != b.dx() || a.dz() != b.dz())
    throw std::invalid_argument("series truncation orders differ");
}

} // namespace

BiSeries operator+(const BiSeries& a, const BiSeries& b) {
  require_same_orders(a, b);
  BiSeries out = a;
  for (std::size_t i = 0; i < out.c_.size(); ++i)
    out.c_[i] += b.c_[i];
  return out;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
  require_same_orders(a, b);
  BiSeries out(a.dx_, a.dz_);
  for (unsigned i1 = 0; i1 <= a.dx_; ++i1)
    for (unsigned j1 = 0; j1 <= a.dz_; ++j1) {
      const BigRational& x = a.coeff(i1, j1);
      if (sgn(x) == 0)
        continue;
      for (unsigned i2 = 0; i1 + i2 <= a.dx_; ++i2)
        for (unsigned j2 = 0; j1 + j2 <= a.dz_; ++j2)
          out.coeff(i1 + i2, j1 + j2) += x * b.coeff(i2, j2);
    }
  return out;
}

bool BiSeries::is_even_in_z() const {
  for (unsigned i = 0; i <= dx_; ++i)
    for (unsigned j = 1; j <= dz_; j += 2)
      if (sgn(coeff(i, j)) != 0)
        return false;
  return true;
}

} // namespace fmzv
