#pragma once

#include <gmpxx.h>

#include <string>

namespace fmzv {

using BigInt = mpz_class;
/// Exact rational in lowest terms with positive denominator (GMP mpq).
using BigRational = mpq_class;

inline BigRational make_rational(long num, long den = 1) {
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

/// Always "num/den", e.g. "3/1", "-1/4".
inline std::string to_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace fmzv
