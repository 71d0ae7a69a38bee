#include "fmzv/symbolic/ratfunc.hpp"

#include <stdexcept>

namespace fmzv {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero())
    throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const BigRational scale = BigRational(1) / den.leading();
  num_ = scale * num;
  den_ = scale * den;
}

RatFunc RatFunc::reflected() const { return RatFunc(num_.reflected(), den_.reflected()); }

RatFunc RatFunc::operator-() const {
  RatFunc out = *this;
  out.num_ = -out.num_;
  return out;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_)
    return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.num_.is_zero())
    throw std::domain_error("rational function division by zero");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string() const {
  if (den_.degree() == 0)
    return "(" + num_.to_string() + ")";
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace fmzv
