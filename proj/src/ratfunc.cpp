#include "bubbles/ratfunc.hpp"

#include <stdexcept>

namespace bubbles {

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  const Poly g = poly_gcd(num, den);
  num_ = exact_div(num, g);
  den_ = exact_div(den, g);
  const Scalar lead = den_.leading();
  if (lead != 1) {
    num_ *= Scalar(1 / lead);
    den_ *= Scalar(1 / lead);
  }
}

int RatFunc::degree_at_infinity() const {
  if (is_zero()) throw std::domain_error("degree at infinity of zero");
  return num_.degree() - den_.degree();
}

RatFunc RatFunc::negate_var() const { return RatFunc(num_.negate_var(), den_.negate_var()); }

RatFunc RatFunc::invert_var() const {
  if (is_zero()) return *this;
  // num(1/u)/den(1/u) = u^{b-a} rev(num)/rev(den)
  const int a = num_.degree();
  const int b = den_.degree();
  Poly n = num_.reversed(a);
  Poly d = den_.reversed(b);
  if (b >= a) {
    n *= Poly::monomial(1, b - a);
  } else {
    d *= Poly::monomial(1, a - b);
  }
  return RatFunc(std::move(n), std::move(d));
}

RatFunc RatFunc::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero rational function");
  return RatFunc(den_, num_);
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace bubbles
