#pragma once

#include "bubbles/poly.hpp"

#include <string>

namespace bubbles {

/// Reduced quotient num/den of polynomials: den is monic and
/// gcd(num, den) = 1. Zero is 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Poly::constant(1)) {}
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly p) : RatFunc(std::move(p), Poly::constant(1)) {}
  explicit RatFunc(const Scalar& c) : RatFunc(Poly::constant(c)) {}

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  /// deg num - deg den: the top exponent of the expansion at infinity.
  int degree_at_infinity() const;

  /// r(-u)
  RatFunc negate_var() const;
  /// r(1/u)
  RatFunc invert_var() const;
  RatFunc reciprocal() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const { return RatFunc(-num_, den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

}  // namespace bubbles
