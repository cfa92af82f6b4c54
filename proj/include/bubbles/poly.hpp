#pragma once

#include "bubbles/scalar.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bubbles {

/// Dense univariate polynomial over the rationals in the variable u.
/// coeffs()[i] is the coefficient of u^i; the zero polynomial has no
/// coefficients and degree -1. Leading coefficients are never zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(std::initializer_list<Scalar> coeffs) : Poly(std::vector<Scalar>(coeffs)) {}

  static Poly constant(const Scalar& c);
  static Poly monomial(const Scalar& c, int power);
  /// u - a
  static Poly linear(const Scalar& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Coefficient of u^i; zero outside the stored range.
  Scalar coeff(int i) const;
  const Scalar& leading() const;
  Scalar constant_term() const { return coeff(0); }

  Scalar operator()(const Scalar& x) const;

  Poly monic() const;
  /// f(-u)
  Poly negate_var() const;
  /// u^n f(1/u); requires n >= degree().
  Poly reversed(int n) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Scalar& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
  friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'u') const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

/// a / b, throwing std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);

bool divides(const Poly& d, const Poly& a);

/// Monic gcd via the Euclidean algorithm with monic normalization at each
/// step. gcd(0, 0) throws std::domain_error("gcd undefined").
Poly poly_gcd(const Poly& a, const Poly& b);

/// prod_{a in roots} (u - a)
Poly poly_from_roots(std::span<const Scalar> roots);

/// f(0)^{-1} u^{deg f} f(1/u) for monic f with f(0) != 0.
Poly poly_reverse(const Poly& f);

/// Multiplicity of `root` as a root of f (f nonzero).
int vanishing_order(const Poly& f, const Scalar& root);

}  // namespace bubbles
