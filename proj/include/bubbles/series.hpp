#pragma once

#include "bubbles/ratfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bubbles {

class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Truncated Laurent expansion at u = infinity.
///
/// Carries the coefficients of u^e for top_exp() >= e >= -order(); all
/// coefficients of exponents above top_exp() are zero, those below -order()
/// are unknown. The leading carried coefficient may be zero, in which case
/// the series is not a unit.
class SeriesInf {
 public:
  SeriesInf() = default;
  /// coeffs[i] is the coefficient of u^{top_exp - i}; the length must equal
  /// top_exp + order + 1 (padded with zeros when shorter).
  SeriesInf(int top_exp, std::vector<Scalar> coeffs, int order);

  static SeriesInf zero(int order) { return SeriesInf(0, {}, order); }
  static SeriesInf from_poly(const Poly& p, int order);

  int top_exp() const { return top_; }
  int order() const { return order_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  /// Coefficient of u^r: zero above top_exp, TruncationError below -order.
  Scalar coeff(int r) const;
  /// sum_{r >= 0} [s]_{u^r} u^r
  Poly polypart() const;
  bool is_unit() const { return !coeffs_.empty() && coeffs_.front() != 0; }

  /// s(-u)
  SeriesInf negate_var() const;
  /// u^k s(u)
  SeriesInf shift(int k) const;
  /// Drops everything below u^{-new_order}; new_order must not exceed order().
  SeriesInf truncate(int new_order) const;
  SeriesInf inverse() const;

  SeriesInf& operator*=(const Scalar& c);
  friend SeriesInf operator+(const SeriesInf& a, const SeriesInf& b);
  friend SeriesInf operator-(const SeriesInf& a, const SeriesInf& b);
  /// Result order is min(order_a - max(top_b, 0), order_b - max(top_a, 0)),
  /// which is min(order_a, order_b) whenever neither series has positive
  /// exponents.
  friend SeriesInf operator*(const SeriesInf& a, const SeriesInf& b);
  friend SeriesInf operator*(const Poly& p, const SeriesInf& s);
  friend SeriesInf operator*(SeriesInf s, const Scalar& c) { return s *= c; }

  /// Exponent of the first disagreement at or above u^{-min(order_a, order_b)}.
  friend std::optional<int> first_mismatch(const SeriesInf& a, const SeriesInf& b);
  friend bool agrees(const SeriesInf& a, const SeriesInf& b) { return !first_mismatch(a, b); }

  std::string to_string(int max_terms = 8) const;

 private:
  int top_ = 0;
  int order_ = 0;
  std::vector<Scalar> coeffs_;
};

/// Laurent expansion of r at u = infinity, carried down to u^{-order}.
SeriesInf series_expand(const RatFunc& r, int order);

inline Scalar series_coeff(const SeriesInf& s, int r) { return s.coeff(r); }
inline Poly series_polypart(const SeriesInf& s) { return s.polypart(); }

/// Truncated Taylor series at u = 0: coeffs[i] is the coefficient of u^i
/// for 0 <= i <= order.
struct SeriesZero {
  std::vector<Scalar> coeffs;

  int order() const { return static_cast<int>(coeffs.size()) - 1; }
  Scalar coeff(int i) const;
  /// p(u) * s(u), truncated to the same order.
  SeriesZero times(const Poly& p) const;
};

/// For s = sum_{r >= 0} c_r u^{-r} (top exponent <= 0), the Taylor series
/// of s(1/u) = sum c_r u^r at zero, to the same order.
SeriesZero invert_var(const SeriesInf& s);

}  // namespace bubbles
