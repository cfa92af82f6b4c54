#include "bubbles/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bubbles {

SeriesInf::SeriesInf(int top_exp, std::vector<Scalar> coeffs, int order)
    : top_(top_exp), order_(order), coeffs_(std::move(coeffs)) {
  if (top_ < -order_) {
    // Nothing above the truncation point is carried; keep one known zero.
    top_ = -order_;
    coeffs_.assign(1, Scalar(0));
    return;
  }
  const auto len = static_cast<std::size_t>(top_ + order_ + 1);
  if (coeffs_.size() > len) throw std::invalid_argument("series carries coefficients below its order");
  coeffs_.resize(len);
}

SeriesInf SeriesInf::from_poly(const Poly& p, int order) {
  if (p.is_zero()) return zero(order);
  std::vector<Scalar> c;
  for (int e = p.degree(); e >= -order; --e) c.push_back(p.coeff(e));
  return SeriesInf(p.degree(), std::move(c), order);
}

Scalar SeriesInf::coeff(int r) const {
  if (r < -order_) {
    throw TruncationError("below truncation: u^" + std::to_string(r) + " requested, order " + std::to_string(order_));
  }
  if (r > top_) return 0;
  return coeffs_[static_cast<std::size_t>(top_ - r)];
}

Poly SeriesInf::polypart() const {
  std::vector<Scalar> c(static_cast<std::size_t>(std::max(top_ + 1, 0)));
  for (int r = 0; r <= top_; ++r) c[static_cast<std::size_t>(r)] = coeff(r);
  return Poly(std::move(c));
}

SeriesInf SeriesInf::negate_var() const {
  SeriesInf out = *this;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    const int e = top_ - static_cast<int>(i);
    if (e % 2 != 0) out.coeffs_[i] = -out.coeffs_[i];
  }
  return out;
}

SeriesInf SeriesInf::shift(int k) const { return SeriesInf(top_ + k, coeffs_, order_ - k); }

SeriesInf SeriesInf::truncate(int new_order) const {
  if (new_order > order_) throw TruncationError("cannot extend a series beyond its order");
  std::vector<Scalar> c;
  for (int e = top_; e >= -new_order; --e) c.push_back(coeff(e));
  return SeriesInf(top_, std::move(c), new_order);
}

SeriesInf SeriesInf::inverse() const {
  if (!is_unit()) throw std::domain_error("series is not a unit (leading carried coefficient is zero)");
  const Scalar lead_inv = 1 / coeffs_.front();
  const int len = top_ + order_ + 1;
  // s = c u^T (1 + d); 1/s = c^{-1} u^{-T} (1 + e)
  std::vector<Scalar> d(static_cast<std::size_t>(len));
  for (int k = 1; k < len; ++k) d[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)] * lead_inv;
  std::vector<Scalar> e(static_cast<std::size_t>(len));
  e[0] = 1;
  for (int k = 1; k < len; ++k) {
    Scalar acc = 0;
    for (int j = 1; j <= k; ++j) acc -= d[static_cast<std::size_t>(j)] * e[static_cast<std::size_t>(k - j)];
    e[static_cast<std::size_t>(k)] = acc;
  }
  for (auto& x : e) x *= lead_inv;
  return SeriesInf(-top_, std::move(e), order_ + 2 * top_);
}

SeriesInf& SeriesInf::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

namespace {

SeriesInf combine(const SeriesInf& a, const SeriesInf& b, bool subtract) {
  const int top = std::max(a.top_exp(), b.top_exp());
  const int order = std::min(a.order(), b.order());
  std::vector<Scalar> c;
  for (int e = top; e >= -order; --e) {
    const Scalar x = a.coeff(e);
    const Scalar y = b.coeff(e);
    c.push_back(subtract ? Scalar(x - y) : Scalar(x + y));
  }
  return SeriesInf(top, std::move(c), order);
}

}  // namespace

SeriesInf operator+(const SeriesInf& a, const SeriesInf& b) { return combine(a, b, false); }
SeriesInf operator-(const SeriesInf& a, const SeriesInf& b) { return combine(a, b, true); }

SeriesInf operator*(const SeriesInf& a, const SeriesInf& b) {
  const int top = a.top_ + b.top_;
  const int order = std::min(a.order_ - std::max(b.top_, 0), b.order_ - std::max(a.top_, 0));
  std::vector<Scalar> c;
  for (int k = top; k >= -order; --k) {
    Scalar acc = 0;
    // a_i b_{k-i}, i from k - top_b up to top_a
    for (int i = std::max(k - b.top_, -a.order_); i <= a.top_; ++i) {
      const int j = k - i;
      if (j < -b.order_) break;
      acc += a.coeff(i) * b.coeff(j);
    }
    c.push_back(acc);
  }
  return SeriesInf(top, std::move(c), order);
}

SeriesInf operator*(const Poly& p, const SeriesInf& s) {
  if (p.is_zero()) return SeriesInf::zero(s.order_);
  const int d = p.degree();
  const int top = s.top_ + d;
  const int order = s.order_ - d;
  std::vector<Scalar> c;
  for (int k = top; k >= -order; --k) {
    Scalar acc = 0;
    for (int i = 0; i <= d; ++i) {
      const int j = k - i;
      if (j > s.top_) continue;
      if (j < -s.order_) break;
      if (p.coeffs()[static_cast<std::size_t>(i)] == 0) continue;
      acc += p.coeffs()[static_cast<std::size_t>(i)] * s.coeff(j);
    }
    c.push_back(acc);
  }
  return SeriesInf(top, std::move(c), order);
}

std::optional<int> first_mismatch(const SeriesInf& a, const SeriesInf& b) {
  const int top = std::max(a.top_, b.top_);
  const int order = std::min(a.order_, b.order_);
  for (int e = top; e >= -order; --e) {
    if (a.coeff(e) != b.coeff(e)) return e;
  }
  return std::nullopt;
}

std::string SeriesInf::to_string(int max_terms) const {
  std::ostringstream os;
  int shown = 0;
  for (int e = top_; e >= -order_ && shown < max_terms; --e) {
    const Scalar c = coeff(e);
    if (c == 0) continue;
    if (shown > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    const Scalar mag = abs(c);
    if (e == 0 || mag != 1) os << format_scalar(mag) << (e == 0 ? "" : "*");
    if (e == 1) os << "u";
    else if (e != 0) os << "u^" << e;
    ++shown;
  }
  if (shown == 0) os << "0";
  os << " + O(u^" << -order_ - 1 << ")";
  return os.str();
}

SeriesInf series_expand(const RatFunc& r, int order) {
  if (r.is_zero()) return SeriesInf::zero(order);
  const Poly& num = r.num();
  const Poly& den = r.den();
  const int a = num.degree();
  const int b = den.degree();
  const int top = a - b;
  const int len = top + order + 1;
  if (len <= 0) return SeriesInf(top, {}, order);
  // r = u^{a-b} N(w)/D(w) with w = 1/u, N(w) = sum num_{a-k} w^k, D likewise.
  const Scalar d0_inv = 1 / den.leading();
  std::vector<Scalar> s(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) {
    Scalar acc = num.coeff(a - k);
    for (int j = 1; j <= std::min(k, b); ++j) acc -= den.coeff(b - j) * s[static_cast<std::size_t>(k - j)];
    s[static_cast<std::size_t>(k)] = acc * d0_inv;
  }
  return SeriesInf(top, std::move(s), order);
}

Scalar SeriesZero::coeff(int i) const {
  if (i < 0) return 0;
  if (i > order()) throw TruncationError("Taylor coefficient above truncation");
  return coeffs[static_cast<std::size_t>(i)];
}

SeriesZero SeriesZero::times(const Poly& p) const {
  SeriesZero out;
  out.coeffs.assign(coeffs.size(), Scalar(0));
  for (int i = 0; i <= order(); ++i) {
    Scalar acc = 0;
    for (int j = 0; j <= std::min(i, p.degree()); ++j) acc += p.coeffs()[static_cast<std::size_t>(j)] * coeffs[static_cast<std::size_t>(i - j)];
    out.coeffs[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

SeriesZero invert_var(const SeriesInf& s) {
  if (s.top_exp() > 0) throw std::invalid_argument("series has positive powers of u");
  SeriesZero out;
  for (int r = 0; r <= s.order(); ++r) out.coeffs.push_back(s.coeff(-r));
  return out;
}

}  // namespace bubbles
