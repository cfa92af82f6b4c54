#include "bubbles/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace bubbles {

Poly::Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly(std::vector<Scalar>{c}); }

Poly Poly::monomial(const Scalar& c, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Scalar> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = c;
  return Poly(std::move(coeffs));
}

Poly Poly::linear(const Scalar& root) { return Poly(std::vector<Scalar>{-root, 1}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Scalar& Poly::leading() const {
  if (is_zero()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
  Poly out = *this;
  const Scalar inv = 1 / leading();
  for (auto& c : out.coeffs_) c *= inv;
  return out;
}

Poly Poly::negate_var() const {
  Poly out = *this;
  for (std::size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

Poly Poly::reversed(int n) const {
  if (n < degree()) throw std::invalid_argument("reversal length below degree");
  std::vector<Scalar> out(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(n - i)] = coeffs_[static_cast<std::size_t>(i)];
  return Poly(std::move(out));
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Scalar> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Scalar mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      os << format_scalar(mag);
      if (i > 0) os << '*';
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const Scalar inv_lead = 1 / b.leading();
  const int db = b.degree();
  for (int k = a.degree() - db; k >= 0; --k) {
    const Scalar c = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw std::domain_error("(" + b.to_string() + ") does not divide (" + a.to_string() + ")");
  }
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd undefined");
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Poly x = a.monic();
  Poly y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.is_zero() ? Poly{} : r.monic();
  }
  return x;
}

Poly poly_from_roots(std::span<const Scalar> roots) {
  Poly out = Poly::constant(1);
  for (const auto& a : roots) out *= Poly::linear(a);
  return out;
}

Poly poly_reverse(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("reverse requires a monic polynomial, got " + f.to_string());
  const Scalar f0 = f.constant_term();
  if (f0 == 0) throw std::invalid_argument("reverse requires f(0) != 0, got " + f.to_string());
  return f.reversed(f.degree()) * Scalar(1 / f0);
}

int vanishing_order(const Poly& f, const Scalar& root) {
  if (f.is_zero()) throw std::domain_error("vanishing order of the zero polynomial");
  int order = 0;
  Poly g = f;
  const Poly lin = Poly::linear(root);
  while (g.degree() >= 1 && g(root) == 0) {
    g = exact_div(g, lin);
    ++order;
  }
  return order;
}

}  // namespace bubbles
