#include "bubbles/brauer.hpp"

#include <algorithm>
#include <map>

namespace bubbles::brauer {

namespace {

const Scalar kHalf(1, 2);

// u - 1/2
Poly u_minus_half() { return Poly::linear(kHalf); }

void require_constant_one(const SeriesInf& s) {
  for (int e = s.top_exp(); e > 0; --e) {
    if (s.coeff(e) != 0) throw std::invalid_argument("bubble series has positive powers of u");
  }
  if (s.order() < 0 || s.coeff(0) != 1) throw std::invalid_argument("bubble series must have constant term 1");
}

SeriesInf one_series(int order) { return SeriesInf::from_poly(Poly::constant(1), order); }

}  // namespace

BrauerOO BrauerOO::from_ratfunc(const RatFunc& r, int order) {
  SeriesInf s = series_expand(r, order);
  require_constant_one(s);
  return BrauerOO(r, std::move(s));
}

BrauerOO BrauerOO::from_series(SeriesInf s) {
  require_constant_one(s);
  return BrauerOO(std::nullopt, std::move(s));
}

bool BrauerOO::matches(const RatFunc& target) const {
  if (exact_) return *exact_ == target;
  return agrees(series_, series_expand(target, series_.order()));
}

bool BrauerOO::grassmannian() const {
  if (exact_) return *exact_ * exact_->negate_var() == RatFunc(Scalar(1));
  return agrees(series_ * series_.negate_var(), one_series(series_.order()));
}

RatFunc oo_of_poly(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("O_f requires monic f, got " + f.to_string());
  const Poly lead = Poly(std::vector<Scalar>{-kHalf, Scalar(sign_pow(f.degree()))});
  return RatFunc(lead * f.negate_var(), u_minus_half() * f);
}

OmegaSeq omega_of_roots(std::span<const Scalar> roots, int order) {
  RootMultiset neg(roots.begin(), roots.end());
  for (auto& a : neg) a = -a;
  const Scalar s = Scalar(sign_pow(static_cast<long>(roots.size()))) / 2;
  const RatFunc prod(poly_from_roots(neg), poly_from_roots(roots));
  const RatFunc gen = RatFunc(Poly::linear(s)) * prod - RatFunc(Poly::linear(kHalf));
  const SeriesInf ser = series_expand(gen, order);
  for (int e = ser.top_exp(); e > 0; --e) {
    if (ser.coeff(e) != 0) throw TheoryViolation("bubble generating function has a u^" + std::to_string(e) + " term");
  }
  OmegaSeq w;
  for (int n = 0; n <= order; ++n) w.omega.push_back(ser.coeff(-n));
  return w;
}

BrauerOO oo_from_omega(const OmegaSeq& w) {
  // c_k = c_{k-1}/2 + omega_{k-1}
  std::vector<Scalar> c{Scalar(1)};
  Scalar prev = 0;
  for (const auto& om : w.omega) {
    prev = prev / 2 + om;
    c.push_back(prev);
  }
  return BrauerOO::from_series(SeriesInf(0, std::move(c), w.order() + 1));
}

OmegaSeq omega_from_oo(const BrauerOO& o) {
  OmegaSeq w;
  Scalar prev = 0;
  for (int k = 1; k <= o.order(); ++k) {
    const Scalar ck = o.series().coeff(-k);
    w.omega.push_back(ck - prev / 2);
    prev = ck;
  }
  return w;
}

Scalar odd_bubble_value(std::span<const Scalar> omega, int r) {
  const int top = 2 * r;
  Scalar acc = -omega[static_cast<std::size_t>(top)];
  for (int n = 0; n <= top; ++n) {
    const Scalar term = omega[static_cast<std::size_t>(n)] * omega[static_cast<std::size_t>(top - n)];
    if (n % 2 == 0) acc += term;
    else acc -= term;
  }
  return acc / 2;
}

AdmissibilityReport check_admissible(const OmegaSeq& w) {
  AdmissibilityReport rep;
  const int n = w.order();
  rep.certified_order = n;
  for (int r = 0; 2 * r + 1 <= n; ++r) {
    if (w[2 * r + 1] != odd_bubble_value(w.omega, r)) {
      rep.pass = false;
      rep.first_violation = r;
      break;
    }
  }
  const BrauerOO o = oo_from_omega(w);
  const SeriesInf prod = o.series() * o.series().negate_var();
  for (int j = 1; j <= prod.order(); ++j) {
    if (prod.coeff(-j) == 0) continue;
    if (j % 2 != 0) throw TheoryViolation("O(u)O(-u) has an odd power u^-" + std::to_string(j));
    rep.grassmannian_pass = false;
    rep.grassmannian_first_violation = j / 2;
    break;
  }
  const std::optional<int> from_grass =
      rep.grassmannian_first_violation ? std::optional<int>(*rep.grassmannian_first_violation - 1) : std::nullopt;
  if (rep.pass != rep.grassmannian_pass || rep.first_violation != from_grass) {
    throw TheoryViolation("odd-bubble recursion and O(u)O(-u) = 1 disagree");
  }
  return rep;
}

namespace {

void require_positive_monic(const Poly& m) {
  if (!m.is_monic() || m.degree() < 1) {
    throw std::invalid_argument("expected a monic polynomial of positive degree, got " + m.to_string());
  }
}

}  // namespace

WeakAdmissibilityReport check_weak_admissible(const OmegaSeq& w, const Poly& m) {
  require_positive_monic(m);
  WeakAdmissibilityReport rep;
  const int d = m.degree();
  for (int n = 0; n + d <= w.order(); ++n) {
    Scalar acc = 0;
    for (int j = 0; j <= d; ++j) acc += m.coeffs()[static_cast<std::size_t>(j)] * w[n + j];
    rep.checked_up_to = n;
    if (acc != 0) {
      rep.pass = false;
      rep.first_violation = n;
      break;
    }
  }
  return rep;
}

BrewForm brew_form(const OmegaSeq& w, const Poly& m) {
  require_positive_monic(m);
  const SeriesInf bubble(-1, w.omega, w.order() + 1);
  const SeriesInf prod = m * bubble;
  BrewForm out;
  out.polynomial = prod.polypart();
  for (int e = -1; e >= -prod.order(); --e) {
    if (prod.coeff(e) != 0) {
      out.tail_ok = false;
      out.first_bad_exponent = e;
      break;
    }
  }
  return out;
}

ExtendedOmega extend_omega(const Poly& m, std::span<const Scalar> evens, int order) {
  require_positive_monic(m);
  const int d = m.degree();
  const auto needed = static_cast<std::size_t>((d + 1) / 2);
  if (evens.size() != needed) {
    throw std::invalid_argument("expected " + std::to_string(needed) + " even-index bubble values, got " +
                                std::to_string(evens.size()));
  }
  ExtendedOmega out;
  auto& om = out.omega.omega;
  om.reserve(static_cast<std::size_t>(order) + 1);
  for (int r = 0; r <= order; ++r) {
    if (r < d) {
      om.push_back(r % 2 == 0 ? evens[static_cast<std::size_t>(r / 2)] : odd_bubble_value(om, (r - 1) / 2));
    } else {
      Scalar acc = 0;
      for (int j = 0; j < d; ++j) acc -= m.coeffs()[static_cast<std::size_t>(j)] * om[static_cast<std::size_t>(r - d + j)];
      om.push_back(acc);
    }
  }
  for (int r = 0; 2 * r + 1 <= order; ++r) {
    if (om[static_cast<std::size_t>(2 * r + 1)] != odd_bubble_value(om, r)) {
      out.consistent = false;
      out.first_violation = r;
      break;
    }
  }
  return out;
}

HatResult try_hat_poly(const Poly& g, const BrauerOO& o, int order) {
  // (-u - 1/2) g(-u)
  const Poly pre = Poly(std::vector<Scalar>{-kHalf, Scalar(-1)}) * g.negate_var();
  HatResult out;
  if (o.exact()) {
    const RatFunc neg = o.exact()->negate_var();
    auto [quot, rem] = divmod(pre * neg.num(), neg.den());
    out.hat = quot;
    out.polynomial = rem.is_zero();
    if (!out.polynomial) {
      const SeriesInf tail = series_expand(RatFunc(rem, neg.den()), std::max(order, 1));
      for (int e = -1; e >= -tail.order(); --e) {
        if (tail.coeff(e) != 0) {
          out.first_bad_power = -e;
          break;
        }
      }
    }
    return out;
  }
  const SeriesInf prod = pre * o.series().negate_var();
  const int certified = std::min(order, prod.order());
  if (certified < 1) {
    throw std::invalid_argument("bubble series order " + std::to_string(o.order()) +
                                " is too low to certify the hat of a degree " + std::to_string(g.degree()) +
                                " polynomial");
  }
  out.certified_order = certified;
  out.hat = prod.polypart();
  for (int r = 1; r <= certified; ++r) {
    if (prod.coeff(-r) != 0) {
      out.polynomial = false;
      out.first_bad_power = r;
      break;
    }
  }
  return out;
}

Poly hat_poly(const Poly& g, const BrauerOO& o, int order) {
  HatResult r = try_hat_poly(g, o, order);
  if (!r.polynomial) {
    throw NonPolynomialHat("hat not polynomial (inconsistent O or zero category): u^-" +
                           std::to_string(*r.first_bad_power) + " coefficient is nonzero");
  }
  return r.hat;
}

std::string to_string(BrauerBranch b) {
  return b == BrauerBranch::QOddDivideByU ? "Q-odd-divide-by-u" : "Q-even-or-default";
}

BrauerClassification classify_brauer(const Poly& p, const BrauerOO& o_in, int order) {
  if (!p.is_monic()) throw std::invalid_argument("p must be monic, got " + p.to_string());
  if (p.degree() < 1) throw std::invalid_argument("p must have positive degree");

  const BrauerOO o = o_in.is_exact() || o_in.order() <= order
                         ? o_in
                         : BrauerOO::from_series(o_in.series().truncate(order));
  BrauerClassification out;
  out.exact = o.is_exact();
  out.certified_order = o.is_exact() ? order : o.order();
  out.m = Poly::constant(1);
  out.oo_canonical = RatFunc(Scalar(1));

  out.grassmannian_ok = o.grassmannian();
  if (!out.grassmannian_ok) {
    out.diagnostics.push_back("O(u)O(-u) != 1: the quotient is the zero category");
    return out;
  }

  const HatResult hat = try_hat_poly(p, o, order);
  out.p_hat = hat.hat;
  out.hat_polynomial = hat.polynomial;
  if (hat.certified_order) out.certified_order = std::min(out.certified_order, *hat.certified_order);
  if (!hat.polynomial) {
    out.diagnostics.push_back("hat not polynomial: u^-" + std::to_string(*hat.first_bad_power) +
                              " coefficient of (-u-1/2)p(-u)O(-u) is nonzero");
    return out;
  }

  out.q_poly = poly_gcd(u_minus_half() * p, out.p_hat);
  out.gcd_p_phat = poly_gcd(p, out.p_hat);
  Poly m = out.gcd_p_phat;
  if (out.q_poly.degree() % 2 != 0) {
    out.branch = BrauerBranch::QOddDivideByU;
    const Poly u = Poly::monomial(1, 1);
    if (!divides(u, m)) {
      out.diagnostics.push_back("deg Q is odd but u does not divide gcd(p, p_hat)");
      return out;
    }
    m = exact_div(m, u);
  }
  out.m = m;
  out.oo_canonical = oo_of_poly(m);
  if (m.degree() < 1) {
    out.diagnostics.push_back("minimal polynomial candidate has degree 0");
    return out;
  }
  if (!o.matches(out.oo_canonical)) {
    out.diagnostics.push_back("O differs from O_m for m = " + m.to_string());
    return out;
  }
  out.nonzero = true;
  return out;
}

namespace {

struct FactorGroup {
  Poly factor;
  int multiplicity;
};

std::vector<FactorGroup> group_factors(std::span<const Poly> factors) {
  std::vector<FactorGroup> groups;
  for (const auto& f : factors) {
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("factors must be monic of positive degree");
    auto it = std::find_if(groups.begin(), groups.end(), [&](const FactorGroup& g) { return g.factor == f; });
    if (it == groups.end()) groups.push_back({f, 1});
    else ++it->multiplicity;
  }
  return groups;
}

}  // namespace

std::optional<Poly> oracle_classify_factors(std::span<const Poly> factors, const BrauerOO& o) {
  const auto groups = group_factors(factors);
  std::vector<int> counts(groups.size(), 0);
  std::vector<Poly> matches;
  while (true) {
    Poly f = Poly::constant(1);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (int k = 0; k < counts[i]; ++k) f *= groups[i].factor;
    }
    if (f.degree() >= 1 && o.matches(oo_of_poly(f))) matches.push_back(std::move(f));
    std::size_t i = 0;
    while (i < groups.size() && counts[i] == groups[i].multiplicity) counts[i++] = 0;
    if (i == groups.size()) break;
    ++counts[i];
  }
  if (matches.empty()) return std::nullopt;
  const auto best = std::max_element(matches.begin(), matches.end(),
                                     [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  for (const auto& f : matches) {
    if (!divides(f, *best)) {
      throw TheoryViolation("theory violation: matching divisors " + f.to_string() + " and " + best->to_string() +
                            " are incomparable");
    }
  }
  return *best;
}

std::optional<Poly> oracle_classify(std::span<const Scalar> roots, const BrauerOO& o) {
  std::vector<Poly> factors;
  for (const auto& a : roots) factors.push_back(Poly::linear(a));
  return oracle_classify_factors(factors, o);
}

AlgebraMinPoly algebra_min_poly(const Poly& p, const OmegaSeq& w, int order) {
  AlgebraMinPoly out;
  const BrauerOO o = oo_from_omega(w);
  out.classification = classify_brauer(p, o, order);
  if (out.classification.nonzero) out.f = out.classification.m;
  out.goodman = out.f && *out.f == p;
  if (out.goodman != o.matches(oo_of_poly(p))) {
    throw TheoryViolation("f = p disagrees with O_Omega = O_p");
  }
  return out;
}

}  // namespace bubbles::brauer
