#include "bubbles/kauffman.hpp"

#include <algorithm>

namespace bubbles::kauffman {

KauffmanParams KauffmanParams::make(const Scalar& q, const Scalar& t) {
  if (q == 0 || q == 1 || q == -1) throw std::invalid_argument("q must not be 0, 1 or -1, got " + format_scalar(q));
  if (t == 0) throw std::invalid_argument("t must be nonzero");
  return KauffmanParams{q, t, q - 1 / q};
}

Poly KauffmanParams::quadratic() const { return Poly{Scalar(-1), Scalar(-z), Scalar(1)}; }
Poly KauffmanParams::mirror() const { return Poly{Scalar(-1), z, Scalar(1)}; }

namespace {

void require_unit_monic(const Poly& f) {
  if (!f.is_monic()) throw std::invalid_argument("expected a monic polynomial, got " + f.to_string());
  if (f.constant_term() == 0) throw std::invalid_argument("expected f(0) != 0, got " + f.to_string());
}

Scalar q_pow(const KauffmanParams& params, int e) { return scalar_pow(params.q, e); }

}  // namespace

bool sneeze_condition(const Poly& f, const KauffmanParams& params) {
  require_unit_monic(f);
  const Scalar f0 = f.constant_term();
  if (f.degree() % 2 == 0) return params.z == f0 / params.t - params.t / f0;
  return f0 == params.t || f0 == -params.t;
}

std::optional<EpsilonPair> sneeze_check(const Poly& f, const KauffmanParams& params) {
  require_unit_monic(f);
  std::optional<EpsilonPair> found;
  for (int e1 : {1, -1}) {
    for (int e2 : {1, -1}) {
      const int half = (e1 + e2) / 2;
      if (((f.degree() - half - 1) % 2 + 2) % 2 != 0) continue;
      if (f.constant_term() != e1 * q_pow(params, half) * params.t) continue;
      if (found) throw TheoryViolation("two epsilon pairs match " + f.to_string());
      found = EpsilonPair{e1, e2};
    }
  }
  if (found.has_value() != sneeze_condition(f, params)) {
    throw TheoryViolation("epsilon characterization disagrees with the sneeze condition for " + f.to_string());
  }
  return found;
}

RatFunc roo_factored(const Poly& f, const KauffmanParams& params, const EpsilonPair& eps) {
  const Poly num = Poly::linear(q_pow(params, eps.eps1)) * Poly::linear(-q_pow(params, eps.eps2));
  return RatFunc(params.t * num, params.quadratic()) * RatFunc(poly_reverse(f), f);
}

RatFunc loo_factored(const Poly& f, const KauffmanParams& params, const EpsilonPair& eps) {
  const Poly num = Poly::linear(q_pow(params, -eps.eps1)) * Poly::linear(-q_pow(params, -eps.eps2));
  return RatFunc(num * Scalar(1 / params.t), params.mirror()) * RatFunc(f, poly_reverse(f));
}

RatFunc roo_of_poly(const Poly& f, const KauffmanParams& params) {
  require_unit_monic(f);
  const Scalar& t = params.t;
  const Scalar zf0 = params.z * f.constant_term();
  const Poly pre = f.degree() % 2 == 0 ? Poly{Scalar(-zf0 - t), Scalar(0), t} : Poly{Scalar(-t), Scalar(-zf0), t};
  RatFunc out = RatFunc(pre, params.quadratic()) * RatFunc(poly_reverse(f), f);
  if (auto eps = sneeze_check(f, params); eps && roo_factored(f, params, *eps) != out) {
    throw TheoryViolation("case and factored right bubble series differ for " + f.to_string());
  }
  return out;
}

RatFunc loo_of_poly(const Poly& f, const KauffmanParams& params) {
  require_unit_monic(f);
  const Scalar tinv = 1 / params.t;
  const Scalar zf0inv = params.z / f.constant_term();
  const Poly pre =
      f.degree() % 2 == 0 ? Poly{Scalar(zf0inv - tinv), Scalar(0), tinv} : Poly{Scalar(-tinv), zf0inv, tinv};
  RatFunc out = RatFunc(pre, params.mirror()) * RatFunc(f, poly_reverse(f));
  if (auto eps = sneeze_check(f, params); eps && loo_factored(f, params, *eps) != out) {
    throw TheoryViolation("case and factored left bubble series differ for " + f.to_string());
  }
  return out;
}

DualityReport check_duality(const Poly& f, const KauffmanParams& params) {
  DualityReport rep;
  rep.sneeze = sneeze_check(f, params).has_value();
  const RatFunc roo = roo_of_poly(f, params);
  const RatFunc loo = loo_of_poly(f, params);
  rep.inversion = roo.invert_var() == loo;
  rep.product = roo * loo == RatFunc(Scalar(1));
  if (!rep.all_agree()) throw TheoryViolation("sneeze tri-equivalence fails for " + f.to_string());
  return rep;
}

Scalar KOmegaSeq::omega0(const KauffmanParams& params) { return (params.t - 1 / params.t) / params.z + 1; }

KOmegaSeq KOmegaSeq::make(std::vector<Scalar> nonneg, std::vector<Scalar> neg, const KauffmanParams& params) {
  if (nonneg.empty()) throw std::invalid_argument("bubble sequence needs omega_0");
  const Scalar expect = omega0(params);
  if (nonneg.front() != expect) {
    throw std::invalid_argument("omega_0 must equal (t - 1/t)/z + 1 = " + format_scalar(expect) + ", got " +
                                format_scalar(nonneg.front()));
  }
  return KOmegaSeq(std::move(nonneg), std::move(neg));
}

const Scalar& KOmegaSeq::at(int r) const {
  if (r >= 0) return nonneg_.at(static_cast<std::size_t>(r));
  return neg_.at(static_cast<std::size_t>(-r - 1));
}

namespace {

void require_leading(const SeriesInf& s, const Scalar& lead, const char* what) {
  for (int e = s.top_exp(); e > 0; --e) {
    if (s.coeff(e) != 0) throw std::invalid_argument(std::string(what) + " has positive powers of u");
  }
  if (s.coeff(0) != lead) {
    throw std::invalid_argument(std::string(what) + " must have constant term " + format_scalar(lead));
  }
}

SeriesInf unit_series(int order) { return SeriesInf::from_poly(Poly::constant(1), order); }

}  // namespace

KauffmanOO KauffmanOO::from_ratfunc(const RatFunc& roo, const KauffmanParams& params, int order) {
  SeriesInf r = series_expand(roo, order);
  require_leading(r, params.t, "right bubble series");
  SeriesInf l = series_expand(roo.reciprocal(), order);
  return KauffmanOO(roo, std::move(r), std::move(l));
}

KauffmanOO KauffmanOO::from_series(SeriesInf roo, const KauffmanParams& params) {
  require_leading(roo, params.t, "right bubble series");
  SeriesInf l = roo.inverse();
  return KauffmanOO(std::nullopt, std::move(roo), std::move(l));
}

KauffmanOO KauffmanOO::from_series_pair(SeriesInf roo, SeriesInf loo, const KauffmanParams& params) {
  require_leading(roo, params.t, "right bubble series");
  require_leading(loo, 1 / params.t, "left bubble series");
  return KauffmanOO(std::nullopt, std::move(roo), std::move(loo));
}

bool KauffmanOO::matches(const RatFunc& target) const {
  if (exact_) return *exact_ == target;
  return agrees(roo_, series_expand(target, roo_.order()));
}

bool KauffmanOO::inverse_pair() const {
  if (exact_) return true;
  return agrees(roo_ * loo_, unit_series(std::min(roo_.order(), loo_.order())));
}

KOmegaOO roo_from_komega(const KOmegaSeq& w, const KauffmanParams& params) {
  const Scalar& t = params.t;
  const Scalar& z = params.z;
  const int n_pos = static_cast<int>(w.nonneg().size()) - 1;
  const Poly u2m1{Scalar(-1), Scalar(0), Scalar(1)};

  const RatFunc r_const(Poly{Scalar(-1 / t), Scalar(0), Scalar(1 / t - z)}, params.quadratic());
  const RatFunc r_coef(z * u2m1, params.quadratic());
  const SeriesInf pos(0, w.nonneg(), n_pos);
  SeriesInf roo = series_expand(r_const, n_pos) + series_expand(r_coef, n_pos) * pos;

  KOmegaOO out{KauffmanOO::from_series(roo, params), true, std::nullopt};
  if (!w.neg().empty()) {
    std::vector<Scalar> down{w.at(0)};
    down.insert(down.end(), w.neg().begin(), w.neg().end());
    const int n_neg = static_cast<int>(down.size()) - 1;
    const RatFunc l_const(Poly{Scalar(-t), Scalar(0), Scalar(t + z)}, params.mirror());
    const RatFunc l_coef(-z * u2m1, params.mirror());
    SeriesInf loo = series_expand(l_const, n_neg) + series_expand(l_coef, n_neg) * SeriesInf(0, down, n_neg);
    out.oo = KauffmanOO::from_series_pair(std::move(roo), std::move(loo), params);
  }
  const SeriesInf prod = out.oo.roo() * out.oo.loo();
  for (int j = 1; j <= prod.order(); ++j) {
    if (prod.coeff(-j) != 0) {
      out.admissible = false;
      out.first_violation = j;
      break;
    }
  }
  return out;
}

KOmegaSeq komega_from_roo(const KauffmanOO& oo, const KauffmanParams& params) {
  const Scalar& t = params.t;
  const Scalar& z = params.z;
  const Poly u2m1{Scalar(-1), Scalar(0), Scalar(1)};
  const auto extract = [&](const SeriesInf& s, const Poly& quad, const Poly& pre, const Scalar& sign) {
    // sum omega u^{-r} = sign (quad s - pre) / (z (u^2 - 1))
    const SeriesInf numer = quad * s - SeriesInf::from_poly(pre, s.order() - 2);
    const SeriesInf inv = series_expand(RatFunc(Poly::constant(sign / z), u2m1), s.order());
    const SeriesInf omega = numer * inv;
    std::vector<Scalar> out;
    for (int r = 0; r <= omega.order(); ++r) out.push_back(omega.coeff(-r));
    return out;
  };
  std::vector<Scalar> pos =
      extract(oo.roo(), params.quadratic(), Poly{Scalar(-1 / t), Scalar(0), Scalar(1 / t - z)}, Scalar(1));
  std::vector<Scalar> down = extract(oo.loo(), params.mirror(), Poly{Scalar(-t), Scalar(0), Scalar(t + z)}, Scalar(-1));
  if (down.front() != pos.front()) throw TheoryViolation("left and right series disagree on omega_0");
  std::vector<Scalar> neg(down.begin() + 1, down.end());
  return KOmegaSeq::make(std::move(pos), std::move(neg), params);
}

RatFunc triangle_bubble(const Poly& m, const KauffmanParams& params) {
  require_unit_monic(m);
  const Scalar& t = params.t;
  const Scalar& z = params.z;
  const Scalar big_m = m.constant_term();
  const Poly u2m1{Scalar(-1), Scalar(0), Scalar(1)};
  const RatFunc head = RatFunc(Poly::monomial(1, 2), u2m1) - RatFunc(Scalar(1 / (t * z)));
  const Poly mpart = m.degree() % 2 == 0 ? Poly::constant(big_m) : Poly::monomial(big_m, 1);
  const RatFunc coef = RatFunc(Scalar(t / z)) - RatFunc(mpart, u2m1);
  return head + coef * RatFunc(poly_reverse(m), m);
}

namespace {

/// (1 - zu - u^2) u^d p(1/u) roo(1/u) as a Taylor series at zero.
SeriesZero hat_series(const Poly& p, const SeriesInf& roo, const KauffmanParams& params) {
  const Poly pre = Poly{Scalar(1), Scalar(-params.z), Scalar(-1)} * p.reversed(p.degree());
  return invert_var(roo).times(pre);
}

std::optional<int> first_bad_coeff(const SeriesZero& s, int from, int to) {
  for (int k = from; k <= to; ++k) {
    if (s.coeff(k) != 0) return k;
  }
  return std::nullopt;
}

}  // namespace

KHatResult try_hat_poly_k(const Poly& p, const KauffmanOO& oo, const KauffmanParams& params, int order) {
  require_unit_monic(p);
  const int d = p.degree();
  KHatResult out;
  if (oo.exact()) {
    const RatFunc& r = *oo.exact();
    const int a = r.num().degree();
    const Poly numer = Poly{Scalar(1), Scalar(-params.z), Scalar(-1)} * p.reversed(d) * r.num().reversed(a);
    auto [quot, rem] = divmod(numer, r.den().reversed(a));
    out.hat = quot;
    out.polynomial = rem.is_zero();
    if (!out.polynomial) {
      const int top = std::max(order, 1) + d + 2;
      const SeriesZero s = hat_series(p, series_expand(r, top), params);
      out.first_bad_power = first_bad_coeff(s, d + 3, top);
    }
    return out;
  }
  const SeriesZero s = hat_series(p, oo.roo(), params);
  const int top = std::min(s.order(), order + d + 2);
  if (top < d + 3) {
    throw std::invalid_argument("right bubble series order " + std::to_string(oo.order()) +
                                " is too low to certify the hat of a degree " + std::to_string(d) + " polynomial");
  }
  out.certified_order = top - d - 2;
  std::vector<Scalar> c;
  for (int k = 0; k <= d + 2; ++k) c.push_back(s.coeff(k));
  out.hat = Poly(std::move(c));
  out.first_bad_power = first_bad_coeff(s, d + 3, top);
  out.polynomial = !out.first_bad_power;
  return out;
}

Poly hat_poly_k(const Poly& p, const KauffmanOO& oo, const KauffmanParams& params, int order) {
  KHatResult r = try_hat_poly_k(p, oo, params, order);
  if (!r.polynomial) {
    throw brauer::NonPolynomialHat("hat not polynomial (inconsistent right bubble series or zero category): u^" +
                                   std::to_string(*r.first_bad_power) + " coefficient is nonzero");
  }
  return r.hat;
}

std::string to_string(KauffmanBranch b) {
  switch (b) {
    case KauffmanBranch::OddRPlusT: return "odd-R0-plus-t";
    case KauffmanBranch::OddRMinusT: return "odd-R0-minus-t";
    case KauffmanBranch::EvenRPlusT: return "even-R0-plus-t";
    case KauffmanBranch::EvenRMinusT: return "even-R0-minus-t";
  }
  return "unknown";
}

KauffmanClassification classify_kauffman(const Poly& p, const KauffmanOO& oo, const KauffmanParams& params,
                                         int order) {
  require_unit_monic(p);
  if (p.degree() < 1) throw std::invalid_argument("p must have positive degree");
  KauffmanClassification out;
  out.exact = oo.is_exact();
  out.certified_order = oo.is_exact() ? order : std::min(order, oo.order());
  out.m = Poly::constant(1);
  out.roo_canonical = RatFunc(params.t);

  const KHatResult hat = try_hat_poly_k(p, oo, params, order);
  out.p_hat = hat.hat;
  out.hat_polynomial = hat.polynomial;
  if (hat.certified_order) out.certified_order = std::min(out.certified_order, *hat.certified_order);
  if (!hat.polynomial) {
    out.diagnostics.push_back("hat not polynomial: u^" + std::to_string(*hat.first_bad_power) +
                              " coefficient of (1-zu-u^2) u^d p(1/u) roo(1/u) is nonzero");
    return out;
  }

  out.big_r = poly_gcd(params.quadratic() * p, out.p_hat);
  out.gcd_p_phat = poly_gcd(p, out.p_hat);
  const Scalar r0 = out.big_r.constant_term();
  if (r0 != params.t && r0 != -params.t) {
    out.diagnostics.push_back("R(0) = " + format_scalar(r0) + " is not +-t");
    return out;
  }
  out.r_identity_ok = oo.matches(RatFunc(params.t * poly_reverse(out.big_r), out.big_r));
  if (!out.r_identity_ok) {
    out.diagnostics.push_back("right bubble series differs from t Rcheck/R");
    return out;
  }
  out.vanishing_orders_ok = true;
  for (const Scalar& pt : {Scalar(1), Scalar(-1)}) {
    const int vp = vanishing_order(p, pt);
    if (vanishing_order(out.p_hat, pt) != vp || vanishing_order(out.big_r, pt) != vp) out.vanishing_orders_ok = false;
  }
  if (!out.vanishing_orders_ok) {
    out.diagnostics.push_back("p, p_hat and R vanish to different orders at u = 1 or u = -1");
    return out;
  }

  const bool odd = out.big_r.degree() % 2 != 0;
  const bool plus = r0 == params.t;
  Poly a;
  if (odd && plus) {
    out.branch = KauffmanBranch::OddRPlusT;
    a = Poly::constant(1);
  } else if (odd) {
    out.branch = KauffmanBranch::OddRMinusT;
    a = Poly{Scalar(-1), Scalar(0), Scalar(1)};
  } else if (plus) {
    out.branch = KauffmanBranch::EvenRPlusT;
    a = Poly::linear(-1);
  } else {
    out.branch = KauffmanBranch::EvenRMinusT;
    a = Poly::linear(1);
  }
  if (!divides(a, out.big_r) || !divides(a, out.gcd_p_phat)) {
    out.diagnostics.push_back("branch divisor " + a.to_string() + " does not divide R and gcd(p, p_hat)");
    return out;
  }
  out.r1 = exact_div(out.big_r, a);
  const Poly m = exact_div(out.gcd_p_phat, a);
  out.m = m;
  if (m.degree() < 1 || out.r1.degree() < 1) {
    out.diagnostics.push_back("minimal polynomial candidate has degree 0");
    return out;
  }
  out.eps = sneeze_check(m, params);
  if (!out.eps) {
    out.diagnostics.push_back("m = " + m.to_string() + " fails the sneeze conditions");
    return out;
  }
  out.roo_canonical = roo_of_poly(m, params);
  if (!oo.matches(out.roo_canonical)) {
    out.diagnostics.push_back("right bubble series differs from that of m = " + m.to_string());
    return out;
  }
  out.nonzero = true;
  return out;
}

std::optional<Poly> oracle_classify_k_factors(std::span<const Poly> factors, const KauffmanOO& oo,
                                              const KauffmanParams& params) {
  std::vector<std::pair<Poly, int>> groups;
  for (const auto& f : factors) {
    require_unit_monic(f);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == f; });
    if (it == groups.end()) groups.emplace_back(f, 1);
    else ++it->second;
  }
  std::vector<int> counts(groups.size(), 0);
  std::vector<Poly> survivors;
  while (true) {
    Poly f = Poly::constant(1);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (int k = 0; k < counts[i]; ++k) f *= groups[i].first;
    }
    if (f.degree() >= 1 && sneeze_check(f, params) && oo.matches(roo_of_poly(f, params))) {
      survivors.push_back(std::move(f));
    }
    std::size_t i = 0;
    while (i < groups.size() && counts[i] == groups[i].second) counts[i++] = 0;
    if (i == groups.size()) break;
    ++counts[i];
  }
  if (survivors.empty()) return std::nullopt;
  const auto best = std::max_element(survivors.begin(), survivors.end(),
                                     [](const Poly& x, const Poly& y) { return x.degree() < y.degree(); });
  for (const auto& f : survivors) {
    if (!divides(f, *best)) {
      throw TheoryViolation("theory violation: surviving divisors " + f.to_string() + " and " + best->to_string() +
                            " are incomparable");
    }
  }
  return *best;
}

std::optional<Poly> oracle_classify_k(std::span<const Scalar> roots, const KauffmanOO& oo,
                                      const KauffmanParams& params) {
  std::vector<Poly> factors;
  for (const auto& a : roots) factors.push_back(Poly::linear(a));
  return oracle_classify_k_factors(factors, oo, params);
}

namespace {

EpsilonPair require_eps(const Poly& f, const KauffmanParams& params) {
  auto eps = sneeze_check(f, params);
  if (!eps) throw std::invalid_argument(f.to_string() + " fails the sneeze conditions");
  return *eps;
}

}  // namespace

Poly h_poly(const Poly& f, const Poly& g, const KauffmanParams& params) {
  const EpsilonPair ef = require_eps(f, params);
  const EpsilonPair eg = require_eps(g, params);
  Poly h = Poly::constant(1);
  if (eg.eps1 != ef.eps1) h *= Poly::linear(q_pow(params, (eg.eps1 - ef.eps1) / 2));
  if (eg.eps2 != ef.eps2) h *= Poly::linear(-q_pow(params, (eg.eps2 - ef.eps2) / 2));
  return h;
}

BelgiumResult belgium_factor(const Poly& f, const Poly& g, const KauffmanParams& params) {
  if (!divides(f, g)) throw std::invalid_argument(f.to_string() + " does not divide " + g.to_string());
  BelgiumResult out;
  out.h = h_poly(f, g, params);
  const Poly rest = exact_div(g, f);
  if (divides(out.h, rest)) {
    out.gamma = exact_div(rest, out.h);
    out.ok = out.gamma.degree() % 2 == 0 && out.gamma.constant_term() == 1 && poly_reverse(out.gamma) == out.gamma;
  }
  if (out.ok != (roo_of_poly(g, params) == roo_of_poly(f, params))) {
    throw TheoryViolation("gamma factorization and series equality disagree for f = " + f.to_string() +
                          ", g = " + g.to_string());
  }
  return out;
}

BarImage bar_transform(const Poly& f, const KauffmanParams& params) {
  require_unit_monic(f);
  return BarImage{poly_reverse(f), KauffmanParams::make(1 / params.q, 1 / params.t)};
}

bool bar_identity_holds(const Poly& f, const KauffmanParams& params) {
  const BarImage img = bar_transform(f, params);
  return roo_of_poly(img.f, img.params) == loo_of_poly(f, params);
}

}  // namespace bubbles::kauffman
