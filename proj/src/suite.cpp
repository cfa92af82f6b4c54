#include "bubbles/suite.hpp"

#include "bubbles/brauer.hpp"
#include "bubbles/kauffman.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace bubbles::suite {

namespace br = bubbles::brauer;
namespace ka = bubbles::kauffman;

namespace {

using Rng = std::mt19937_64;

Scalar random_scalar(Rng& rng, int num_bound = 5, int den_bound = 4) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Scalar x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

Poly random_poly(Rng& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::vector<Scalar> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_scalar(rng);
  return Poly(std::move(c));
}

Poly random_monic(Rng& rng, int min_degree, int max_degree) {
  std::uniform_int_distribution<int> deg(min_degree, max_degree);
  std::vector<Scalar> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = random_scalar(rng);
  c.back() = 1;
  return Poly(std::move(c));
}

RootMultiset random_roots(Rng& rng, std::span<const Scalar> pool, int min_size, int max_size) {
  std::uniform_int_distribution<int> size(min_size, max_size);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  RootMultiset out(static_cast<std::size_t>(size(rng)));
  for (auto& a : out) a = pool[pick(rng)];
  return out;
}

/// All multisets of size <= max_size from pool, each as a sorted root list.
std::vector<RootMultiset> multisets(std::span<const Scalar> pool, int max_size, int max_mult) {
  std::vector<RootMultiset> out{{}};
  std::function<void(std::size_t, RootMultiset&)> rec = [&](std::size_t start, RootMultiset& cur) {
    for (std::size_t i = start; i < pool.size(); ++i) {
      const auto mult = std::count(cur.begin(), cur.end(), pool[i]);
      if (static_cast<int>(cur.size()) >= max_size || mult >= max_mult) continue;
      cur.push_back(pool[i]);
      out.push_back(cur);
      rec(i, cur);
      cur.pop_back();
    }
  };
  RootMultiset cur;
  rec(0, cur);
  return out;
}

/// Divisors of prod (u - a) over sub-multisets of roots.
std::vector<Poly> split_divisors(const RootMultiset& roots) {
  std::vector<Poly> out;
  const std::size_t n = roots.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RootMultiset sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(roots[i]);
    }
    Poly f = poly_from_roots(sub);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(std::move(f));
  }
  return out;
}

const std::vector<ka::KauffmanParams>& kauffman_samples() {
  static const std::vector<ka::KauffmanParams> samples{
      ka::KauffmanParams::make(2, 3), ka::KauffmanParams::make(3, Scalar(1, 2)),
      ka::KauffmanParams::make(Scalar(1, 2), -2)};
  return samples;
}

/// Roots whose products hit the sneeze constants for the given parameters.
std::vector<Scalar> kauffman_pool(const ka::KauffmanParams& p) {
  std::vector<Scalar> base{1, 2, Scalar(1, 2), p.q, 1 / p.q, p.t, p.q * p.t, p.t / p.q};
  std::vector<Scalar> out;
  for (const auto& x : base) {
    for (const Scalar& y : {x, Scalar(-x)}) {
      if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
  }
  return out;
}

/// Monic split f of degree 1..max_degree over the pool passing the sneeze check.
std::vector<RootMultiset> sneeze_root_sets(const ka::KauffmanParams& p, int max_degree) {
  std::vector<RootMultiset> out;
  for (auto& roots : multisets(kauffman_pool(p), max_degree, 2)) {
    if (roots.empty()) continue;
    if (ka::sneeze_check(poly_from_roots(roots), p)) out.push_back(std::move(roots));
  }
  return out;
}

struct Tally {
  BatteryResult result;
  void check(bool ok, const std::string& what) {
    ++result.cases;
    if (!ok && result.pass) {
      result.pass = false;
      result.detail = what;
    }
  }
};

using Battery = std::function<BatteryResult(const Config&)>;

BatteryResult field_axioms(const Config&) {
  Tally t;
  Rng rng(101);
  for (int i = 0; i < 300; ++i) {
    const Scalar a = random_scalar(rng, 50, 30), b = random_scalar(rng, 50, 30), c = random_scalar(rng, 50, 30);
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a + b == b + a && a * b == b * a && a + 0 == a && a * 1 == a && a - a == 0;
    if (a != 0) ok = ok && a * (1 / a) == 1;
    t.check(ok, "field axiom failed for " + a.get_str() + ", " + b.get_str() + ", " + c.get_str());
  }
  return t.result;
}

BatteryResult gcd_divides(const Config&) {
  Tally t;
  Rng rng(102);
  for (int i = 0; i < 200; ++i) {
    const Poly common = random_monic(rng, 0, 2);
    const Poly a = random_poly(rng, 3) * common;
    const Poly b = random_poly(rng, 3) * common;
    if (a.is_zero() && b.is_zero()) continue;
    const Poly g = poly_gcd(a, b);
    const bool ok = g.is_monic() && divides(g, a) && divides(g, b) && divides(common, g) &&
                    poly_gcd(exact_div(a, g), exact_div(b, g)).degree() <= 0;
    t.check(ok, "gcd contract failed for " + a.to_string() + ", " + b.to_string());
  }
  return t.result;
}

RatFunc random_ratfunc(Rng& rng) {
  Poly den = random_monic(rng, 0, 3);
  return RatFunc(random_poly(rng, 3), den);
}

BatteryResult series_ring_hom(const Config& cfg) {
  Tally t;
  Rng rng(103);
  for (int i = 0; i < 80; ++i) {
    const RatFunc a = random_ratfunc(rng);
    const RatFunc b = random_ratfunc(rng);
    const int n = cfg.order;
    const SeriesInf sa = series_expand(a, n + 8);
    const SeriesInf sb = series_expand(b, n + 8);
    bool ok = agrees(series_expand(a + b, n), sa + sb);
    if (!a.is_zero() && !b.is_zero()) ok = ok && agrees(series_expand(a * b, n), (sa * sb).truncate(n));
    const SeriesInf back = a.den() * series_expand(a, n + a.den().degree());
    ok = ok && agrees(back, SeriesInf::from_poly(a.num(), n));
    t.check(ok, "series expansion is not a ring map on " + a.to_string() + ", " + b.to_string());
  }
  return t.result;
}

BatteryResult reverse_involution(const Config&) {
  Tally t;
  Rng rng(104);
  for (int i = 0; i < 200; ++i) {
    const Poly f = random_monic(rng, 0, 6);
    if (f.constant_term() == 0) continue;
    const Poly r = poly_reverse(f);
    t.check(r.is_monic() && r.constant_term() == 1 / f.constant_term() && poly_reverse(r) == f,
            "reverse is not an involution on " + f.to_string());
  }
  return t.result;
}

BatteryResult grassmannian_exact(const Config&) {
  Tally t;
  Rng rng(201);
  for (int i = 0; i < 200; ++i) {
    const Poly f = random_monic(rng, 0, 6);
    const RatFunc o = br::oo_of_poly(f);
    t.check(o * o.negate_var() == RatFunc(Scalar(1)), "O_f(u) O_f(-u) != 1 for f = " + f.to_string());
  }
  return t.result;
}

BatteryResult omega_admissible(const Config& cfg) {
  Tally t;
  Rng rng(202);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Scalar(1, 2), Scalar(-3, 2)};
  for (int i = 0; i < 120; ++i) {
    const RootMultiset roots = random_roots(rng, pool, 0, 5);
    br::OmegaSeq w = br::omega_of_roots(roots, cfg.order);
    if (cfg.corrupt && i == 7) w.omega[1] += 1;
    const auto adm = br::check_admissible(w);
    bool ok = adm.pass;
    const Poly m = poly_from_roots(roots);
    if (m.degree() >= 1) ok = ok && br::check_weak_admissible(w, m).pass;
    t.check(ok, "bubble values of a root multiset of size " + std::to_string(roots.size()) + " are not admissible");
  }
  return t.result;
}

BatteryResult weak_vs_brew(const Config& cfg) {
  Tally t;
  Rng rng(203);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Scalar(1, 2)};
  int passing = 0;
  for (int i = 0; i < 300; ++i) {
    const RootMultiset roots = random_roots(rng, pool, 1, 4);
    const Poly m = poly_from_roots(roots);
    br::OmegaSeq w = br::omega_of_roots(roots, cfg.order);
    if (i % 3 == 1) w.omega[static_cast<std::size_t>(i % (cfg.order + 1))] += random_scalar(rng, 3, 3) + 7;
    if (i % 3 == 2) w = br::omega_of_roots(random_roots(rng, pool, 0, 4), cfg.order);
    const bool weak = br::check_weak_admissible(w, m).pass;
    const bool brew = br::brew_form(w, m).tail_ok;
    passing += weak ? 1 : 0;
    t.check(weak == brew, "weak admissibility and brew form disagree for m = " + m.to_string());
  }
  t.check(passing > 0 && passing < 300, "weak admissibility sample is one-sided");
  return t.result;
}

BatteryResult classify_self(const Config& cfg) {
  Tally t;
  Rng rng(204);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Scalar(1, 2), Scalar(-3, 2)};
  for (int i = 0; i < 60; ++i) {
    const Poly m = poly_from_roots(random_roots(rng, pool, 1, 5));
    const auto exact = br::classify_brauer(m, br::BrauerOO::from_ratfunc(br::oo_of_poly(m), cfg.order), cfg.order);
    const auto series = br::classify_brauer(
        m, br::BrauerOO::from_series(series_expand(br::oo_of_poly(m), cfg.order)), cfg.order);
    t.check(exact.nonzero && exact.m == m && series.nonzero && series.m == m,
            "classification of (m, O_m) does not return m = " + m.to_string());
  }
  return t.result;
}

BatteryResult classify_vs_oracle(const Config& cfg) {
  Tally t;
  const std::vector<Scalar> pool{0, 1, -1, 2};
  for (const auto& roots : multisets(pool, 4, 2)) {
    if (roots.empty()) continue;
    const Poly p = poly_from_roots(roots);
    std::vector<Poly> targets = split_divisors(roots);
    targets.push_back(Poly::linear(3));
    for (const auto& f : targets) {
      const auto oo = br::BrauerOO::from_ratfunc(br::oo_of_poly(f), cfg.order);
      const auto c = br::classify_brauer(p, oo, cfg.order);
      const auto o = br::oracle_classify(roots, oo);
      t.check(c.nonzero ? (o && *o == c.m) : !o,
              "classification and oracle disagree for p = " + p.to_string() + ", f = " + f.to_string());
    }
  }
  return t.result;
}

BatteryResult hat_factorization(const Config& cfg) {
  Tally t;
  Rng rng(206);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Scalar(1, 2)};
  for (int i = 0; i < 60; ++i) {
    const Poly m = poly_from_roots(random_roots(rng, pool, 1, 5));
    const Poly hat = br::hat_poly(m, br::BrauerOO::from_ratfunc(br::oo_of_poly(m), cfg.order), cfg.order);
    const Poly expect = Poly{Scalar(-1, 2), Scalar(sign_pow(m.degree() + 1))} * m;
    t.check(hat == expect, "hat of m = " + m.to_string() + " is not ((-1)^{d+1}u - 1/2) m");
  }
  return t.result;
}

BatteryResult extend_roundtrip(const Config& cfg) {
  Tally t;
  Rng rng(207);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Scalar(1, 2)};
  for (int i = 0; i < 60; ++i) {
    const RootMultiset roots = random_roots(rng, pool, 1, 5);
    const Poly m = poly_from_roots(roots);
    const br::OmegaSeq w = br::omega_of_roots(roots, cfg.order);
    std::vector<Scalar> evens;
    for (int r = 0; r < m.degree(); r += 2) evens.push_back(w[r]);
    const auto ext = br::extend_omega(m, evens, cfg.order);
    t.check(ext.consistent && ext.omega == w, "extension does not reproduce the bubbles of " + m.to_string());
  }
  return t.result;
}

BatteryResult tri_equivalence(const Config&) {
  Tally t;
  for (const auto& p : kauffman_samples()) {
    for (const auto& roots : multisets(kauffman_pool(p), 3, 2)) {
      if (roots.empty()) continue;
      const Poly f = poly_from_roots(roots);
      const auto rep = ka::check_duality(f, p);
      t.check(rep.all_agree(), "sneeze conditions disagree for " + f.to_string());
    }
  }
  return t.result;
}

BatteryResult case_vs_factored(const Config&) {
  Tally t;
  for (const auto& p : kauffman_samples()) {
    for (const auto& roots : sneeze_root_sets(p, 3)) {
      const Poly f = poly_from_roots(roots);
      const auto eps = *ka::sneeze_check(f, p);
      t.check(ka::roo_of_poly(f, p) == ka::roo_factored(f, p, eps) &&
                  ka::loo_of_poly(f, p) == ka::loo_factored(f, p, eps),
              "case and factored forms differ for " + f.to_string());
    }
  }
  return t.result;
}

BatteryResult h_ratio(const Config&) {
  Tally t;
  for (const auto& p : kauffman_samples()) {
    const auto sets = sneeze_root_sets(p, 2);
    for (const auto& rf : sets) {
      for (const auto& rg : sets) {
        const Poly f = poly_from_roots(rf);
        const Poly g = poly_from_roots(rg);
        const auto ef = *ka::sneeze_check(f, p);
        const auto eg = *ka::sneeze_check(g, p);
        const Poly h = ka::h_poly(f, g, p);
        const auto qp = [&](int e) { return scalar_pow(p.q, e); };
        const RatFunc lhs(h.degree() == 0 ? h : poly_reverse(h), h);
        const RatFunc rhs(Poly::linear(qp(ef.eps1)) * Poly::linear(-qp(ef.eps2)),
                          Poly::linear(qp(eg.eps1)) * Poly::linear(-qp(eg.eps2)));
        t.check(lhs == rhs, "H ratio fails for f = " + f.to_string() + ", g = " + g.to_string());
      }
    }
  }
  return t.result;
}

BatteryResult kauffman_classify_self(const Config& cfg) {
  Tally t;
  for (const auto& p : kauffman_samples()) {
    for (const auto& roots : sneeze_root_sets(p, 4)) {
      const Poly m = poly_from_roots(roots);
      const auto oo = ka::KauffmanOO::from_ratfunc(ka::roo_of_poly(m, p), p, cfg.order);
      const auto c = ka::classify_kauffman(m, oo, p, cfg.order);
      t.check(c.nonzero && c.m == m, "classification of (m, roo_m) does not return m = " + m.to_string());
    }
  }
  return t.result;
}

BatteryResult kauffman_vs_oracle(const Config& cfg) {
  Tally t;
  for (const auto& p : kauffman_samples()) {
    const auto targets = sneeze_root_sets(p, 2);
    std::vector<Scalar> pool = kauffman_pool(p);
    pool.resize(std::min<std::size_t>(pool.size(), 8));
    for (const auto& roots : multisets(pool, 3, 2)) {
      if (roots.empty()) continue;
      const Poly poly = poly_from_roots(roots);
      for (const auto& tr : targets) {
        const auto oo = ka::KauffmanOO::from_ratfunc(ka::roo_of_poly(poly_from_roots(tr), p), p, cfg.order);
        const auto c = ka::classify_kauffman(poly, oo, p, cfg.order);
        const auto o = ka::oracle_classify_k(roots, oo, p);
        t.check(c.nonzero ? (o && *o == c.m) : !o,
                "classification and oracle disagree for p = " + poly.to_string());
        if (c.nonzero) {
          const Poly rc = poly_reverse(c.big_r);
          bool orders = true;
          for (const Scalar& pt : {Scalar(1), Scalar(-1)}) {
            const int v = vanishing_order(poly, pt);
            orders = orders && vanishing_order(c.p_hat, pt) == v && vanishing_order(c.big_r, pt) == v;
          }
          t.check(oo.matches(RatFunc(p.t * rc, c.big_r)) && (c.big_r.constant_term() == p.t ||
                                                              c.big_r.constant_term() == -p.t) && orders,
                  "R identity or vanishing orders fail for p = " + poly.to_string());
        }
      }
    }
  }
  return t.result;
}

BatteryResult bar_involution(const Config&) {
  Tally t;
  for (const auto& p : kauffman_samples()) {
    for (const auto& roots : multisets(kauffman_pool(p), 3, 1)) {
      if (roots.empty()) continue;
      const Poly f = poly_from_roots(roots);
      const auto img = ka::bar_transform(f, p);
      const auto back = ka::bar_transform(img.f, img.params);
      t.check(back.f == f && back.params == p && img.params.z == -p.z && ka::bar_identity_holds(f, p),
              "bar involution fails for " + f.to_string());
    }
  }
  return t.result;
}

struct Entry {
  const char* name;
  Battery run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list{
      {"exactmath.field_axioms", field_axioms},
      {"exactmath.gcd_divides", gcd_divides},
      {"exactmath.series_ring_hom", series_ring_hom},
      {"exactmath.reverse_involution", reverse_involution},
      {"brauer.grassmannian_exact", grassmannian_exact},
      {"brauer.omega_admissible", omega_admissible},
      {"brauer.weak_vs_brew", weak_vs_brew},
      {"brauer.classify_self", classify_self},
      {"brauer.classify_vs_oracle", classify_vs_oracle},
      {"brauer.hat_factorization", hat_factorization},
      {"brauer.extend_roundtrip", extend_roundtrip},
      {"kauffman.tri_equivalence", tri_equivalence},
      {"kauffman.case_vs_factored", case_vs_factored},
      {"kauffman.h_ratio", h_ratio},
      {"kauffman.classify_self", kauffman_classify_self},
      {"kauffman.classify_vs_oracle", kauffman_vs_oracle},
      {"kauffman.bar_involution", bar_involution},
  };
  return list;
}

}  // namespace

std::vector<std::string> battery_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.emplace_back(e.name);
  return out;
}

std::vector<BatteryResult> run_all(const Config& config) {
  const auto& list = entries();
  std::vector<BatteryResult> results(list.size());
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < list.size(); i = next++) {
      try {
        results[i] = list[i].run(config);
      } catch (const std::exception& e) {
        results[i] = BatteryResult{"", false, 0, std::string("exception: ") + e.what()};
      }
      results[i].name = list[i].name;
    }
  };
  unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n = std::min<unsigned>(n, static_cast<unsigned>(list.size()));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace bubbles::suite
