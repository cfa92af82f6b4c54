#include "bubbles/kauffman.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace bubbles;
using namespace bubbles::kauffman;
using testing::Q;
using testing::from_roots;

namespace {

KauffmanParams p23() { return KauffmanParams::make(2, 3); }

KauffmanOO exact_roo(const Poly& f, const KauffmanParams& params, int order = 64) {
  return KauffmanOO::from_ratfunc(roo_of_poly(f, params), params, order);
}

std::vector<KauffmanParams> samples() {
  return {KauffmanParams::make(2, 3), KauffmanParams::make(3, Q("1/2")), KauffmanParams::make(Q("1/2"), -2)};
}

/// Sneeze-passing polynomials of degree <= 3 built from roots in a pool.
std::vector<Poly> sneeze_passing(const KauffmanParams& params, int max_degree) {
  const Scalar& q = params.q;
  const Scalar& t = params.t;
  const std::vector<Scalar> base{1, 2, Q("1/2"), q, 1 / q, t, q * t, t / q, 1 / t};
  std::vector<Scalar> pool;
  for (const auto& a : base) {
    for (const Scalar& s : {a, Scalar(-a)}) {
      if (std::find(pool.begin(), pool.end(), s) == pool.end()) pool.push_back(s);
    }
  }
  std::vector<Poly> out;
  std::vector<std::vector<Scalar>> level{{}};
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<std::vector<Scalar>> next;
    for (const auto& s : level) {
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!s.empty() && std::find(pool.begin(), pool.end(), s.back()) - pool.begin() > static_cast<long>(i)) continue;
        auto r = s;
        r.push_back(pool[i]);
        next.push_back(r);
        const Poly f = poly_from_roots(r);
        if (sneeze_check(f, params)) out.push_back(f);
      }
    }
    level = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("params") {
  const auto p = p23();
  CHECK(p.z == Q("3/2"));
  CHECK(p.quadratic() == Poly::linear(2) * Poly::linear(Q("-1/2")));
  CHECK(p.mirror() == Poly::linear(-2) * Poly::linear(Q("1/2")));
  CHECK_THROWS_AS(KauffmanParams::make(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(KauffmanParams::make(2, 0), std::invalid_argument);
}

TEST_CASE("sneeze_check epsilon table") {
  const auto p = p23();
  CHECK(sneeze_check(Poly::linear(3), p) == EpsilonPair{-1, 1});
  CHECK(sneeze_check(Poly::linear(-3), p) == EpsilonPair{1, -1});
  CHECK(sneeze_check(from_roots({1, 6}), p) == EpsilonPair{1, 1});
  CHECK(sneeze_check(from_roots({1, Q("-3/2")}), p) == EpsilonPair{-1, -1});
  CHECK_FALSE(sneeze_check(Poly{Scalar(1), Scalar(0), Scalar(1)}, p));
  CHECK_FALSE(sneeze_check(Poly::linear(2), p));
  CHECK_THROWS_AS(sneeze_check(Poly::monomial(1, 1), p), std::invalid_argument);
  CHECK_THROWS_AS(sneeze_check(Poly{Scalar(1), Scalar(2)}, p), std::invalid_argument);
}

TEST_CASE("epsilon pair resolves the case table on every sample") {
  for (const auto& params : samples()) {
    for (const Poly& f : sneeze_passing(params, 3)) {
      const auto eps = *sneeze_check(f, params);
      const Scalar f0 = f.constant_term();
      const bool odd = f.degree() % 2 == 1;
      // (1,1): even, qt. (-1,-1): even, -t/q. (1,-1): odd, t. (-1,1): odd, -t.
      if (eps == EpsilonPair{1, 1}) CHECK((!odd && f0 == params.q * params.t));
      if (eps == EpsilonPair{-1, -1}) CHECK((!odd && f0 == -params.t / params.q));
      if (eps == EpsilonPair{1, -1}) CHECK((odd && f0 == params.t));
      if (eps == EpsilonPair{-1, 1}) CHECK((odd && f0 == -params.t));
    }
  }
}

TEST_CASE("roo_of_poly closed form for f = u - t") {
  const auto p = p23();
  const Scalar& t = p.t;
  const Scalar& z = p.z;
  const RatFunc expect =
      RatFunc(Poly{Scalar(-t), z * t, t}, p.quadratic()) * RatFunc(Poly::linear(1 / t), Poly::linear(t));
  CHECK(roo_of_poly(Poly::linear(t), p) == expect);
  const SeriesInf r = series_expand(roo_of_poly(Poly::linear(t), p), 10);
  const SeriesInf l = series_expand(loo_of_poly(Poly::linear(t), p), 10);
  CHECK(r.coeff(0) == t);
  CHECK(l.coeff(0) == 1 / t);
  CHECK(r.top_exp() <= 0);
  CHECK(l.top_exp() <= 0);
}

TEST_CASE("case-split and factored forms agree") {
  const auto p = p23();
  const Poly f = from_roots({1, 6});
  CHECK(roo_of_poly(f, p) == roo_factored(f, p, EpsilonPair{1, 1}));
  CHECK(loo_of_poly(f, p) == loo_factored(f, p, EpsilonPair{1, 1}));
  for (const auto& params : samples()) {
    for (const Poly& f2 : sneeze_passing(params, 3)) {
      const auto eps = *sneeze_check(f2, params);
      CHECK(roo_of_poly(f2, params) == roo_factored(f2, params, eps));
      CHECK(loo_of_poly(f2, params) == loo_factored(f2, params, eps));
    }
  }
}

TEST_CASE("check_duality examples") {
  const auto p = p23();
  const auto a = check_duality(Poly::linear(3), p);
  CHECK((a.sneeze && a.inversion && a.product));
  const auto b = check_duality(Poly{Scalar(1), Scalar(0), Scalar(1)}, p);
  CHECK_FALSE(b.sneeze);
  CHECK_FALSE(b.inversion);
  CHECK_FALSE(b.product);
  const RatFunc prod = roo_of_poly(Poly{Scalar(1), Scalar(0), Scalar(1)}, p) * loo_of_poly(Poly{Scalar(1), Scalar(0), Scalar(1)}, p);
  CHECK(prod != RatFunc(Scalar(1)));
  const auto c = check_duality(from_roots({1, 6}), p);
  CHECK((c.sneeze && c.inversion && c.product));
}

TEST_CASE("tri-equivalence on random f") {
  std::mt19937_64 rng(31);
  int passing = 0;
  int failing = 0;
  for (const auto& params : samples()) {
    for (int i = 0; i < 60; ++i) {
      Poly f = testing::rand_poly(rng, 3, true);
      if (f.degree() < 1 || f.constant_term() == 0) continue;
      const auto rep = check_duality(f, params);
      CHECK(rep.all_agree());
      (rep.sneeze ? passing : failing)++;
    }
    for (const Poly& f : sneeze_passing(params, 2)) {
      const auto rep = check_duality(f, params);
      CHECK((rep.sneeze && rep.inversion && rep.product));
      ++passing;
    }
  }
  CHECK(passing > 0);
  CHECK(failing > 0);
}

TEST_CASE("KOmegaSeq enforces omega_0") {
  const auto p = p23();
  const Scalar w0 = KOmegaSeq::omega0(p);
  CHECK(w0 == (p.t - 1 / p.t) / p.z + 1);
  CHECK(w0 == Q("25/9"));
  const auto w = KOmegaSeq::make({w0, Scalar(1)}, {Scalar(5)}, p);
  CHECK(w.at(1) == 1);
  CHECK(w.at(-1) == 5);
  CHECK_THROWS_AS(KOmegaSeq::make({Scalar(1)}, {}, p), std::invalid_argument);
  CHECK_THROWS_AS(KOmegaSeq::make({}, {}, p), std::invalid_argument);
}

TEST_CASE("roo_from_komega constant term is t") {
  const auto p = p23();
  std::mt19937_64 rng(32);
  std::vector<Scalar> w{KOmegaSeq::omega0(p)};
  for (int r = 1; r <= 20; ++r) w.push_back(testing::rand_q(rng));
  const auto oo = roo_from_komega(KOmegaSeq::make(w, {}, p), p);
  CHECK(oo.oo.roo().coeff(0) == p.t);
  CHECK(oo.oo.loo().coeff(0) == 1 / p.t);
  const auto back = komega_from_roo(oo.oo, p);
  for (int r = 0; r <= 15; ++r) CHECK(back.at(r) == w[static_cast<std::size_t>(r)]);
}

TEST_CASE("triangle bubble of m reproduces the right bubble series of m") {
  for (const auto& params : samples()) {
    for (const Poly& m : sneeze_passing(params, 3)) {
      const SeriesInf tri = series_expand(triangle_bubble(m, params), 40);
      CHECK(tri.top_exp() <= 0);
      std::vector<Scalar> w;
      for (int r = 0; r <= 40; ++r) w.push_back(tri.coeff(-r));
      CHECK(w.front() == KOmegaSeq::omega0(params));
      const auto oo = roo_from_komega(KOmegaSeq::make(w, {}, params), params);
      CHECK(oo.oo.matches(roo_of_poly(m, params)));
      CHECK(oo.admissible);
    }
  }
}

TEST_CASE("left bubble series from negative omega") {
  const auto p = p23();
  const Poly m = Poly::linear(3);
  const auto full = komega_from_roo(KauffmanOO::from_series_pair(series_expand(roo_of_poly(m, p), 30),
                                                                 series_expand(loo_of_poly(m, p), 30), p),
                                    p);
  const auto oo = roo_from_komega(full, p);
  CHECK(oo.admissible);
  CHECK(agrees(oo.oo.loo(), series_expand(loo_of_poly(m, p), 30)));

  // corrupt one negative bubble: roo loo = 1 breaks
  std::vector<Scalar> neg = full.neg();
  neg[2] += 1;
  const auto bad = roo_from_komega(KOmegaSeq::make(full.nonneg(), neg, p), p);
  CHECK_FALSE(bad.admissible);
  CHECK(bad.first_violation);
}

TEST_CASE("hat_poly_k examples") {
  const auto p = p23();
  const Poly f = Poly::linear(3);
  const Poly hat = hat_poly_k(f, exact_roo(f, p), p, 64);
  CHECK(hat.degree() == 3);
  CHECK(hat.constant_term() == p.t);
  CHECK(hat.leading() == -f.constant_term() / p.t);
  CHECK(hat.leading() == 1);
  const Poly quad{Scalar(1), Scalar(0), Scalar(1)};
  CHECK_THROWS_WITH_AS(hat_poly_k(quad, exact_roo(Poly::linear(p.t), p), p, 64),
                       doctest::Contains("hat not polynomial"), brauer::NonPolynomialHat);
}

TEST_CASE("hat_poly_k degree and end coefficients on all samples") {
  for (const auto& params : samples()) {
    for (const Poly& m : sneeze_passing(params, 3)) {
      const Poly hat = hat_poly_k(m, exact_roo(m, params), params, 64);
      CHECK(hat.degree() == m.degree() + 2);
      CHECK(hat.constant_term() == params.t);
      CHECK(hat.leading() == -m.constant_term() / params.t);
      const auto s = try_hat_poly_k(m, KauffmanOO::from_series(series_expand(roo_of_poly(m, params), 40), params),
                                    params, 40);
      CHECK(s.polynomial);
      CHECK(s.hat == hat);
      CHECK(s.certified_order);
    }
  }
}

TEST_CASE("classify_kauffman examples") {
  const auto p = p23();
  const Poly f = Poly::linear(3);
  const auto oo = exact_roo(f, p);

  const auto a = classify_kauffman(f, oo, p, 64);
  CHECK(a.nonzero);
  CHECK(a.m == f);

  const auto b = classify_kauffman(from_roots({3, 5}), oo, p, 64);
  CHECK(b.nonzero);
  CHECK(b.m == f);
  CHECK_FALSE(divides(Poly::linear(5), b.gcd_p_phat));
  const std::vector<Scalar> roots{3, 5};
  CHECK(oracle_classify_k(roots, oo, p) == f);

  const Poly quad{Scalar(1), Scalar(0), Scalar(1)};
  const auto c = classify_kauffman(quad, oo, p, 64);
  CHECK_FALSE(c.nonzero);
  CHECK_FALSE(c.diagnostics.empty());
  const std::vector<Poly> factors{quad};
  CHECK_FALSE(oracle_classify_k_factors(factors, oo, p));

  CHECK_THROWS_AS(classify_kauffman(Poly{Scalar(0), Scalar(1)}, oo, p, 64), std::invalid_argument);
}

TEST_CASE("oracle_classify_k examples") {
  const auto p = p23();
  const std::vector<Scalar> r3{3};
  CHECK(oracle_classify_k(r3, exact_roo(Poly::linear(3), p), p) == Poly::linear(3));
  const std::vector<Scalar> r16{1, 6};
  const Poly f = from_roots({1, 6});
  CHECK(oracle_classify_k(r16, exact_roo(f, p), p) == f);
  CHECK(classify_kauffman(f, exact_roo(f, p), p, 64).m == f);
}

TEST_CASE("all four branches are reached") {
  const auto p = p23();
  const Poly f = Poly::linear(-3);
  const auto oo = exact_roo(f, p);
  const Poly u2m1 = from_roots({1, -1});
  struct Case {
    Poly p;
    KauffmanBranch branch;
    std::vector<Scalar> roots;
  };
  const std::vector<Case> cases{
      {f, KauffmanBranch::OddRPlusT, {-3}},
      {f * u2m1, KauffmanBranch::OddRMinusT, {-3, 1, -1}},
      {f * Poly::linear(-1), KauffmanBranch::EvenRPlusT, {-3, -1}},
      {f * Poly::linear(1), KauffmanBranch::EvenRMinusT, {-3, 1}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.p.to_string());
    const auto k = classify_kauffman(c.p, oo, p, 64);
    CHECK(k.nonzero);
    REQUIRE(k.branch);
    CHECK(*k.branch == c.branch);
    CHECK(k.m == f);
    CHECK(k.r_identity_ok);
    CHECK(k.vanishing_orders_ok);
    CHECK(oracle_classify_k(c.roots, oo, p) == f);
  }
}

TEST_CASE("classify_kauffman returns m for (m, roo_m)") {
  for (const auto& params : samples()) {
    for (const Poly& m : sneeze_passing(params, 3)) {
      const auto k = classify_kauffman(m, exact_roo(m, params), params, 64);
      CHECK(k.nonzero);
      CHECK(k.m == m);
      CHECK(k.big_r.constant_term() * k.big_r.constant_term() == params.t * params.t);
    }
  }
}

TEST_CASE("h_poly and the H ratio") {
  const auto p = p23();
  const Poly f = Poly::linear(-3);
  const Poly g = from_roots({-3, -2});
  CHECK(h_poly(f, g, p) == Poly::linear(-2));
  CHECK(h_poly(f, f, p) == Poly::constant(1));
  for (const auto& params : samples()) {
    const auto pool = sneeze_passing(params, 2);
    for (const Poly& a : pool) {
      for (const Poly& b : pool) {
        const Poly h = h_poly(a, b, params);
        const auto ea = *sneeze_check(a, params);
        const auto eb = *sneeze_check(b, params);
        auto pair = [&](const EpsilonPair& e) {
          return Poly::linear(scalar_pow(params.q, e.eps1)) * Poly::linear(-scalar_pow(params.q, e.eps2));
        };
        CHECK(RatFunc(poly_reverse(h), h) == RatFunc(pair(ea), pair(eb)));
      }
    }
  }
}

TEST_CASE("belgium_factor examples") {
  const auto p = p23();
  const Poly f = Poly::linear(3);
  const auto same = belgium_factor(f, f, p);
  CHECK(same.ok);
  CHECK(same.h == Poly::constant(1));
  CHECK(same.gamma == Poly::constant(1));

  const auto bad = belgium_factor(f, f * Poly{Scalar(-1), Scalar(1), Scalar(1)}, p);
  CHECK_FALSE(bad.ok);

  const auto good = belgium_factor(f, f * from_roots({2, Q("-1/2")}), p);
  CHECK(good.ok);
  CHECK(good.gamma == Poly::constant(1));
  CHECK(roo_of_poly(f * from_roots({2, Q("-1/2")}), p) == roo_of_poly(f, p));

  const auto pal = belgium_factor(f, f * Poly{Scalar(1), Scalar(5), Scalar(1)}, p);
  CHECK(pal.ok);
  CHECK(pal.gamma == Poly{Scalar(1), Scalar(5), Scalar(1)});

  CHECK_THROWS_AS(belgium_factor(Poly::linear(5), f, p), std::invalid_argument);
}

TEST_CASE("bar_transform") {
  const auto p = p23();
  const auto img = bar_transform(Poly::linear(3), p);
  CHECK(img.f == Poly::linear(Q("1/3")));
  CHECK(img.params.q == Q("1/2"));
  CHECK(img.params.t == Q("1/3"));
  CHECK(img.params.z == Q("-3/2"));
  CHECK(bar_identity_holds(Poly::linear(3), p));
  const auto twice = bar_transform(img.f, img.params);
  CHECK(twice.f == Poly::linear(3));
  CHECK(twice.params == p);
  std::mt19937_64 rng(33);
  for (const auto& params : samples()) {
    for (int i = 0; i < 30; ++i) {
      const Poly f = testing::rand_poly(rng, 4, true);
      if (f.degree() < 1 || f.constant_term() == 0) continue;
      CHECK(bar_identity_holds(f, params));
    }
  }
}

TEST_CASE("KauffmanOO validation") {
  const auto p = p23();
  CHECK_THROWS_AS(KauffmanOO::from_ratfunc(RatFunc(Scalar(1)), p, 16), std::invalid_argument);
  const auto oo = exact_roo(Poly::linear(3), p);
  CHECK(oo.inverse_pair());
  CHECK(agrees(oo.roo() * oo.loo(), SeriesInf::from_poly(Poly::constant(1), 64)));
}
