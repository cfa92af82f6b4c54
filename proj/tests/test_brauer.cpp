#include "bubbles/brauer.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace bubbles;
using namespace bubbles::brauer;
using testing::Q;
using testing::from_roots;

namespace {

RatFunc one() { return RatFunc(Scalar(1)); }

BrauerOO exact_oo(const RatFunc& r, int order = 64) { return BrauerOO::from_ratfunc(r, order); }

OmegaSeq omega_of(std::initializer_list<Scalar> roots, int order = 64) {
  std::vector<Scalar> r(roots);
  return omega_of_roots(r, order);
}

}  // namespace

TEST_CASE("oo_of_poly examples") {
  CHECK(oo_of_poly(Poly::monomial(1, 2)) == one());
  CHECK(oo_of_poly(Poly::monomial(1, 1)) == RatFunc(Poly{Q("1/2"), Scalar(1)}, Poly{Q("-1/2"), Scalar(1)}));
  CHECK(oo_of_poly(Poly::linear(1)) ==
        RatFunc(Poly{Q("1/2"), Scalar(1)} * Poly{Scalar(1), Scalar(1)}, Poly{Q("-1/2"), Scalar(1)} * Poly::linear(1)));
  CHECK(oo_of_poly(Poly::constant(1)) == RatFunc(Poly{Q("-1/2"), Scalar(1)}, Poly{Q("-1/2"), Scalar(1)}));
  CHECK_THROWS_AS(oo_of_poly(Poly{Scalar(1), Scalar(2)}), std::invalid_argument);
}

TEST_CASE("O_f(u) O_f(-u) = 1 exactly for random monic f") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const Poly f = testing::rand_poly(rng, 6, true);
    const RatFunc o = oo_of_poly(f);
    CHECK(o * o.negate_var() == one());
    // numerator side: (1/4 - u^2) f(-u) f(u) equals the denominator side
    const Poly lhs = Poly{Q("-1/2"), Scalar(sign_pow(f.degree()))} * f.negate_var() *
                     (Poly{Q("-1/2"), Scalar(sign_pow(f.degree() + 1))} * f);
    const Poly rhs = Poly{Q("-1/2"), Scalar(1)} * f * (Poly{Q("-1/2"), Scalar(-1)} * f.negate_var());
    CHECK(lhs == rhs);
    const SeriesInf s = series_expand(o, 16);
    CHECK(s.coeff(0) == 1);
    CHECK(s.top_exp() <= 0);
  }
}

TEST_CASE("omega_of_roots examples") {
  const OmegaSeq empty = omega_of({}, 20);
  for (const auto& x : empty.omega) CHECK(x == 0);
  const OmegaSeq zero = omega_of({0}, 20);
  CHECK(zero[0] == 1);
  for (int n = 1; n <= 20; ++n) CHECK(zero[n] == 0);
  // closed form (2a+1) a^n
  for (const Scalar a : {Scalar(1), Scalar(-1), Scalar(2), Q("1/2"), Q("-3/2"), Scalar(3)}) {
    const OmegaSeq w = omega_of({a}, 30);
    for (int n = 0; n <= 30; ++n) CHECK(w[n] == (2 * a + 1) * scalar_pow(a, n));
  }
  CHECK(omega_of({1}, 8).omega == std::vector<Scalar>(9, Scalar(3)));
}

TEST_CASE("oo_from_omega anchors and roundtrip") {
  const BrauerOO zero = oo_from_omega(OmegaSeq{std::vector<Scalar>(12, Scalar(0))});
  CHECK(zero.matches(one()));
  std::mt19937_64 rng(22);
  for (int i = 0; i < 100; ++i) {
    OmegaSeq w;
    for (int r = 0; r <= 20; ++r) w.omega.push_back(testing::rand_q(rng));
    const BrauerOO o = oo_from_omega(w);
    CHECK(o.order() == 21);
    CHECK(o.series().coeff(0) == 1);
    CHECK(o.series().coeff(-1) == w[0]);
    CHECK(o.series().coeff(-2) == w[1] + w[0] / 2);
    CHECK(omega_from_oo(o) == w);
  }
}

TEST_CASE("oo_from_omega of the canonical bubbles is O_m") {
  for (auto roots : {std::vector<Scalar>{1}, {2, -1}, {0, 3, Q("1/2")}, {1, 1, -2, 0}}) {
    const OmegaSeq w = omega_of_roots(roots, 40);
    CHECK(oo_from_omega(w).matches(oo_of_poly(poly_from_roots(roots))));
  }
}

TEST_CASE("check_admissible") {
  const auto good = check_admissible(omega_of({Q("3/2")}));
  CHECK(good.pass);
  CHECK(good.grassmannian_pass);
  CHECK(good.certified_order == 64);

  OmegaSeq bad{std::vector<Scalar>(20, Scalar(0))};
  bad.omega[0] = 1;
  bad.omega[1] = 5;
  const auto rep = check_admissible(bad);
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation == 0);
  CHECK_FALSE(rep.grassmannian_pass);
  CHECK(rep.grassmannian_first_violation == 1);

  CHECK(check_admissible(OmegaSeq{std::vector<Scalar>(20, Scalar(0))}).pass);
}

TEST_CASE("odd bubble recursion against direct evaluation") {
  // omega_1 = (omega_0^2 - omega_0)/2 and omega_3 = (-omega_2 + 2 omega_0 omega_2 - omega_1^2)/2
  const std::vector<Scalar> w{Scalar(3), Scalar(7), Q("5/2"), Scalar(0)};
  CHECK(odd_bubble_value(w, 0) == Scalar(3));
  CHECK(odd_bubble_value(w, 1) == (-w[2] + 2 * w[0] * w[2] - w[1] * w[1]) / 2);
}

TEST_CASE("admissibility of canonical bubbles on random multisets") {
  std::mt19937_64 rng(23);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Q("1/2"), Q("-3/2")};
  std::uniform_int_distribution<int> size(0, 5);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int i = 0; i < 80; ++i) {
    RootMultiset roots(static_cast<std::size_t>(size(rng)));
    for (auto& a : roots) a = pool[pick(rng)];
    const OmegaSeq w = omega_of_roots(roots, 40);
    CHECK(check_admissible(w).pass);
    if (!roots.empty()) CHECK(check_weak_admissible(w, poly_from_roots(roots)).pass);
  }
}

TEST_CASE("weak admissibility examples") {
  const Scalar a(-2);
  const auto w = omega_of({a});
  CHECK(check_weak_admissible(w, Poly::linear(a)).pass);

  OmegaSeq e{std::vector<Scalar>(30, Scalar(0))};
  e.omega[0] = 1;
  CHECK(check_weak_admissible(e, Poly::monomial(1, 1)).pass);

  const auto rep = check_weak_admissible(omega_of({1}), Poly::linear(2));
  CHECK_FALSE(rep.pass);
  CHECK(rep.first_violation == 0);

  CHECK_THROWS_AS(check_weak_admissible(w, Poly::constant(1)), std::invalid_argument);
  CHECK_THROWS_AS(brew_form(w, Poly::constant(1)), std::invalid_argument);
}

TEST_CASE("brew form polynomial part") {
  // m = u - a, sum omega_r u^{-r-1} = (2a+1)/(u-a): product is the constant 2a+1
  const Scalar a(3);
  const BrewForm b = brew_form(omega_of({a}), Poly::linear(a));
  CHECK(b.tail_ok);
  CHECK(b.polynomial == Poly::constant(2 * a + 1));
  const BrewForm bad = brew_form(omega_of({1}), Poly::linear(2));
  CHECK_FALSE(bad.tail_ok);
  CHECK(bad.first_bad_exponent == -1);
}

TEST_CASE("weak admissibility and brew form agree") {
  std::mt19937_64 rng(24);
  int passing = 0;
  for (int i = 0; i < 300; ++i) {
    const Poly m = testing::rand_poly(rng, 3, true);
    if (m.degree() < 1) continue;
    OmegaSeq w;
    if (i % 2 == 0) {
      // recurrence-generated data passes by construction
      std::vector<Scalar> evens;
      for (int r = 0; r < m.degree(); r += 2) evens.push_back(testing::rand_q(rng));
      for (int r = 0; r < m.degree(); ++r) w.omega.push_back(testing::rand_q(rng));
      for (int r = m.degree(); r <= 30; ++r) {
        Scalar acc = 0;
        for (int j = 0; j < m.degree(); ++j) acc -= m.coeffs()[static_cast<std::size_t>(j)] * w[r - m.degree() + j];
        w.omega.push_back(acc);
      }
    } else {
      for (int r = 0; r <= 30; ++r) w.omega.push_back(testing::rand_q(rng));
    }
    const bool weak = check_weak_admissible(w, m).pass;
    passing += weak;
    CHECK(weak == brew_form(w, m).tail_ok);
  }
  CHECK(passing > 0);
}

TEST_CASE("extend_omega examples") {
  const Scalar three(3);
  const auto a = extend_omega(Poly::linear(1), std::span<const Scalar>(&three, 1), 20);
  CHECK(a.consistent);
  CHECK(a.omega.omega == std::vector<Scalar>(21, Scalar(3)));

  const Scalar five(5);
  const auto b = extend_omega(Poly::linear(1), std::span<const Scalar>(&five, 1), 20);
  CHECK_FALSE(b.consistent);
  CHECK(b.first_violation == 0);

  const Scalar zero(0);
  const auto c = extend_omega(Poly::monomial(1, 2), std::span<const Scalar>(&zero, 1), 20);
  CHECK(c.consistent);
  CHECK(c.omega == omega_of({0, 0}, 20));

  CHECK_THROWS_AS(extend_omega(Poly::monomial(1, 2), std::span<const Scalar>(), 20), std::invalid_argument);
}

TEST_CASE("extend_omega reproduces canonical bubbles") {
  for (auto roots : {std::vector<Scalar>{2}, {1, -1}, {0, 2, Q("1/2")}, {3, 3, -1, 0}, {1, 2, -2, Q("-3/2"), 0}}) {
    const Poly m = poly_from_roots(roots);
    const OmegaSeq w = omega_of_roots(roots, 40);
    std::vector<Scalar> evens;
    for (int r = 0; r < m.degree(); r += 2) evens.push_back(w[r]);
    const auto ext = extend_omega(m, evens, 40);
    CHECK(ext.consistent);
    CHECK(ext.omega == w);
  }
}

TEST_CASE("hat_poly examples") {
  const Poly u = Poly::monomial(1, 1);
  CHECK(hat_poly(u, exact_oo(one()), 64) == Poly{Scalar(0), Q("1/2"), Scalar(1)});
  const Scalar a(-2);
  CHECK(hat_poly(Poly::linear(a), exact_oo(oo_of_poly(Poly::linear(a))), 64) ==
        Poly{Q("-1/2"), Scalar(1)} * Poly::linear(a));
  CHECK_THROWS_WITH_AS(hat_poly(u, exact_oo(oo_of_poly(Poly::linear(1))), 64),
                       doctest::Contains("hat not polynomial"), NonPolynomialHat);
}

TEST_CASE("hat_poly series route agrees with exact route") {
  for (auto roots : {std::vector<Scalar>{1}, {2, -1}, {0, 3, Q("1/2")}}) {
    const Poly m = poly_from_roots(roots);
    const RatFunc o = oo_of_poly(m);
    const auto s = try_hat_poly(m, BrauerOO::from_series(series_expand(o, 40)), 40);
    const auto e = try_hat_poly(m, exact_oo(o), 40);
    CHECK(s.polynomial);
    CHECK(e.polynomial);
    CHECK(s.hat == e.hat);
    CHECK(s.certified_order == 40 - m.degree() - 1);
    CHECK_FALSE(e.certified_order);
  }
  const auto bad = try_hat_poly(Poly::monomial(1, 1), BrauerOO::from_series(series_expand(oo_of_poly(Poly::linear(1)), 30)), 30);
  CHECK_FALSE(bad.polynomial);
  const auto bad_exact = try_hat_poly(Poly::monomial(1, 1), exact_oo(oo_of_poly(Poly::linear(1))), 30);
  CHECK(bad.first_bad_power == bad_exact.first_bad_power);
}

TEST_CASE("hat of m against O_m factors as ((-1)^{d+1} u - 1/2) m") {
  std::mt19937_64 rng(25);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Q("1/2"), Q("-3/2")};
  for (int d = 1; d <= 5; ++d) {
    for (int i = 0; i < 10; ++i) {
      RootMultiset roots(static_cast<std::size_t>(d));
      for (auto& a : roots) a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      const Poly m = poly_from_roots(roots);
      const Poly hat = hat_poly(m, exact_oo(oo_of_poly(m)), 64);
      CHECK(hat.degree() == d + 1);
      CHECK(hat.negate_var() == Poly{Q("-1/2"), Scalar(sign_pow(d))} * m.negate_var());
    }
  }
}

TEST_CASE("classify_brauer worked example") {
  const Poly p = from_roots({1, 2, -1});
  const auto c = classify_brauer(p, exact_oo(one()), 64);
  CHECK(c.nonzero);
  CHECK(c.m == Poly{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK(c.p_hat == from_roots({Q("-1/2"), -1, -2, 1}));
  CHECK(c.gcd_p_phat == Poly{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK(c.q_poly == Poly{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK(c.q_poly.degree() == 2);
  CHECK(c.branch == BrauerBranch::QEvenOrDefault);
  CHECK(c.oo_canonical == one());
  CHECK(c.exact);
}

TEST_CASE("classify_brauer examples") {
  const Scalar a(3);
  const auto same = classify_brauer(Poly::linear(a), exact_oo(oo_of_poly(Poly::linear(a))), 64);
  CHECK(same.nonzero);
  CHECK(same.m == Poly::linear(a));

  const auto zero = classify_brauer(Poly::linear(1), exact_oo(one()), 64);
  CHECK_FALSE(zero.nonzero);
  CHECK(zero.gcd_p_phat == Poly::constant(1));

  CHECK_THROWS_AS(classify_brauer(Poly{Scalar(1), Scalar(2)}, exact_oo(one()), 64), std::invalid_argument);
  CHECK_THROWS_AS(classify_brauer(Poly::constant(1), exact_oo(one()), 64), std::invalid_argument);
}

TEST_CASE("classify_brauer Q-odd branch divides by u") {
  // p = u(u-1), O = O_{u-1}: Q picks up the factor u
  const Poly p = from_roots({0, 1});
  const auto c = classify_brauer(p, exact_oo(oo_of_poly(Poly::linear(1))), 64);
  CHECK(c.nonzero);
  CHECK(c.m == Poly::linear(1));
  CHECK(c.q_poly.degree() % 2 == 1);
  CHECK(c.branch == BrauerBranch::QOddDivideByU);
  const RootMultiset roots{0, 1};
  CHECK(oracle_classify(roots, exact_oo(oo_of_poly(Poly::linear(1)))) == Poly::linear(1));
}

TEST_CASE("classify_brauer short-circuits when O(u)O(-u) != 1") {
  const RatFunc bad(Poly::linear(-1), Poly::monomial(1, 1));
  const auto c = classify_brauer(from_roots({1, -1}), exact_oo(bad), 64);
  CHECK_FALSE(c.grassmannian_ok);
  CHECK_FALSE(c.nonzero);
  CHECK_FALSE(c.diagnostics.empty());
}

TEST_CASE("classify_brauer with series input records certification") {
  const Poly p = from_roots({1, 2, -1});
  const auto c = classify_brauer(p, BrauerOO::from_series(series_expand(one(), 40)), 40);
  CHECK(c.nonzero);
  CHECK(c.m == Poly{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK_FALSE(c.exact);
  CHECK(c.certified_order == 40 - 3 - 1);
}

TEST_CASE("classification returns m for (m, O_m)") {
  std::mt19937_64 rng(26);
  const std::vector<Scalar> pool{0, 1, -1, 2, -2, 3, Q("1/2")};
  for (int d = 1; d <= 5; ++d) {
    for (int i = 0; i < 8; ++i) {
      RootMultiset roots(static_cast<std::size_t>(d));
      for (auto& a : roots) a = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
      const Poly m = poly_from_roots(roots);
      const auto c = classify_brauer(m, exact_oo(oo_of_poly(m)), 64);
      CHECK(c.nonzero);
      CHECK(c.m == m);
      CHECK(c.oo_canonical == oo_of_poly(m));
    }
  }
}

TEST_CASE("oracle_classify examples") {
  const RootMultiset r1{1, -1, 2};
  CHECK(oracle_classify(r1, exact_oo(one())) == Poly{Scalar(-1), Scalar(0), Scalar(1)});
  const RootMultiset r2{Scalar(-3)};
  CHECK(oracle_classify(r2, exact_oo(oo_of_poly(Poly::linear(-3)))) == Poly::linear(-3));
  const RootMultiset r3{Scalar(1)};
  CHECK_FALSE(oracle_classify(r3, exact_oo(one())));
}

TEST_CASE("oracle over non-split factors") {
  // p = (u^2 + 1)(u - 2), O = O_{u^2+1}
  const Poly quad{Scalar(1), Scalar(0), Scalar(1)};
  const std::vector<Poly> factors{quad, Poly::linear(2)};
  const auto oo = exact_oo(oo_of_poly(quad));
  const auto o = oracle_classify_factors(factors, oo);
  const auto c = classify_brauer(quad * Poly::linear(2), oo, 64);
  CHECK(o == quad);
  CHECK(c.nonzero);
  CHECK(c.m == quad);
}

TEST_CASE("classify_brauer agrees with the oracle on a small sweep") {
  const std::vector<Scalar> pool{0, 1, -1, 2, -3};
  std::vector<RootMultiset> sets{{}};
  for (const auto& a : pool) {
    std::vector<RootMultiset> next;
    for (const auto& s : sets) {
      for (int k = 0; k <= 2; ++k) {
        RootMultiset t = s;
        for (int j = 0; j < k; ++j) t.push_back(a);
        if (t.size() <= 3) next.push_back(t);
      }
    }
    sets = std::move(next);
  }
  int nonzero = 0;
  for (const auto& roots : sets) {
    if (roots.empty()) continue;
    const Poly p = poly_from_roots(roots);
    for (const Poly& f : {Poly::constant(1), Poly::linear(roots.front()), p}) {
      const auto oo = exact_oo(oo_of_poly(f));
      const auto c = classify_brauer(p, oo, 32);
      const auto o = oracle_classify(roots, oo);
      CHECK(c.nonzero == o.has_value());
      if (c.nonzero && o) CHECK(c.m == *o);
      nonzero += c.nonzero;
    }
  }
  CHECK(nonzero > 0);
}

TEST_CASE("algebra_min_poly") {
  const Scalar a(2);
  const auto g = algebra_min_poly(Poly::linear(a), omega_of({a}), 64);
  CHECK(g.f == Poly::linear(a));
  CHECK(g.goodman);

  OmegaSeq zero{std::vector<Scalar>(65, Scalar(0))};
  // O_Omega = 1 means Omega = 0
  const auto w = algebra_min_poly(from_roots({1, 2, -1}), zero, 64);
  CHECK(w.f == Poly{Scalar(-1), Scalar(0), Scalar(1)});
  CHECK_FALSE(w.goodman);

  const auto z = algebra_min_poly(Poly::linear(1), zero, 64);
  CHECK_FALSE(z.f);
  CHECK_FALSE(z.goodman);
}

TEST_CASE("BrauerOO validation") {
  CHECK_THROWS_AS(BrauerOO::from_ratfunc(RatFunc(Scalar(2)), 16), std::invalid_argument);
  CHECK_THROWS_AS(BrauerOO::from_ratfunc(RatFunc(Poly::linear(0)), 16), std::invalid_argument);
  CHECK_THROWS_AS(BrauerOO::from_series(SeriesInf(0, {Scalar(3)}, 4)), std::invalid_argument);
  CHECK(BrauerOO::from_series(SeriesInf(0, {Scalar(1)}, 4)).grassmannian());
}
