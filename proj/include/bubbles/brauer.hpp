#pragma once

// Scalar data of the affine and cyclotomic Brauer categories: the bubble
// generating function O(u) in 1 + u^{-1}Q[[u^{-1}]], admissibility of bubble
// sequences, the hat closure of annihilating polynomials, and the minimal
// polynomial of the dot in a cyclotomic quotient.

#include "bubbles/ratfunc.hpp"
#include "bubbles/series.hpp"

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bubbles {

using RootMultiset = std::vector<Scalar>;

/// Raised when an internal cross-check between two routes that must agree
/// mathematically disagrees. Never expected to fire.
class TheoryViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bubbles

namespace bubbles::brauer {

/// Bubble scalars: omega[r] is the value of the bubble carrying r dots.
struct OmegaSeq {
  std::vector<Scalar> omega;

  int order() const { return static_cast<int>(omega.size()) - 1; }
  const Scalar& operator[](int r) const { return omega.at(static_cast<std::size_t>(r)); }
  friend bool operator==(const OmegaSeq&, const OmegaSeq&) = default;
};

/// The bubble generating function, as an exact rational function when one
/// is known and always as a truncated series with constant term 1.
class BrauerOO {
 public:
  static BrauerOO from_ratfunc(const RatFunc& r, int order);
  static BrauerOO from_series(SeriesInf s);

  const std::optional<RatFunc>& exact() const { return exact_; }
  const SeriesInf& series() const { return series_; }
  int order() const { return series_.order(); }
  bool is_exact() const { return exact_.has_value(); }

  /// O = target, exactly when O is exact, otherwise to the series order.
  bool matches(const RatFunc& target) const;
  /// O(u) O(-u) = 1 (exactly or to truncation).
  bool grassmannian() const;

 private:
  BrauerOO(std::optional<RatFunc> exact, SeriesInf series)
      : exact_(std::move(exact)), series_(std::move(series)) {}
  std::optional<RatFunc> exact_;
  SeriesInf series_;
};

/// O_f(u) = ((-1)^{deg f} u - 1/2) f(-u) / ((u - 1/2) f(u)) for monic f.
RatFunc oo_of_poly(const Poly& f);

/// Bubble values of a brick whose dot has minimal polynomial prod (u - a):
/// the u^{-n} coefficients of -u + 1/2 + (u - (-1)^{|a|}/2) prod (u+a)/(u-a).
OmegaSeq omega_of_roots(std::span<const Scalar> roots, int order);

/// O_Omega(u) = 2/(2u-1) Omega(u) + 1 where Omega(u) = sum omega_r u^{-r};
/// the result is known to u^{-(N+1)}.
BrauerOO oo_from_omega(const OmegaSeq& w);
OmegaSeq omega_from_oo(const BrauerOO& o);

struct AdmissibilityReport {
  bool pass = true;
  /// Smallest r with omega_{2r+1} violating the odd-bubble recursion.
  std::optional<int> first_violation;
  bool grassmannian_pass = true;
  /// Smallest k with [O(u)O(-u)]_{u^{-2k}} != 0.
  std::optional<int> grassmannian_first_violation;
  int certified_order = 0;
};

/// Odd-dot bubbles are determined by the even ones:
/// omega_{2r+1} = (-omega_{2r} + sum_{n=0}^{2r} (-1)^n omega_n omega_{2r-n}) / 2.
/// Checked directly and through O(u)O(-u) = 1; the two verdicts must agree.
AdmissibilityReport check_admissible(const OmegaSeq& w);

/// The right-hand side of the odd-bubble recursion for index 2r+1.
Scalar odd_bubble_value(std::span<const Scalar> omega, int r);

struct WeakAdmissibilityReport {
  bool pass = true;
  /// Smallest n with sum_j [m]_j omega_{n+j} != 0.
  std::optional<int> first_violation;
  int checked_up_to = -1;
};

/// sum_j [m]_j omega_{n+j} = 0 for all n with n + deg m <= N.
WeakAdmissibilityReport check_weak_admissible(const OmegaSeq& w, const Poly& m);

struct BrewForm {
  /// Polynomial part of m(u) sum_r omega_r u^{-r-1}.
  Poly polynomial;
  bool tail_ok = true;
  /// Exponent of the first nonzero tail coefficient (negative).
  std::optional<int> first_bad_exponent;
};

BrewForm brew_form(const OmegaSeq& w, const Poly& m);

struct ExtendedOmega {
  OmegaSeq omega;
  bool consistent = true;
  std::optional<int> first_violation;
};

/// Rebuilds all bubbles from the even ones below deg m: odd indices below
/// deg m via the odd-bubble recursion, the rest via the recurrence with m's
/// coefficients, then re-verifies the recursion at every index.
ExtendedOmega extend_omega(const Poly& m, std::span<const Scalar> evens, int order);

class NonPolynomialHat : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct HatResult {
  /// Polynomial part of (-u - 1/2) g(-u) O(-u).
  Poly hat;
  bool polynomial = true;
  /// First u^{-r} (r >= 1) with a nonzero coefficient, as r.
  std::optional<int> first_bad_power;
  /// nullopt when decided exactly.
  std::optional<int> certified_order;
};

HatResult try_hat_poly(const Poly& g, const BrauerOO& o, int order);
/// As try_hat_poly but throws NonPolynomialHat when the tail does not vanish.
Poly hat_poly(const Poly& g, const BrauerOO& o, int order);

enum class BrauerBranch { QOddDivideByU, QEvenOrDefault };
std::string to_string(BrauerBranch b);

struct BrauerClassification {
  bool nonzero = false;
  Poly m;
  Poly p_hat;
  Poly q_poly;
  Poly gcd_p_phat;
  BrauerBranch branch = BrauerBranch::QEvenOrDefault;
  RatFunc oo_canonical;
  bool grassmannian_ok = false;
  bool hat_polynomial = false;
  bool exact = false;
  int certified_order = 0;
  std::vector<std::string> diagnostics;
};

/// Minimal polynomial of the dot in the cyclotomic quotient for (p, O):
/// m = gcd(p, p_hat)/u when gcd((u-1/2)p, p_hat) has odd degree and
/// gcd(p, p_hat) otherwise, nonzero iff deg m >= 1 and O = O_m.
BrauerClassification classify_brauer(const Poly& p, const BrauerOO& o, int order);

/// Brute force: the maximal-degree divisor f of p (built from sub-multisets of
/// the given factors) with O = O_f and deg f >= 1, or nullopt for zero.
std::optional<Poly> oracle_classify_factors(std::span<const Poly> factors, const BrauerOO& o);
std::optional<Poly> oracle_classify(std::span<const Scalar> roots, const BrauerOO& o);

struct AlgebraMinPoly {
  std::optional<Poly> f;
  /// f = p, equivalently O_Omega = O_p.
  bool goodman = false;
  BrauerClassification classification;
};

AlgebraMinPoly algebra_min_poly(const Poly& p, const OmegaSeq& w, int order);

}  // namespace bubbles::brauer
