#pragma once

// Scalar data of the affine and cyclotomic Kauffman categories with
// parameters z = q - q^{-1} and t: the two bubble generating functions, the
// sneeze conditions and their epsilon pairs, the hat closure, and the
// four-branch minimal polynomial formula.

#include "bubbles/brauer.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bubbles::kauffman {

struct KauffmanParams {
  Scalar q;
  Scalar t;
  Scalar z;

  /// Validates q not in {0, 1, -1} and t != 0; z = q - 1/q.
  static KauffmanParams make(const Scalar& q, const Scalar& t);

  /// u^2 - z u - 1 = (u - q)(u + 1/q)
  Poly quadratic() const;
  /// u^2 + z u - 1 = (u + q)(u - 1/q)
  Poly mirror() const;
  friend bool operator==(const KauffmanParams&, const KauffmanParams&) = default;
};

struct EpsilonPair {
  int eps1 = 1;
  int eps2 = 1;
  friend bool operator==(const EpsilonPair&, const EpsilonPair&) = default;
};

/// The unique (eps1, eps2) with f(0) = eps1 q^{(eps1+eps2)/2} t and
/// deg f = (eps1+eps2)/2 + 1 mod 2, or nullopt. Throws on non-monic f or f(0) = 0.
std::optional<EpsilonPair> sneeze_check(const Poly& f, const KauffmanParams& params);
/// Literal form: z = f(0)/t - t/f(0) for even degree, f(0) = +-t for odd.
bool sneeze_condition(const Poly& f, const KauffmanParams& params);

/// Case-split right bubble series of f; when f passes the sneeze check the
/// factored form is computed too and must agree exactly.
RatFunc roo_of_poly(const Poly& f, const KauffmanParams& params);
RatFunc loo_of_poly(const Poly& f, const KauffmanParams& params);
/// t (u - q^{e1})(u + q^{e2}) / ((u - q)(u + 1/q)) * fcheck/f
RatFunc roo_factored(const Poly& f, const KauffmanParams& params, const EpsilonPair& eps);
/// t^{-1} (u - q^{-e1})(u + q^{-e2}) / ((u + q)(u - 1/q)) * f/fcheck
RatFunc loo_factored(const Poly& f, const KauffmanParams& params, const EpsilonPair& eps);

struct DualityReport {
  bool sneeze = false;
  /// roo_f(1/u) = loo_f(u)
  bool inversion = false;
  /// roo_f loo_f = 1
  bool product = false;
  bool all_agree() const { return sneeze == inversion && inversion == product; }
};

/// Evaluates the three equivalent conditions; throws TheoryViolation if they disagree.
DualityReport check_duality(const Poly& f, const KauffmanParams& params);

/// Bubble scalars omega_r for r in [-N, N]. nonneg[r] = omega_r and
/// neg[k] = omega_{-(k+1)}; neg may be empty.
class KOmegaSeq {
 public:
  /// Throws std::invalid_argument unless omega_0 = (t - 1/t)/z + 1.
  static KOmegaSeq make(std::vector<Scalar> nonneg, std::vector<Scalar> neg, const KauffmanParams& params);

  const std::vector<Scalar>& nonneg() const { return nonneg_; }
  const std::vector<Scalar>& neg() const { return neg_; }
  /// omega_r for any stored r, negative included.
  const Scalar& at(int r) const;
  static Scalar omega0(const KauffmanParams& params);

 private:
  KOmegaSeq(std::vector<Scalar> nonneg, std::vector<Scalar> neg) : nonneg_(std::move(nonneg)), neg_(std::move(neg)) {}
  std::vector<Scalar> nonneg_;
  std::vector<Scalar> neg_;
};

/// Right and left bubble series. The right series is primary; the left one
/// is either supplied or taken as its reciprocal.
class KauffmanOO {
 public:
  /// roo must expand to t + u^{-1}(...).
  static KauffmanOO from_ratfunc(const RatFunc& roo, const KauffmanParams& params, int order);
  static KauffmanOO from_series(SeriesInf roo, const KauffmanParams& params);
  static KauffmanOO from_series_pair(SeriesInf roo, SeriesInf loo, const KauffmanParams& params);

  const std::optional<RatFunc>& exact() const { return exact_; }
  const SeriesInf& roo() const { return roo_; }
  const SeriesInf& loo() const { return loo_; }
  int order() const { return roo_.order(); }
  bool is_exact() const { return exact_.has_value(); }

  bool matches(const RatFunc& target) const;
  /// roo loo = 1, exactly or to truncation.
  bool inverse_pair() const;

 private:
  KauffmanOO(std::optional<RatFunc> exact, SeriesInf roo, SeriesInf loo)
      : exact_(std::move(exact)), roo_(std::move(roo)), loo_(std::move(loo)) {}
  std::optional<RatFunc> exact_;
  SeriesInf roo_;
  SeriesInf loo_;
};

struct KOmegaOO {
  KauffmanOO oo;
  /// roo_Omega loo_Omega = 1 to truncation.
  bool admissible = true;
  std::optional<int> first_violation;
};

/// roo = ((1/t - z)u^2 - 1/t)/(u^2 - zu - 1) + z(u^2-1)/(u^2-zu-1) sum_{r>=0} omega_r u^{-r},
/// loo = ((t + z)u^2 - t)/(u^2 + zu - 1) - z(u^2-1)/(u^2+zu-1) sum_{r>=0} omega_{-r} u^{-r};
/// without negative data the left series is the reciprocal of the right one.
KOmegaOO roo_from_komega(const KOmegaSeq& w, const KauffmanParams& params);
/// Inverse of roo_from_komega to the available order.
KOmegaSeq komega_from_roo(const KauffmanOO& oo, const KauffmanParams& params);

/// The closed form of the triangle bubble for minimal polynomial m, whose
/// u^{-r} coefficients are the bubble values omega_r for r >= 0.
RatFunc triangle_bubble(const Poly& m, const KauffmanParams& params);

struct KHatResult {
  Poly hat;
  bool polynomial = true;
  /// First power u^k (k > deg p + 2) with a nonzero coefficient.
  std::optional<int> first_bad_power;
  std::optional<int> certified_order;
};

/// p_hat(u) = (1 - zu - u^2) u^{deg p} p(1/u) roo(1/u), a polynomial of degree deg p + 2
/// for consistent data.
KHatResult try_hat_poly_k(const Poly& p, const KauffmanOO& oo, const KauffmanParams& params, int order);
Poly hat_poly_k(const Poly& p, const KauffmanOO& oo, const KauffmanParams& params, int order);

enum class KauffmanBranch { OddRPlusT, OddRMinusT, EvenRPlusT, EvenRMinusT };
std::string to_string(KauffmanBranch b);

struct KauffmanClassification {
  bool nonzero = false;
  Poly m;
  Poly p_hat;
  Poly big_r;
  Poly r1;
  Poly gcd_p_phat;
  std::optional<KauffmanBranch> branch;
  std::optional<EpsilonPair> eps;
  RatFunc roo_canonical;
  bool hat_polynomial = false;
  bool r_identity_ok = false;
  bool vanishing_orders_ok = false;
  bool exact = false;
  int certified_order = 0;
  std::vector<std::string> diagnostics;
};

KauffmanClassification classify_kauffman(const Poly& p, const KauffmanOO& oo, const KauffmanParams& params,
                                         int order);

/// Brute force over sub-multiset divisors passing the sneeze check with
/// roo = roo_f; returns the maximal one or nullopt.
std::optional<Poly> oracle_classify_k_factors(std::span<const Poly> factors, const KauffmanOO& oo,
                                              const KauffmanParams& params);
std::optional<Poly> oracle_classify_k(std::span<const Scalar> roots, const KauffmanOO& oo,
                                      const KauffmanParams& params);

/// H_{f,g} built from the two epsilon pairs.
Poly h_poly(const Poly& f, const Poly& g, const KauffmanParams& params);

struct BelgiumResult {
  Poly h;
  Poly gamma;
  /// g = f H gamma with gamma palindromic, gamma(0) = 1 and deg gamma even.
  bool ok = false;
};

/// Requires f | g; ok must coincide with roo_g = roo_f (checked, TheoryViolation otherwise).
BelgiumResult belgium_factor(const Poly& f, const Poly& g, const KauffmanParams& params);

struct BarImage {
  Poly f;
  KauffmanParams params;
};

/// (f, q, t) -> (fcheck, 1/q, 1/t), so z -> -z.
BarImage bar_transform(const Poly& f, const KauffmanParams& params);
/// roo of the bar image equals loo_f.
bool bar_identity_holds(const Poly& f, const KauffmanParams& params);

}  // namespace bubbles::kauffman
