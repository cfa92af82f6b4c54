#pragma once

#include "bubbles/poly.hpp"

#include <initializer_list>
#include <random>
#include <vector>

namespace testing {

using bubbles::Poly;
using bubbles::Scalar;

inline Scalar Q(const char* s) { return bubbles::parse_scalar(s); }

/// prod (u - a)
inline Poly from_roots(std::initializer_list<Scalar> roots) {
  std::vector<Scalar> r(roots);
  return bubbles::poly_from_roots(r);
}

inline Scalar rand_q(std::mt19937_64& rng, int num_bound = 6, int den_bound = 5) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Scalar x(num(rng), den(rng));
  x.canonicalize();
  return x;
}

inline Poly rand_poly(std::mt19937_64& rng, int max_degree, bool monic) {
  std::uniform_int_distribution<int> deg(monic ? 0 : -1, max_degree);
  const int d = deg(rng);
  std::vector<Scalar> c(static_cast<std::size_t>(d + 1));
  for (auto& x : c) x = rand_q(rng);
  if (monic) c.back() = 1;
  return Poly(std::move(c));
}

}  // namespace testing
