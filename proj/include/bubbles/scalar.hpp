#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace bubbles {

/// Exact rational number. GMP keeps every value in lowest terms with a
/// positive denominator; zero is 0/1.
using Scalar = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "a" or "a/b" (optional leading '-', decimal digits only, b != 0).
/// Anything else, including whitespace and "1//2", is rejected.
Scalar parse_scalar(std::string_view text);

/// "a" for integers, "a/b" otherwise.
std::string format_scalar(const Scalar& x);

inline Scalar scalar_pow(const Scalar& base, long exponent) {
  Scalar result = 1;
  Scalar b = base;
  if (exponent < 0) {
    if (b == 0) throw std::domain_error("zero to a negative power");
    b = 1 / b;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

inline int sign_pow(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace bubbles
