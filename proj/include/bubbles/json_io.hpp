#pragma once

// JSON encodings: rationals as "a/b" strings, polynomials as ascending
// coefficient arrays, series as {top_exp, coeffs, order}, rational functions
// as {num, den}.

#include "bubbles/brauer.hpp"
#include "bubbles/kauffman.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bubbles::io {

using Json = nlohmann::ordered_json;

/// Accepts "a", "a/b" or a JSON integer; floats and anything else raise ParseError.
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& x);

Poly poly_from_json(const Json& j);
Json poly_to_json(const Poly& p);

std::vector<Scalar> scalars_from_json(const Json& j);
Json scalars_to_json(const std::vector<Scalar>& xs);

SeriesInf series_from_json(const Json& j);
Json series_to_json(const SeriesInf& s);

RatFunc ratfunc_from_json(const Json& j);
Json ratfunc_to_json(const RatFunc& r);

/// {"roots": [...]} or {"coeffs": [...]}; roots are kept when given.
struct PolySpec {
  Poly poly;
  std::optional<RootMultiset> roots;
};
PolySpec polyspec_from_json(const Json& j);

/// {"q": ..., "t": ...}; a "z" entry is only accepted alongside q and must equal q - 1/q.
kauffman::KauffmanParams params_from_json(const Json& j);
Json params_to_json(const kauffman::KauffmanParams& p);

/// Looks up a required member, raising ParseError with its name when absent.
const Json& require(const Json& j, const char* key);

}  // namespace bubbles::io
