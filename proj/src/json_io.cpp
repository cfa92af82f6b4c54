#include "bubbles/json_io.hpp"

namespace bubbles::io {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return parse_scalar(j.dump());
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

Json scalar_to_json(const Scalar& x) { return format_scalar(x); }

std::vector<Scalar> scalars_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
  std::vector<Scalar> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(scalar_from_json(x));
  return out;
}

Json scalars_to_json(const std::vector<Scalar>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(scalar_to_json(x));
  return out;
}

Poly poly_from_json(const Json& j) { return Poly(scalars_from_json(j)); }
Json poly_to_json(const Poly& p) { return scalars_to_json(p.coeffs()); }

namespace {

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<int>();
}

}  // namespace

SeriesInf series_from_json(const Json& j) {
  const int top = int_from_json(require(j, "top_exp"), "top_exp");
  const int order = int_from_json(require(j, "order"), "order");
  std::vector<Scalar> coeffs = scalars_from_json(require(j, "coeffs"));
  if (static_cast<long>(coeffs.size()) > static_cast<long>(top) + order + 1) {
    throw ParseError("series carries coefficients below u^-" + std::to_string(order));
  }
  return SeriesInf(top, std::move(coeffs), order);
}

Json series_to_json(const SeriesInf& s) {
  Json out;
  out["top_exp"] = s.top_exp();
  out["coeffs"] = scalars_to_json(s.coeffs());
  out["order"] = s.order();
  return out;
}

RatFunc ratfunc_from_json(const Json& j) {
  const Poly den = poly_from_json(require(j, "den"));
  if (den.is_zero()) throw ParseError("rational function with zero denominator");
  return RatFunc(poly_from_json(require(j, "num")), den);
}

Json ratfunc_to_json(const RatFunc& r) {
  Json out;
  out["num"] = poly_to_json(r.num());
  out["den"] = poly_to_json(r.den());
  return out;
}

PolySpec polyspec_from_json(const Json& j) {
  if (j.is_object() && j.contains("roots")) {
    RootMultiset roots = scalars_from_json(j.at("roots"));
    return PolySpec{poly_from_roots(roots), std::move(roots)};
  }
  if (j.is_object() && j.contains("coeffs")) return PolySpec{poly_from_json(j.at("coeffs")), std::nullopt};
  throw ParseError("polynomial must be given as {\"roots\": [...]} or {\"coeffs\": [...]}");
}

kauffman::KauffmanParams params_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("q")) throw ParseError("params need q (z alone is not accepted)");
  const Scalar q = scalar_from_json(j.at("q"));
  const Scalar t = scalar_from_json(require(j, "t"));
  kauffman::KauffmanParams p;
  try {
    p = kauffman::KauffmanParams::make(q, t);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (j.contains("z") && scalar_from_json(j.at("z")) != p.z) {
    throw ParseError("z must equal q - 1/q = " + format_scalar(p.z));
  }
  return p;
}

Json params_to_json(const kauffman::KauffmanParams& p) {
  Json out;
  out["q"] = scalar_to_json(p.q);
  out["t"] = scalar_to_json(p.t);
  out["z"] = scalar_to_json(p.z);
  return out;
}

}  // namespace bubbles::io
