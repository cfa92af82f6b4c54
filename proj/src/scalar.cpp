#include "bubbles/scalar.hpp"

#include <cctype>

namespace bubbles {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  if (slash != std::string_view::npos && den.find_first_not_of('0') == std::string_view::npos) {
    throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  }
  Scalar value;
  if (value.set_str(std::string(text), 10) != 0) {
    throw ParseError("malformed rational \"" + std::string(text) + "\"");
  }
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_str();
}

}  // namespace bubbles
