// Python bindings. Rationals cross the boundary as "a/b" strings and
// polynomials as ascending coefficient lists of such strings.

#include "bubbles/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bubbles;

namespace {

Poly to_poly(const std::vector<std::string>& coeffs) {
  std::vector<Scalar> c;
  for (const auto& s : coeffs) c.push_back(parse_scalar(s));
  return Poly(std::move(c));
}

std::vector<std::string> from_poly(const Poly& p) {
  std::vector<std::string> out;
  for (const auto& c : p.coeffs()) out.push_back(format_scalar(c));
  return out;
}

py::tuple from_ratfunc(const RatFunc& r) { return py::make_tuple(from_poly(r.num()), from_poly(r.den())); }

}  // namespace

PYBIND11_MODULE(_bubbles, m) {
  m.doc() = "Exact bubble generating functions for the Brauer and Kauffman categories";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TheoryViolation>(m, "TheoryViolation", PyExc_RuntimeError);
  py::register_exception<brauer::NonPolynomialHat>(m, "NonPolynomialHat", PyExc_ValueError);

  m.def("commands", [] { return cli::command_names(); });

  m.def(
      "run_json",
      [](const std::string& command, const std::string& document, std::optional<int> order, bool oracle) {
        cli::Options opts;
        opts.order = order;
        opts.oracle = oracle;
        cli::Outcome out;
        {
          py::gil_scoped_release release;
          out = cli::run_text(command, document, opts);
        }
        return py::make_tuple(out.exit_code, cli::render_json(out));
      },
      py::arg("command"), py::arg("document"), py::arg("order") = py::none(), py::arg("oracle") = false,
      "Run a CLI command on a JSON document; returns (exit_code, report_json).");

  m.def("poly_gcd", [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return from_poly(poly_gcd(to_poly(a), to_poly(b)));
  });

  m.def("oo_of_poly", [](const std::vector<std::string>& f) { return from_ratfunc(brauer::oo_of_poly(to_poly(f))); },
        "Brauer bubble series of a monic f as (num, den).");

  m.def(
      "omega_of_roots",
      [](const std::vector<std::string>& roots, int order) {
        std::vector<Scalar> r;
        for (const auto& s : roots) r.push_back(parse_scalar(s));
        std::vector<std::string> out;
        for (const auto& w : brauer::omega_of_roots(r, order).omega) out.push_back(format_scalar(w));
        return out;
      },
      py::arg("roots"), py::arg("order") = cli::kDefaultOrder);

  m.def(
      "classify_brauer",
      [](const std::vector<std::string>& p, const std::vector<std::string>& num, const std::vector<std::string>& den,
         int order) -> std::optional<std::vector<std::string>> {
        const auto oo = brauer::BrauerOO::from_ratfunc(RatFunc(to_poly(num), to_poly(den)), order);
        const auto c = brauer::classify_brauer(to_poly(p), oo, order);
        if (!c.nonzero) return std::nullopt;
        return from_poly(c.m);
      },
      py::arg("p"), py::arg("num"), py::arg("den"), py::arg("order") = cli::kDefaultOrder,
      "Minimal polynomial of the dot, or None for the zero category.");

  m.def(
      "sneeze_check",
      [](const std::vector<std::string>& f, const std::string& q, const std::string& t)
          -> std::optional<std::pair<int, int>> {
        const auto params = kauffman::KauffmanParams::make(parse_scalar(q), parse_scalar(t));
        const auto eps = kauffman::sneeze_check(to_poly(f), params);
        if (!eps) return std::nullopt;
        return std::make_pair(eps->eps1, eps->eps2);
      },
      py::arg("f"), py::arg("q"), py::arg("t"));

  m.def(
      "roo_of_poly",
      [](const std::vector<std::string>& f, const std::string& q, const std::string& t) {
        const auto params = kauffman::KauffmanParams::make(parse_scalar(q), parse_scalar(t));
        return from_ratfunc(kauffman::roo_of_poly(to_poly(f), params));
      },
      py::arg("f"), py::arg("q"), py::arg("t"));

  m.def(
      "classify_kauffman",
      [](const std::vector<std::string>& p, const std::vector<std::string>& f, const std::string& q,
         const std::string& t, int order) -> std::optional<py::tuple> {
        const auto params = kauffman::KauffmanParams::make(parse_scalar(q), parse_scalar(t));
        const auto oo = kauffman::KauffmanOO::from_ratfunc(kauffman::roo_of_poly(to_poly(f), params), params, order);
        const auto c = kauffman::classify_kauffman(to_poly(p), oo, params, order);
        if (!c.nonzero) return std::nullopt;
        return py::make_tuple(from_poly(c.m), c.branch ? to_string(*c.branch) : std::string());
      },
      py::arg("p"), py::arg("f"), py::arg("q"), py::arg("t"), py::arg("order") = cli::kDefaultOrder,
      "Classify p against the right bubble series of f; returns (m, branch) or None.");
}
