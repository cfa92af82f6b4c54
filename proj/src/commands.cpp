#include "bubbles/commands.hpp"

#include "bubbles/suite.hpp"

#include <sstream>

namespace bubbles::cli {

using io::Json;
namespace br = bubbles::brauer;
namespace ka = bubbles::kauffman;

namespace {

/// Input problems detected after parsing; mapped to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int resolve_order(const Json& input, const Options& options) {
  int order = kDefaultOrder;
  if (options.order) {
    order = *options.order;
  } else if (input.is_object() && input.contains("order")) {
    const Json& o = input.at("order");
    if (!o.is_number_integer()) throw ParseError("order must be an integer, got " + o.dump());
    order = o.get<int>();
  }
  if (order < kMinOrder) throw UsageError("order must be at least " + std::to_string(kMinOrder));
  return order;
}

Json optional_int(const std::optional<int>& x) { return x ? Json(*x) : Json(nullptr); }

Json optional_poly(const std::optional<Poly>& p) { return p ? io::poly_to_json(*p) : Json(nullptr); }

Json strings(const std::vector<std::string>& xs) {
  Json out = Json::array();
  for (const auto& s : xs) out.push_back(s);
  return out;
}

struct ParsedBrauerOO {
  br::BrauerOO oo;
  bool from_series;
};

ParsedBrauerOO parse_brauer_oo(const Json& j, int order) {
  if (j.contains("ratfunc")) return {br::BrauerOO::from_ratfunc(io::ratfunc_from_json(j.at("ratfunc")), order), false};
  if (j.contains("series")) return {br::BrauerOO::from_series(io::series_from_json(j.at("series"))), true};
  if (j.contains("omega")) return {br::oo_from_omega(br::OmegaSeq{io::scalars_from_json(j.at("omega"))}), true};
  throw ParseError("bubble data must be given as ratfunc, series or omega");
}

struct ParsedKauffmanOO {
  ka::KauffmanOO oo;
  bool from_series;
  std::optional<bool> admissible;
};

ParsedKauffmanOO parse_kauffman_oo(const Json& j, const ka::KauffmanParams& params, int order) {
  if (j.contains("ratfunc")) {
    return {ka::KauffmanOO::from_ratfunc(io::ratfunc_from_json(j.at("ratfunc")), params, order), false, std::nullopt};
  }
  if (j.contains("series")) {
    SeriesInf roo = io::series_from_json(j.at("series"));
    if (j.contains("loo_series")) {
      return {ka::KauffmanOO::from_series_pair(std::move(roo), io::series_from_json(j.at("loo_series")), params), true,
              std::nullopt};
    }
    return {ka::KauffmanOO::from_series(std::move(roo), params), true, std::nullopt};
  }
  if (j.contains("omega")) {
    std::vector<Scalar> neg;
    if (j.contains("omega_neg")) neg = io::scalars_from_json(j.at("omega_neg"));
    const auto w = ka::KOmegaSeq::make(io::scalars_from_json(j.at("omega")), std::move(neg), params);
    ka::KOmegaOO res = ka::roo_from_komega(w, params);
    return {std::move(res.oo), true, res.admissible};
  }
  throw ParseError("right bubble data must be given as ratfunc, series or omega");
}

Json brauer_classification_json(const br::BrauerClassification& c) {
  Json out;
  out["nonzero"] = c.nonzero;
  out["m"] = io::poly_to_json(c.m);
  out["p_hat"] = io::poly_to_json(c.p_hat);
  out["q_poly"] = io::poly_to_json(c.q_poly);
  out["q_degree"] = c.q_poly.degree();
  out["gcd_p_phat"] = io::poly_to_json(c.gcd_p_phat);
  out["branch"] = br::to_string(c.branch);
  out["oo_canonical"] = io::ratfunc_to_json(c.oo_canonical);
  out["grassmannian_ok"] = c.grassmannian_ok;
  out["hat_polynomial"] = c.hat_polynomial;
  return out;
}

Json eps_json(const std::optional<ka::EpsilonPair>& e) {
  if (!e) return nullptr;
  return Json::array({e->eps1, e->eps2});
}

Json kauffman_classification_json(const ka::KauffmanClassification& c) {
  Json out;
  out["nonzero"] = c.nonzero;
  out["m"] = io::poly_to_json(c.m);
  out["p_hat"] = io::poly_to_json(c.p_hat);
  out["big_r"] = io::poly_to_json(c.big_r);
  out["r1"] = io::poly_to_json(c.r1);
  out["gcd_p_phat"] = io::poly_to_json(c.gcd_p_phat);
  out["branch"] = c.branch ? Json(ka::to_string(*c.branch)) : Json(nullptr);
  out["eps"] = eps_json(c.eps);
  out["roo_canonical"] = io::ratfunc_to_json(c.roo_canonical);
  out["hat_polynomial"] = c.hat_polynomial;
  out["r_identity_ok"] = c.r_identity_ok;
  out["vanishing_orders_ok"] = c.vanishing_orders_ok;
  return out;
}

Json header(const std::string& command, int order) {
  Json out;
  out["command"] = command;
  out["order"] = order;
  return out;
}

Outcome brauer_classify(const Json& in, const Options& opt) {
  const int order = resolve_order(in, opt);
  const io::PolySpec p = io::polyspec_from_json(io::require(in, "p"));
  const ParsedBrauerOO oo = parse_brauer_oo(io::require(in, "oo"), order);
  if (opt.oracle && !p.roots) throw UsageError("--oracle needs p given by its roots");

  const br::BrauerClassification c = br::classify_brauer(p.poly, oo.oo, order);
  Outcome out;
  out.report = header("brauer classify", order);
  out.report["verdict"] = c.nonzero ? "nonzero" : "zero";
  out.report["certified_order"] = c.certified_order;
  out.report["exact"] = c.exact;
  out.report["p"] = io::poly_to_json(p.poly);
  out.report["classification"] = brauer_classification_json(c);
  if (opt.oracle) {
    const auto o = br::oracle_classify(*p.roots, oo.oo);
    const bool agrees = c.nonzero ? (o && *o == c.m) : !o;
    out.report["oracle"] = Json{{"m", optional_poly(o)}, {"agrees", agrees}};
    if (!agrees) out.exit_code = kExitFailure;
  }
  out.report["diagnostics"] = strings(c.diagnostics);
  if (c.grassmannian_ok && !c.hat_polynomial && oo.from_series && out.exit_code == kExitOk) {
    out.exit_code = kExitInconsistent;
  }
  return out;
}

Json admissibility_json(const br::AdmissibilityReport& a) {
  Json out;
  out["pass"] = a.pass;
  out["first_violation"] = optional_int(a.first_violation);
  out["grassmannian_pass"] = a.grassmannian_pass;
  out["grassmannian_first_violation"] = optional_int(a.grassmannian_first_violation);
  out["certified_order"] = a.certified_order;
  return out;
}

/// Weak admissibility and the brew form must agree; a disagreement is a failure.
Json weak_json(const br::OmegaSeq& w, const Poly& m, Outcome& out) {
  const auto weak = br::check_weak_admissible(w, m);
  const auto brew = br::brew_form(w, m);
  Json j;
  j["m"] = io::poly_to_json(m);
  j["pass"] = weak.pass;
  j["first_violation"] = optional_int(weak.first_violation);
  j["checked_up_to"] = weak.checked_up_to;
  j["brew_polynomial"] = io::poly_to_json(brew.polynomial);
  j["brew_tail_ok"] = brew.tail_ok;
  j["agree"] = weak.pass == brew.tail_ok;
  if (weak.pass != brew.tail_ok) out.exit_code = kExitFailure;
  return j;
}

Outcome brauer_omega(const Json& in, const Options& opt) {
  const int order = resolve_order(in, opt);
  Outcome out;
  out.report = header("brauer omega", order);
  br::OmegaSeq w;
  Poly m;
  if (in.contains("roots")) {
    const RootMultiset roots = io::scalars_from_json(in.at("roots"));
    w = br::omega_of_roots(roots, order);
    m = poly_from_roots(roots);
    out.report["source"] = "roots";
  } else if (in.contains("m")) {
    m = io::polyspec_from_json(in.at("m")).poly;
    const auto ext = br::extend_omega(m, io::scalars_from_json(io::require(in, "evens")), order);
    w = ext.omega;
    out.report["source"] = "extension";
    out.report["consistent"] = ext.consistent;
    out.report["first_violation"] = optional_int(ext.first_violation);
  } else {
    throw ParseError("brauer omega needs \"roots\" or \"m\" with \"evens\"");
  }
  out.report["omega"] = io::scalars_to_json(w.omega);
  out.report["oo"] = io::series_to_json(br::oo_from_omega(w).series());
  out.report["admissible"] = admissibility_json(br::check_admissible(w));
  if (m.degree() >= 1) out.report["weak"] = weak_json(w, m, out);
  return out;
}

Outcome brauer_check(const Json& in, const Options& opt) {
  const int order = resolve_order(in, opt);
  const br::OmegaSeq w{io::scalars_from_json(io::require(in, "omega"))};
  if (w.omega.empty()) throw ParseError("omega must not be empty");
  Outcome out;
  out.report = header("brauer check", order);
  out.report["admissible"] = admissibility_json(br::check_admissible(w));
  if (in.contains("m")) out.report["weak"] = weak_json(w, io::polyspec_from_json(in.at("m")).poly, out);
  if (in.contains("p")) {
    const Poly p = io::polyspec_from_json(in.at("p")).poly;
    const auto amp = br::algebra_min_poly(p, w, order);
    Json j;
    j["f"] = optional_poly(amp.f);
    j["goodman"] = amp.goodman;
    j["certified_order"] = amp.classification.certified_order;
    j["diagnostics"] = strings(amp.classification.diagnostics);
    out.report["algebra_min_poly"] = j;
  }
  return out;
}

Outcome kauffman_classify(const Json& in, const Options& opt) {
  const int order = resolve_order(in, opt);
  const ka::KauffmanParams params = io::params_from_json(io::require(in, "params"));
  const io::PolySpec p = io::polyspec_from_json(io::require(in, "p"));
  const ParsedKauffmanOO oo = parse_kauffman_oo(io::require(in, "roo"), params, order);
  if (opt.oracle && !p.roots) throw UsageError("--oracle needs p given by its roots");

  const ka::KauffmanClassification c = ka::classify_kauffman(p.poly, oo.oo, params, order);
  Outcome out;
  out.report = header("kauffman classify", order);
  out.report["params"] = io::params_to_json(params);
  out.report["verdict"] = c.nonzero ? "nonzero" : "zero";
  out.report["certified_order"] = c.certified_order;
  out.report["exact"] = c.exact;
  if (oo.admissible) out.report["admissible"] = *oo.admissible;
  out.report["p"] = io::poly_to_json(p.poly);
  out.report["classification"] = kauffman_classification_json(c);
  if (opt.oracle) {
    const auto o = ka::oracle_classify_k(*p.roots, oo.oo, params);
    const bool agrees = c.nonzero ? (o && *o == c.m) : !o;
    out.report["oracle"] = Json{{"m", optional_poly(o)}, {"agrees", agrees}};
    if (!agrees) out.exit_code = kExitFailure;
  }
  out.report["diagnostics"] = strings(c.diagnostics);
  if (!c.hat_polynomial && oo.from_series && out.exit_code == kExitOk) out.exit_code = kExitInconsistent;
  return out;
}

Outcome kauffman_series(const Json& in, const Options& opt) {
  const int order = resolve_order(in, opt);
  const ka::KauffmanParams params = io::params_from_json(io::require(in, "params"));
  Outcome out;
  out.report = header("kauffman series", order);
  out.report["params"] = io::params_to_json(params);
  if (in.contains("f")) {
    const Poly f = io::polyspec_from_json(in.at("f")).poly;
    const auto eps = ka::sneeze_check(f, params);
    const RatFunc roo = ka::roo_of_poly(f, params);
    const RatFunc loo = ka::loo_of_poly(f, params);
    const auto dual = ka::check_duality(f, params);
    out.report["f"] = io::poly_to_json(f);
    out.report["sneeze"] = eps.has_value();
    out.report["eps"] = eps_json(eps);
    out.report["roo"] = io::ratfunc_to_json(roo);
    out.report["loo"] = io::ratfunc_to_json(loo);
    out.report["roo_series"] = io::series_to_json(series_expand(roo, order));
    out.report["loo_series"] = io::series_to_json(series_expand(loo, order));
    out.report["duality"] = Json{{"inversion", dual.inversion}, {"product", dual.product}};
    const auto komega = ka::komega_from_roo(ka::KauffmanOO::from_ratfunc(roo, params, order), params);
    out.report["omega"] = io::scalars_to_json(komega.nonneg());
    out.report["omega_neg"] = io::scalars_to_json(komega.neg());
  } else if (in.contains("omega")) {
    std::vector<Scalar> neg;
    if (in.contains("omega_neg")) neg = io::scalars_from_json(in.at("omega_neg"));
    const auto w = ka::KOmegaSeq::make(io::scalars_from_json(in.at("omega")), std::move(neg), params);
    const ka::KOmegaOO res = ka::roo_from_komega(w, params);
    out.report["roo_series"] = io::series_to_json(res.oo.roo());
    out.report["loo_series"] = io::series_to_json(res.oo.loo());
    out.report["admissible"] = res.admissible;
    out.report["admissible_first_violation"] = optional_int(res.first_violation);
  } else {
    throw ParseError("kauffman series needs \"f\" or \"omega\"");
  }
  return out;
}

Outcome identity_suite(const Json& in, const Options& opt) {
  suite::Config cfg;
  cfg.order = resolve_order(in, opt);
  cfg.corrupt = opt.corrupt;
  cfg.threads = opt.threads;
  const auto results = suite::run_all(cfg);
  Outcome out;
  out.report = header("suite", cfg.order);
  bool all = true;
  Json batteries = Json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    batteries.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"cases", r.cases}, {"detail", r.detail}});
  }
  out.report["pass"] = all;
  out.report["certified_order"] = cfg.order;
  out.report["batteries"] = std::move(batteries);
  out.exit_code = all ? kExitOk : kExitFailure;
  return out;
}

Outcome error_outcome(const std::string& command, int code, const std::string& message) {
  Outcome out;
  out.exit_code = code;
  out.report["command"] = command;
  out.report["error"] = message;
  return out;
}

}  // namespace

Outcome run(const std::string& command, const Json& input, const Options& options) {
  try {
    if (!input.is_object()) throw ParseError("input document must be a JSON object");
    if (command == "brauer classify") return brauer_classify(input, options);
    if (command == "brauer omega") return brauer_omega(input, options);
    if (command == "brauer check") return brauer_check(input, options);
    if (command == "kauffman classify") return kauffman_classify(input, options);
    if (command == "kauffman series") return kauffman_series(input, options);
    if (command == "suite") return identity_suite(input, options);
    return error_outcome(command, kExitUsage, "unknown command");
  } catch (const TheoryViolation& e) {
    return error_outcome(command, kExitFailure, e.what());
  } catch (const ParseError& e) {
    return error_outcome(command, kExitUsage, e.what());
  } catch (const UsageError& e) {
    return error_outcome(command, kExitUsage, e.what());
  } catch (const Json::exception& e) {
    return error_outcome(command, kExitUsage, e.what());
  } catch (const std::invalid_argument& e) {
    return error_outcome(command, kExitUsage, e.what());
  } catch (const std::domain_error& e) {
    return error_outcome(command, kExitUsage, e.what());
  } catch (const std::out_of_range& e) {
    return error_outcome(command, kExitUsage, e.what());
  } catch (const std::exception& e) {
    return error_outcome(command, kExitFailure, e.what());
  }
}

Outcome run_text(const std::string& command, const std::string& input, const Options& options) {
  Json doc = Json::object();
  if (input.find_first_not_of(" \t\r\n") != std::string::npos) {
    try {
      doc = Json::parse(input);
    } catch (const Json::parse_error& e) {
      return error_outcome(command, kExitUsage, e.what());
    }
  }
  return run(command, doc, options);
}

std::string render_json(const Outcome& outcome) { return outcome.report.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

}  // namespace

std::string render_text(const Outcome& outcome) {
  std::ostringstream os;
  flatten(outcome.report, "", os);
  os << "exit: " << outcome.exit_code << "\n";
  return os.str();
}

}  // namespace bubbles::cli
