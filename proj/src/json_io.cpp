#include "carlitz/json_io.hpp"

#include <stdexcept>

namespace carlitz {

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw std::domain_error("json: " + what);
}

ExpVec expvec_from_json(const Json& j, const char* what) {
  if (!j.is_array()) malformed(std::string(what) + " must be an array");
  ExpVec e;
  e.reserve(j.size());
  for (const auto& item : j) {
    if (!item.is_number_integer()) malformed(std::string(what) + " entries must be integers");
    e.push_back(item.get<Exp>());
  }
  return e;
}

Json expvec_to_json(const ExpVec& e) {
  Json j = Json::array();
  for (Exp x : e) j.push_back(x);
  return j;
}

}  // namespace

Json poly_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json term;
    term["exp"] = expvec_to_json(e);
    term["coeff"] = to_string(c);
    terms.push_back(std::move(term));
  }
  Json j;
  j["dim"] = p.dim();
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    malformed("polynomial must be an object with dim and terms");
  if (!j["dim"].is_number_integer()) malformed("polynomial dim must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) malformed("polynomial dim must be >= 1");
  if (!j["terms"].is_array()) malformed("polynomial terms must be an array");
  LaurentPoly p(dim);
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("exp") || !term.contains("coeff"))
      malformed("polynomial term must have exp and coeff");
    ExpVec e = expvec_from_json(term["exp"], "term exp");
    if (static_cast<int>(e.size()) != dim) malformed("term exp length != dim");
    if (!term["coeff"].is_string()) malformed("term coeff must be a decimal string");
    p.add_term(e, parse_bigint(term["coeff"].get<std::string>()));
  }
  return p;
}

Json ratterm_to_json(const RatTerm& t) {
  Json j;
  j["sign"] = t.sign;
  j["numer"] = poly_to_json(t.numer);
  Json denom = Json::array();
  for (const auto& f : t.denom) denom.push_back(expvec_to_json(f.monomial));
  j["denom"] = std::move(denom);
  return j;
}

Json ratfun_to_json(const ShortRatFun& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back(ratterm_to_json(t));
  Json j;
  j["dim"] = f.dim();
  j["terms"] = std::move(terms);
  return j;
}

ShortRatFun ratfun_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("terms"))
    malformed("rational function must be an object with dim and terms");
  if (!j["dim"].is_number_integer()) malformed("rational function dim must be an integer");
  const int dim = j["dim"].get<int>();
  if (dim < 1) malformed("rational function dim must be >= 1");
  if (!j["terms"].is_array()) malformed("rational function terms must be an array");
  ShortRatFun f(dim);
  for (const auto& term : j["terms"]) {
    if (!term.is_object() || !term.contains("sign") || !term.contains("numer") ||
        !term.contains("denom"))
      malformed("rational term must have sign, numer, denom");
    if (!term["sign"].is_number_integer()) malformed("rational term sign must be +-1");
    const int sign = term["sign"].get<int>();
    if (sign != 1 && sign != -1) malformed("rational term sign must be +-1");
    LaurentPoly numer = poly_from_json(term["numer"]);
    if (!term["denom"].is_array()) malformed("rational term denom must be an array");
    std::vector<BinFactor> denom;
    for (const auto& fac : term["denom"]) {
      ExpVec m = expvec_from_json(fac, "denominator factor");
      if (static_cast<int>(m.size()) != dim) malformed("denominator factor length != dim");
      denom.push_back(BinFactor{std::move(m)});
    }
    f.push_term(RatTerm(sign, std::move(numer), std::move(denom)));
  }
  return f;
}

Json cone_to_json(const SimplicialCone& c) {
  Json j;
  j["apex"] = expvec_to_json(c.apex());
  Json gens = Json::array();
  for (const auto& g : c.generators()) gens.push_back(expvec_to_json(g));
  j["generators"] = std::move(gens);
  Json open = Json::array();
  for (bool o : c.open_flags()) open.push_back(o);
  j["open"] = std::move(open);
  return j;
}

SimplicialCone cone_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("apex") || !j.contains("generators") ||
      !j.contains("open"))
    malformed("cone must be an object with apex, generators, open");
  ExpVec apex = expvec_from_json(j["apex"], "apex");
  if (!j["generators"].is_array()) malformed("cone generators must be an array");
  std::vector<ExpVec> gens;
  for (const auto& g : j["generators"])
    gens.push_back(expvec_from_json(g, "generator"));
  if (!j["open"].is_array()) malformed("cone open flags must be an array");
  std::vector<bool> open;
  for (const auto& o : j["open"]) {
    if (!o.is_boolean()) malformed("cone open flags must be booleans");
    open.push_back(o.get<bool>());
  }
  return SimplicialCone(std::move(apex), std::move(gens), std::move(open));
}

Json report_to_json(const IdentityReport& r) {
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  Json j;
  j["identity"] = r.identity;
  j["params"] = std::move(params);
  j["holds"] = r.holds;
  if (r.lhs_poly) {
    j["lhs"] = poly_to_json(*r.lhs_poly);
    j["rhs"] = poly_to_json(*r.rhs_poly);
    j["diff"] = r.holds ? Json(nullptr) : poly_to_json(*r.diff_poly);
  } else {
    j["lhs"] = to_string(*r.lhs_rat);
    j["rhs"] = to_string(*r.rhs_rat);
    j["diff"] = r.holds ? Json(nullptr) : Json(to_string(*r.diff_rat));
  }
  return j;
}

Json ehrhart_to_json(const EhrhartCubic& e) {
  Json j;
  j["c3"] = to_string(e.c3);
  j["c2"] = to_string(e.c2);
  j["c1"] = to_string(e.c1);
  j["c0"] = to_string(e.c0);
  return j;
}

}  // namespace carlitz
