#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torickit/charts.hpp"
#include "torickit/laurent.hpp"
#include "torickit/polygon.hpp"
#include "torickit/quantum.hpp"
#include "torickit/scaffolding.hpp"
#include "torickit/series.hpp"

namespace torickit::io {

using Json = nlohmann::ordered_json;

inline Error schema_error(const std::string& what) { return Error(ErrorKind::InvalidInput, what); }

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw schema_error(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline BigInt int_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    BigRat q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw schema_error("expected an integer, got '" + j.get<std::string>() + "'");
    return q.get_num();
  }
  throw schema_error("expected an integer, got " + j.dump());
}

inline BigRat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return BigRat(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw schema_error("expected a rational string, got " + j.dump());
}

inline IntVec int_vec_from_json(const Json& j) {
  if (!j.is_array()) throw schema_error("expected an integer array, got " + j.dump());
  std::vector<BigInt> v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return IntVec(std::move(v));
}

inline IntMat int_mat_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw schema_error("expected a nonempty matrix");
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(int_vec_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw schema_error("matrix rows differ in length");
  return IntMat::from_rows(rows, rows[0].size());
}

// Integers that fit in a long are written as numbers, rationals as strings.
inline Json to_json(const BigInt& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}
inline Json to_json(const BigRat& x) { return Json(to_string(x)); }

inline Json to_json(const IntVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}
inline Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}
inline Json to_json(const IntMat& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

template <class C>
Json series_to_json(const PowerSeries<C>& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline RatSeries rat_series_from_json(const Json& j) {
  const Json& coeffs = require(j, "coeffs");
  std::size_t order = j.contains("order") ? j.at("order").get<std::size_t>() : coeffs.size() - 1;
  if (!coeffs.is_array() || coeffs.size() != order + 1) throw schema_error("series needs order+1 coefficients");
  RatSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = rat_from_json(coeffs[i]);
  return s;
}

inline ParamSeries param_series_from_json(const Json& j) {
  const Json& coeffs = require(j, "coeffs");
  std::size_t order = j.contains("order") ? j.at("order").get<std::size_t>() : coeffs.size() - 1;
  if (!coeffs.is_array() || coeffs.size() != order + 1) throw schema_error("series needs order+1 coefficients");
  ParamSeries s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = ParamPoly::parse(coeffs[i].get<std::string>());
  return s;
}

// ---- polygons ----

inline std::vector<IntVec> polygon_points_from_json(const Json& j) {
  const Json& v = require(j, "vertices");
  if (!v.is_array()) throw schema_error("'vertices' must be an array");
  std::vector<IntVec> pts;
  for (const auto& p : v) {
    if (!p.is_array() || p.size() != 2) throw schema_error("polygon vertices must be integer pairs");
    for (const auto& x : p)
      if (!x.is_number_integer()) throw schema_error("polygon coordinates must be integers, got " + x.dump());
    pts.push_back(int_vec_from_json(p));
  }
  return pts;
}

inline Json to_json(const LatticePolygon& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return Json{{"vertices", v}};
}

inline Json to_json(const RatPolygon& p) {
  Json v = Json::array();
  for (const auto& x : p.vertices()) v.push_back(to_json(x));
  return Json{{"vertices", v}};
}

inline Json to_json(const SingularityRecord& r) {
  return Json{{"edge", r.edge},
              {"quotient", r.quotient.to_string()},
              {"lattice_length", to_json(r.length)},
              {"lattice_height", to_json(r.height)},
              {"t_count", to_json(r.t_count)},
              {"residue", to_json(r.residue)},
              {"is_T", r.is_T},
              {"is_rigid", r.is_rigid},
              {"is_smooth", r.is_smooth}};
}

// ---- Laurent polynomials ----

inline ParamLaurent laurent_from_json(const Json& j) {
  std::vector<std::string> declared;
  if (j.contains("params"))
    for (const auto& p : j.at("params")) declared.push_back(p.get<std::string>());
  const Json& terms = require(j, "terms");
  if (!terms.is_array() || terms.empty()) throw schema_error("'terms' must be a nonempty array");
  std::size_t nvars = require(terms[0], "exp").size();
  ParamLaurent f(nvars);
  for (const auto& t : terms) {
    const Json& e = require(t, "exp");
    if (!e.is_array() || e.size() != nvars) throw schema_error("all exponents must have the same length");
    Exponent exp;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw schema_error("exponents must be integers");
      exp.push_back(x.get<long>());
    }
    const Json& c = require(t, "coeff");
    ParamPoly coeff = c.is_string() ? ParamPoly::parse(c.get<std::string>()) : ParamPoly(rat_from_json(c));
    if (j.contains("params"))
      for (const auto& p : coeff.params())
        if (std::find(declared.begin(), declared.end(), p) == declared.end())
          throw schema_error("coefficient uses undeclared parameter '" + p + "'");
    f.add_term(exp, coeff);
  }
  return f;
}

inline std::vector<std::string> laurent_params(const ParamLaurent& f) {
  std::set<std::string> names;
  for (const auto& [e, c] : f.terms())
    for (const auto& p : c.params()) names.insert(p);
  return {names.begin(), names.end()};
}

inline Json to_json(const ParamLaurent& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back(Json{{"exp", e}, {"coeff", to_string(c)}});
  return Json{{"params", laurent_params(f)}, {"terms", terms}};
}

inline Assignment assignment_from_json(const Json& j) {
  if (!j.is_object()) throw schema_error("assignment must be an object");
  Assignment a;
  for (const auto& [k, v] : j.items()) a[k] = rat_from_json(v);
  return a;
}

// ---- scaffoldings ----

/// A scaffolding file plus the optional data that drives the later stages.
struct ScaffoldingInput {
  Scaffolding scaffolding;
  std::optional<IntMat> class_basis;
  std::vector<std::pair<std::map<std::string, unsigned>, ParamPoly>> deformation;
  std::optional<std::vector<std::string>> forced_zero;
  std::optional<std::vector<std::vector<std::string>>> irrelevant_ideal_factors;
};

inline ScaffoldingInput scaffolding_from_json(const Json& j) {
  ScaffoldingInput in;
  const Json& shape = require(j, "shape");
  std::vector<unsigned> dims;
  for (const auto& d : require(shape, "projective_dims")) {
    if (!d.is_number_integer() || d.get<long>() <= 0) throw schema_error("projective_dims must be positive integers");
    dims.push_back(d.get<unsigned>());
  }
  Scaffolding& s = in.scaffolding;
  s.shape = ShapeVariety(dims);
  s.n_u_rank = require(j, "n_u_rank").get<std::size_t>();
  const Json& struts = require(j, "struts");
  if (!struts.is_array()) throw schema_error("'struts' must be an array");
  for (const auto& st : struts)
    s.struts.push_back({require(st, "name").get<std::string>(), int_vec_from_json(require(st, "divisor")),
                        int_vec_from_json(require(st, "chi"))});
  if (j.contains("shape_divisor_names"))
    for (const auto& n : j.at("shape_divisor_names")) s.shape_divisor_names.push_back(n.get<std::string>());
  if (j.contains("target")) s.target = validate_fano(polygon_points_from_json(j.at("target")));
  if (j.contains("class_basis")) in.class_basis = int_mat_from_json(j.at("class_basis"));
  if (j.contains("deformation"))
    for (const auto& t : j.at("deformation")) {
      std::map<std::string, unsigned> powers;
      for (const auto& [k, v] : require(t, "monomial").items()) powers[k] = v.get<unsigned>();
      in.deformation.emplace_back(powers, ParamPoly::parse(require(t, "coeff").get<std::string>()));
    }
  if (j.contains("forced_zero")) in.forced_zero = j.at("forced_zero").get<std::vector<std::string>>();
  if (j.contains("irrelevant_ideal_factors"))
    in.irrelevant_ideal_factors = j.at("irrelevant_ideal_factors").get<std::vector<std::vector<std::string>>>();
  s.validate();
  return in;
}

inline Json to_json(const HalfspaceSystem& hs) {
  Json rows = Json::array();
  for (const auto& h : hs.rows()) rows.push_back(Json{{"normal", to_json(h.normal)}, {"bound", to_json(h.bound)}});
  return rows;
}

inline std::string monomial_string(const std::vector<std::string>& vars, const CoxMonomial& e) {
  return CoxPolynomial(vars).monomial_string(e);
}

inline Json to_json(const CoxPresentation& cox) {
  Json rays = Json::object(), classes = Json::object();
  for (std::size_t i = 0; i < cox.size(); ++i) {
    rays[cox.variables[i]] = to_json(cox.fan.rays[i]);
    classes[cox.variables[i]] = to_json(cox.variable_class(i));
  }
  Json cones = Json::array();
  for (const auto& c : cox.fan.maximal_cones) {
    Json names = Json::array();
    for (auto i : c) names.push_back(cox.variables[i]);
    cones.push_back(names);
  }
  Json irr = Json::array();
  for (const auto& m : cox.irrelevant) irr.push_back(monomial_string(cox.variables, m));
  return Json{{"variables", cox.variables},
              {"rays", rays},
              {"maximal_cones", cones},
              {"weight_matrix", to_json(cox.weights)},
              {"weight_matrix_hnf", to_json(hnf(cox.weights).H)},
              {"variable_classes", classes},
              {"anticanonical_class", to_json(cox.anticanonical_class())},
              {"irrelevant_generators", irr}};
}

inline Json to_json(const AbelianQuotient& q) {
  Json factors = Json::array();
  for (const auto& f : q.factors()) {
    Json w = Json::array();
    for (const auto& x : f.weights) w.push_back(to_json(x));
    factors.push_back(Json{{"order", to_json(f.order)}, {"weights", w}});
  }
  return Json{{"symbol", q.to_string()},
              {"coordinates", q.coordinates()},
              {"index", to_json(q.index())},
              {"cyclic", q.is_cyclic()},
              {"factors", factors}};
}

inline Json to_json(const ChartReport& r) {
  return Json{{"coordinates", r.coordinates},
              {"quotient", to_json(r.quotient)},
              {"local_equation", r.local_equation.to_string()},
              {"constant_term", to_string(r.constant_term)},
              {"has_constant_term", r.has_constant_term},
              {"linear_variables", r.linear_variables},
              {"quasi_smooth_linear_variable", r.quasi_smooth_linear_variable},
              {"semi_invariant", r.semi_invariant}};
}

inline Json to_json(const FiberAvoidance& f) {
  Json j{{"verdict", f.verified ? "Verified" : "Inconclusive"}, {"patterns_checked", f.patterns_checked}};
  if (f.witness) {
    j["witness"] = *f.witness;
    j["reason"] = f.reason;
  }
  return j;
}

}  // namespace torickit::io
