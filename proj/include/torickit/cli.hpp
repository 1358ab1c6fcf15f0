#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "torickit/io/json.hpp"

namespace torickit::cli {

using io::Json;

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kInvalidInput = 2, kPrecondition = 3, kMismatch = 4 };

struct RunConfig {
  std::string command;     // polygon | scaffold | periods
  std::string subcommand;  // classical | quantum | compare (periods only)
  std::optional<std::string> in;
  std::optional<std::string> fixture;
  std::string fixture_dir;
  long order = -1;  // unset: 6 for symbolic classical periods, 12 otherwise
  std::string format = "json";
  std::optional<std::string> out;
  bool symbolic = false;
  bool check_hull = false;
  bool timing = false;
  std::vector<std::string> assignments;  // "a1=1"
};

struct Report {
  int exit_code = kOk;
  Json body;

  std::string render(const std::string& format) const;
};

inline std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t h = 1469598103934665603ULL) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << x;
  return os.str();
}

/// Raw bytes and parsed JSON of one input document, plus where it came from.
struct LoadedInput {
  std::filesystem::path path;
  std::string bytes;
  Json json;
};

inline LoadedInput load_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot read '" + path.string() + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  LoadedInput in{path, ss.str(), {}};
  try {
    in.json = Json::parse(in.bytes);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "malformed JSON in '" + path.filename().string() + "': " + e.what());
  }
  return in;
}

/// Inputs consumed by a run, in load order; their bytes feed the input hash.
class InputSet {
 public:
  explicit InputSet(const RunConfig& cfg) : cfg_(cfg) {}

  LoadedInput primary() {
    if (cfg_.in && cfg_.fixture) throw Error(ErrorKind::InvalidInput, "give either --in or --fixture, not both");
    if (cfg_.in) return record(load_file(*cfg_.in));
    if (cfg_.fixture) return record(load_file(std::filesystem::path(cfg_.fixture_dir) / (*cfg_.fixture + ".json")));
    throw Error(ErrorKind::InvalidInput, "no input: use --in FILE or --fixture NAME");
  }

  /// File referenced from a manifest, relative to the manifest's directory.
  LoadedInput referenced(const LoadedInput& manifest, const std::string& key) {
    const Json& name = io::require(manifest.json, key.c_str());
    return record(load_file(manifest.path.parent_path() / name.get<std::string>()));
  }

  std::string hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const auto& b : seen_) h = fnv1a64(b, h);
    return hex64(h);
  }

  std::vector<std::string> names() const { return names_; }

 private:
  LoadedInput record(LoadedInput in) {
    seen_.push_back(in.bytes);
    names_.push_back(in.path.filename().string());
    return in;
  }
  const RunConfig& cfg_;
  std::vector<std::string> seen_;
  std::vector<std::string> names_;
};

inline Assignment parse_assignments(const std::vector<std::string>& items) {
  Assignment a;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::InvalidInput, "assignment must be NAME=VALUE, got '" + s + "'");
    a[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
  }
  return a;
}

// ---- polygon ----

inline Json polygon_report(const LatticePolygon& p) {
  auto records = singularity_report(p);
  Json edges = Json::array();
  for (const auto& r : records) edges.push_back(io::to_json(r));
  Json singular = Json::array();
  for (const auto& q : singular_points(records)) singular.push_back(q.to_string());
  RatPolygon dual = polar(p);
  auto sym = lattice_symmetries(p);
  Json elements = Json::array();
  for (const auto& g : sym.elements) elements.push_back(io::to_json(g));
  return Json{{"valid", true},
              {"polygon", io::to_json(p)},
              {"edges", edges},
              {"singular_points", singular},
              {"polar", io::to_json(dual)},
              {"polar_normalized_volume", io::to_json(normalized_volume(dual))},
              {"polar_barycenter", io::to_json(barycenter(dual))},
              {"k_polystable", is_k_polystable(p)},
              {"symmetry_order", sym.order()},
              {"symmetries", elements},
              {"qg_dimension", io::to_json(qg_dimension(p))},
              {"polar_edges_free_of_interior_lattice_points", polar_edges_have_no_interior_lattice_points(p)}};
}

inline Report cmd_polygon(const RunConfig&, InputSet& inputs) {
  auto in = inputs.primary();
  auto pts = io::polygon_points_from_json(in.json);
  return {kOk, polygon_report(validate_fano(pts))};
}

// ---- scaffold ----

/// Everything the scaffold pipeline computes, kept for reuse by `periods`.
struct ScaffoldRun {
  io::ScaffoldingInput input;
  HalfspaceSystem qs{0};
  std::vector<RatVec> qs_vertices;
  CoxPresentation computed;  // weights from the SNF basis
  CoxPresentation cox;       // weights in the requested class basis
  Hypersurface hypersurface;
  IntVec hypersurface_class;
  CoxPolynomial family;
};

inline ScaffoldRun run_scaffold(io::ScaffoldingInput input) {
  ScaffoldRun r;
  r.input = std::move(input);
  const Scaffolding& s = r.input.scaffolding;
  r.qs = build_QS(s);
  r.qs_vertices = vertices(r.qs);
  Fan fan = normal_fan(r.qs);
  std::vector<std::string> all = s.variable_names(), names;
  for (auto row : fan.source_rows) names.push_back(all.at(row));
  r.computed = cox_presentation(fan, names);
  r.cox = r.input.class_basis ? r.computed.with_class_basis(*r.input.class_basis) : r.computed;
  r.hypersurface = hypersurface_from_scaffolding(s, r.cox);
  auto cls = r.hypersurface.equation.homogeneous_class(r.cox);
  if (!cls) throw Error(ErrorKind::NotHomogeneous, "binomial equation is not homogeneous");
  r.hypersurface_class = *cls;
  r.family = r.hypersurface.equation;
  for (const auto& [powers, c] : r.input.deformation) r.family.add_term(powers, c);
  if (r.family.homogeneous_class(r.cox) != r.hypersurface_class)
    throw Error(ErrorKind::NotHomogeneous, "deformation terms are not in the class of the hypersurface");
  return r;
}

inline Json scaffold_report(const ScaffoldRun& r, bool check_hull, int& exit_code) {
  const auto& cox = r.cox;
  Json verts = Json::array();
  for (const auto& v : r.qs_vertices) verts.push_back(io::to_json(v));
  Json pairings = Json::object();
  for (std::size_t i = 0; i < cox.size(); ++i) pairings[cox.variables[i]] = io::to_json(r.hypersurface.pairings[i]);
  Json sections = Json::array();
  for (const auto& m : section_monomials(cox, r.hypersurface_class))
    sections.push_back(io::monomial_string(cox.variables, m));
  Json charts = Json::array();
  for (const auto& c : chart_analysis(cox, r.family)) charts.push_back(io::to_json(c));

  Json j;
  j["qs_inequalities"] = io::to_json(r.qs);
  j["qs_vertices"] = verts;
  j["cox"] = io::to_json(cox);
  j["computed_weight_matrix"] = io::to_json(r.computed.weights);
  j["class_basis_applied"] = r.input.class_basis.has_value();
  if (r.input.irrelevant_ideal_factors) {
    std::vector<std::vector<std::size_t>> factors;
    for (const auto& f : *r.input.irrelevant_ideal_factors) {
      std::vector<std::size_t> idx;
      for (const auto& name : f) idx.push_back(cox.index_of(name));
      factors.push_back(idx);
    }
    j["unstable_locus_matches_given_ideal"] =
        unstable_locus_equal(cox.irrelevant, expand_product_of_variable_ideals(factors, cox.size()));
  }
  j["hyperplane"] = io::to_json(r.hypersurface.h);
  j["pairings"] = pairings;
  j["equation"] = r.hypersurface.equation.to_string();
  j["hypersurface_class"] = io::to_json(r.hypersurface_class);
  j["anticanonical_minus_hypersurface"] = io::to_json(cox.anticanonical_class() - r.hypersurface_class);
  j["sections"] = sections;
  j["family"] = r.family.to_string();
  j["charts"] = charts;
  if (r.input.forced_zero) {
    Json fa = io::to_json(fiber_avoidance(cox, r.family, *r.input.forced_zero));
    fa["forced_zero"] = *r.input.forced_zero;
    j["fiber_avoidance"] = fa;
  }
  if (check_hull) {
    Json hull = Json::array();
    for (const auto& v : strut_hull(r.input.scaffolding)) hull.push_back(io::to_json(v));
    bool ok = hull_matches_target(r.input.scaffolding);
    j["hull"] = Json{{"vertices", hull}, {"equals_target", ok}};
    if (!ok) exit_code = kMismatch;
  }
  return j;
}

inline Report cmd_scaffold(const RunConfig& cfg, InputSet& inputs) {
  auto in = inputs.primary();
  auto run = run_scaffold(io::scaffolding_from_json(in.json));
  Report rep;
  rep.body = scaffold_report(run, cfg.check_hull, rep.exit_code);
  return rep;
}

// ---- periods ----

/// A periods input is a manifest (with "laurent"/"scaffolding" file
/// references), a Laurent polynomial, or a scaffolding.
struct PeriodsInputs {
  std::optional<ParamLaurent> laurent;
  std::optional<io::ScaffoldingInput> scaffolding;
  Assignment specialization;
  std::optional<RatSeries> expected_regularized;
};

inline PeriodsInputs load_periods_inputs(InputSet& inputs) {
  auto in = inputs.primary();
  PeriodsInputs out;
  const Json& j = in.json;
  if (j.contains("terms")) {
    out.laurent = io::laurent_from_json(j);
  } else if (j.contains("struts")) {
    out.scaffolding = io::scaffolding_from_json(j);
  } else {
    if (j.contains("laurent")) out.laurent = io::laurent_from_json(inputs.referenced(in, "laurent").json);
    if (j.contains("scaffolding")) out.scaffolding = io::scaffolding_from_json(inputs.referenced(in, "scaffolding").json);
    if (j.contains("specialization")) out.specialization = io::assignment_from_json(j.at("specialization"));
    if (j.contains("expected_regularized")) out.expected_regularized = io::rat_series_from_json(j.at("expected_regularized"));
    if (!out.laurent && !out.scaffolding) throw io::schema_error("manifest references neither 'laurent' nor 'scaffolding'");
  }
  return out;
}

inline Json classical_report(const ParamLaurent& f, const Assignment& values, bool symbolic, long order) {
  Json j;
  j["laurent"] = f.to_string();
  if (symbolic) {
    j["symbolic"] = true;
    j["params"] = io::laurent_params(f);
    j["series"] = io::series_to_json(classical_period(f, static_cast<std::size_t>(order)));
  } else {
    RatLaurent g = specialize(f, values);
    Json spec = Json::object();
    for (const auto& [k, v] : values) spec[k] = io::to_json(v);
    j["symbolic"] = false;
    j["specialization"] = spec;
    j["series"] = io::series_to_json(classical_period(g, static_cast<std::size_t>(order)));
  }
  return j;
}

inline Json quantum_report(const ScaffoldRun& r, const QuantumPeriod& q, const CurveClassCone& lambda,
                           const MoriNef& mn) {
  Json nef = Json::array(), lam = Json::array(), walls = Json::array();
  for (const auto& g : mn.nef.rays) nef.push_back(io::to_json(g));
  for (const auto& g : lambda.cone.rays) lam.push_back(io::to_json(g));
  for (const auto& w : mn.walls) {
    Json face = Json::array();
    for (auto i : w.wall) face.push_back(r.cox.variables[i]);
    walls.push_back(Json{{"wall", face}, {"relation", io::to_json(w.relation)}, {"curve_class", io::to_json(w.curve_class)}});
  }
  return Json{{"wall_curves", walls},
              {"nef_generators", nef},
              {"lambda_inequalities", io::to_json(lambda.system)},
              {"lambda_rays", lam},
              {"degree_functional", io::to_json(lambda.degree)},
              {"hypersurface_class", io::to_json(r.hypersurface_class)},
              {"lattice_points", q.terms.size()},
              {"G", io::series_to_json(q.G)},
              {"regularized", io::series_to_json(q.regularized)}};
}

inline Report cmd_periods(const RunConfig& cfg, InputSet& inputs) {
  auto pin = load_periods_inputs(inputs);
  Assignment values = pin.specialization;
  for (const auto& [k, v] : parse_assignments(cfg.assignments)) values[k] = v;
  const long order = cfg.order >= 0 ? cfg.order : (cfg.symbolic ? 6 : 12);

  auto need_laurent = [&]() -> const ParamLaurent& {
    if (!pin.laurent) throw Error(ErrorKind::InvalidInput, "input has no Laurent polynomial");
    return *pin.laurent;
  };
  auto quantum = [&](Json& j) {
    if (!pin.scaffolding) throw Error(ErrorKind::InvalidInput, "input has no scaffolding");
    auto run = run_scaffold(*pin.scaffolding);
    auto mn = mori_and_nef(run.cox);
    auto lambda = lambda_cone(run.cox, mn.nef.rays, run.hypersurface_class);
    auto q = quantum_period(run.cox, lambda, run.hypersurface_class, order);
    j = quantum_report(run, q, lambda, mn);
    return q.regularized;
  };

  Report rep;
  if (cfg.subcommand == "classical") {
    rep.body = classical_report(need_laurent(), values, cfg.symbolic, order);
  } else if (cfg.subcommand == "quantum") {
    Json j;
    RatSeries reg = quantum(j);
    if (pin.expected_regularized) {
      auto cmp = compare_series(reg, *pin.expected_regularized, std::min<std::size_t>(order, pin.expected_regularized->order()));
      j["expected"] = Json{{"verdict", cmp.verdict()}, {"equal", cmp.equal}};
      if (!cmp.equal) rep.exit_code = kMismatch;
    }
    rep.body = j;
  } else if (cfg.subcommand == "compare") {
    Json qj;
    RatSeries reg = quantum(qj);
    RatSeries classical = classical_period(specialize(need_laurent(), values), static_cast<std::size_t>(order));
    auto cmp = compare_series(reg, classical, static_cast<std::size_t>(order));
    Json spec = Json::object();
    for (const auto& [k, v] : values) spec[k] = io::to_json(v);
    rep.body = Json{{"verdict", cmp.verdict()},
                    {"equal", cmp.equal},
                    {"order", order},
                    {"specialization", spec},
                    {"regularized_quantum_period", io::series_to_json(reg)},
                    {"classical_period", io::series_to_json(classical)}};
    if (cmp.first_mismatch) rep.body["first_mismatch"] = *cmp.first_mismatch;
    if (!cmp.equal) rep.exit_code = kMismatch;
  } else {
    throw Error(ErrorKind::InvalidInput, "unknown periods subcommand '" + cfg.subcommand + "'");
  }
  return rep;
}

inline int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::UnassignedParameter:
      return kInvalidInput;
    default:
      return kPrecondition;
  }
}

/// Runs one command; never throws. Errors become reports with an "error" object.
inline Report run(const RunConfig& cfg) {
  InputSet inputs(cfg);
  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (cfg.command == "polygon") rep = cmd_polygon(cfg, inputs);
    else if (cfg.command == "scaffold") rep = cmd_scaffold(cfg, inputs);
    else if (cfg.command == "periods") rep = cmd_periods(cfg, inputs);
    else throw Error(ErrorKind::InvalidInput, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    rep.exit_code = exit_code_for(e.kind());
    rep.body = Json{{"error", Json{{"kind", to_string(e.kind())}, {"message", e.what()}}}};
  } catch (const nlohmann::json::exception& e) {
    rep.exit_code = kInvalidInput;
    rep.body = Json{{"error", Json{{"kind", "InvalidInput"}, {"message", e.what()}}}};
  }
  Json full;
  full["command"] = cfg.subcommand.empty() ? cfg.command : cfg.command + " " + cfg.subcommand;
  full["result"] = rep.body;
  Json prov{{"tool", std::string("torickit ") + kVersion},
            {"gmp", gmp_version},
            {"inputs", inputs.names()},
            {"input_hash", "fnv1a64:" + inputs.hash()}};
  if (cfg.command == "periods") prov["order"] = cfg.order >= 0 ? cfg.order : (cfg.symbolic ? 6 : 12);
  if (cfg.timing) {
    auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    prov["elapsed_us"] = us.count();
  }
  full["provenance"] = prov;
  full["exit_code"] = rep.exit_code;
  rep.body = std::move(full);
  return rep;
}

namespace detail {

inline void render_text(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render_text(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() && (j[0].is_object() || (j[0].is_array() && !j[0].empty() && j[0][0].is_array()))) {
    for (std::size_t i = 0; i < j.size(); ++i) render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

// like dump(2), but arrays of scalars and of scalar arrays stay on one line
inline bool is_flat(const Json& j) {
  if (!j.is_array()) return j.is_primitive();
  for (const auto& e : j)
    if (e.is_structured() && !(e.is_array() && std::all_of(e.begin(), e.end(), [](const Json& x) { return x.is_primitive(); })))
      return false;
  return true;
}

inline void render_json(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [k, v] : j.items()) {
      out += pad + Json(k).dump() + ": ";
      render_json(v, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
  } else if (j.is_array() && !j.empty() && !is_flat(j)) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      render_json(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace detail

inline std::string Report::render(const std::string& format) const {
  if (format == "text") {
    std::string out;
    detail::render_text(body, "", out);
    return out;
  }
  std::string out;
  detail::render_json(body, 0, out);
  return out + "\n";
}

}  // namespace torickit::cli
