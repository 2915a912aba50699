#include "wow/json_io.hpp"

#include <fstream>

namespace wow {

namespace {

std::vector<double> weights_from(const json& j) {
  require(j.contains("weights") && j["weights"].is_array(),
          ErrorCode::parse_error, "missing weights array");
  return j["weights"].get<std::vector<double>>();
}

Point point_from(const json& j) {
  require(j.is_array() && !j.empty(), ErrorCode::parse_error,
          "a point must be a non-empty array");
  return Point(j.get<std::vector<double>>());
}

json point_to(const Point& p) { return json(p.coords()); }

}  // namespace

json to_json(const DiscreteMeasure& mu) {
  json pts = json::array();
  for (int i = 0; i < mu.size(); ++i) pts.push_back(point_to(mu.point(i)));
  return json{{"points", pts}, {"weights", mu.weights()}};
}

DiscreteMeasure measure_from_json(const json& j) {
  require(j.is_object() && j.contains("points") && j["points"].is_array(),
          ErrorCode::parse_error, "measure: missing points array");
  std::vector<Point> pts;
  for (const auto& p : j["points"]) pts.push_back(point_from(p));
  return DiscreteMeasure(std::move(pts), weights_from(j));
}

json to_json(const Coupling& gamma) {
  json pairs = json::array();
  for (int i = 0; i < gamma.size(); ++i)
    pairs.push_back(json::array(
        {point_to(gamma.pair(i).first), point_to(gamma.pair(i).second)}));
  return json{{"pairs", pairs}, {"weights", gamma.weights()}};
}

Coupling coupling_from_json(const json& j) {
  require(j.is_object() && j.contains("pairs") && j["pairs"].is_array(),
          ErrorCode::parse_error, "coupling: missing pairs array");
  std::vector<std::pair<Point, Point>> pairs;
  for (const auto& p : j["pairs"]) {
    require(p.is_array() && p.size() == 2, ErrorCode::parse_error,
            "coupling: each pair must hold two points");
    pairs.emplace_back(point_from(p[0]), point_from(p[1]));
  }
  return Coupling(std::move(pairs), weights_from(j));
}

json to_json(const RandomLaw& m) {
  json atoms = json::array();
  for (int k = 0; k < m.size(); ++k) atoms.push_back(to_json(m.atom(k)));
  return json{{"atoms", atoms}, {"weights", m.weights()}};
}

RandomLaw law_from_json(const json& j) {
  require(j.is_object() && j.contains("atoms") && j["atoms"].is_array(),
          ErrorCode::parse_error, "law: missing atoms array");
  std::vector<DiscreteMeasure> atoms;
  for (const auto& a : j["atoms"]) atoms.push_back(measure_from_json(a));
  return RandomLaw(std::move(atoms), weights_from(j));
}

json to_json(const RandomCouplingLaw& p) {
  json atoms = json::array();
  for (int k = 0; k < p.size(); ++k) atoms.push_back(to_json(p.atom(k)));
  return json{{"atoms", atoms}, {"weights", p.weights()}};
}

RandomCouplingLaw random_coupling_from_json(const json& j) {
  require(j.is_object() && j.contains("atoms") && j["atoms"].is_array(),
          ErrorCode::parse_error, "random coupling law: missing atoms array");
  std::vector<Coupling> atoms;
  for (const auto& a : j["atoms"]) atoms.push_back(coupling_from_json(a));
  return RandomCouplingLaw(std::move(atoms), weights_from(j));
}

json to_json(const LagrangianMap& x) {
  json vals = json::array();
  for (int q = 0; q < x.labels(); ++q) vals.push_back(point_to(x.value(q)));
  return json{{"n", x.labels()}, {"values", vals}};
}

LagrangianMap lagrangian_from_json(const json& j) {
  require(j.is_object() && j.contains("values") && j["values"].is_array(),
          ErrorCode::parse_error, "lagrangian map: missing values array");
  std::vector<Point> vals;
  for (const auto& p : j["values"]) vals.push_back(point_from(p));
  if (j.contains("n"))
    require(j["n"].get<int>() == static_cast<int>(vals.size()),
            ErrorCode::parse_error, "lagrangian map: n != |values|");
  return LagrangianMap(std::move(vals));
}

json grid_table_to_json(const FunctionalSpec& phi) {
  require(phi.kind == FunctionalSpec::Kind::grid_table,
          ErrorCode::invalid_input, "not a grid table");
  json grid = json::array();
  for (const auto& mu : phi.grid) grid.push_back(to_json(mu));
  return json{{"grid", grid}, {"values", phi.values}};
}

FunctionalSpec grid_table_from_json(const json& j) {
  require(j.is_object() && j.contains("grid") && j["grid"].is_array(),
          ErrorCode::parse_error, "grid table: missing grid array");
  require(j.contains("values") && j["values"].is_array(),
          ErrorCode::parse_error, "grid table: missing values array");
  std::vector<DiscreteMeasure> grid;
  for (const auto& g : j["grid"]) grid.push_back(measure_from_json(g));
  return FunctionalSpec::table(std::move(grid),
                               j["values"].get<std::vector<double>>());
}

FunctionalSpec functional_from_json(const json& j) {
  require(j.is_object() && j.contains("kind") && j["kind"].is_string(),
          ErrorCode::parse_error, "functional: missing kind");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "quadratic") return FunctionalSpec::quadratic();
  if (kind == "norm") return FunctionalSpec::norm();
  if (kind == "half_sq_dist") return FunctionalSpec::half_sq_dist();
  if (kind == "dist") return FunctionalSpec::dist();
  if (kind == "linear") {
    require(j.contains("c") && j["c"].is_array(), ErrorCode::parse_error,
            "linear functional: missing direction c");
    return FunctionalSpec::linear(Point(j["c"].get<std::vector<double>>()));
  }
  if (kind == "max_pairing") {
    require(j.contains("nu"), ErrorCode::parse_error,
            "pairing functional: missing reference measure nu");
    return FunctionalSpec::max_pairing(measure_from_json(j["nu"]));
  }
  if (kind == "grid_table") return grid_table_from_json(j);
  throw Error(ErrorCode::parse_error, "functional: unknown kind " + kind);
}

json to_json(const GaussianSpec& spec) {
  json j;
  switch (spec.basis) {
    case GaussianSpec::Basis::brownian:
      j["basis"] = "brownian";
      break;
    case GaussianSpec::Basis::bridge_sine:
      j["basis"] = "bridge_sine";
      break;
    case GaussianSpec::Basis::walsh:
      j["basis"] = "walsh";
      break;
    case GaussianSpec::Basis::fbm:
      j["basis"] = "fbm";
      break;
  }
  j["dim"] = spec.dim;
  j["seed"] = spec.seed;
  if (spec.labels > 0) j["labels"] = spec.labels;
  if (spec.truncation > 0) j["truncation"] = spec.truncation;
  if (!spec.lambdas.empty()) j["lambdas"] = spec.lambdas;
  if (spec.walsh_level > 0) j["level"] = spec.walsh_level;
  if (!spec.walsh_scales.empty()) j["scales"] = spec.walsh_scales;
  if (spec.basis == GaussianSpec::Basis::fbm) j["hurst"] = spec.hurst;
  return j;
}

GaussianSpec gaussian_spec_from_json(const json& j) {
  require(j.is_object() && j.contains("basis") && j["basis"].is_string(),
          ErrorCode::parse_error, "spec: missing basis");
  GaussianSpec spec;
  std::string basis = j["basis"].get<std::string>();
  if (basis == "brownian")
    spec.basis = GaussianSpec::Basis::brownian;
  else if (basis == "bridge_sine")
    spec.basis = GaussianSpec::Basis::bridge_sine;
  else if (basis == "walsh")
    spec.basis = GaussianSpec::Basis::walsh;
  else if (basis == "fbm")
    spec.basis = GaussianSpec::Basis::fbm;
  else
    throw Error(ErrorCode::parse_error, "spec: unknown basis " + basis);
  if (j.contains("dim")) spec.dim = j["dim"].get<int>();
  if (j.contains("labels")) spec.labels = j["labels"].get<int>();
  if (j.contains("truncation")) spec.truncation = j["truncation"].get<int>();
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("lambdas"))
    spec.lambdas = j["lambdas"].get<std::vector<double>>();
  if (j.contains("level")) spec.walsh_level = j["level"].get<int>();
  if (j.contains("scales"))
    spec.walsh_scales = j["scales"].get<std::vector<double>>();
  if (j.contains("hurst")) spec.hurst = j["hurst"].get<double>();
  if (spec.basis == GaussianSpec::Basis::walsh && spec.labels == 0)
    spec.labels = 1 << spec.walsh_level;
  spec.validate();
  return spec;
}

json to_json(const RegularityReport& rep) {
  json j{{"criterion", rep.criterion},
         {"verdict", rep.verdict},
         {"ratio_estimate", rep.ratio_estimate},
         {"note", rep.note}};
  if (!rep.partial_sums.empty()) j["partial_sums"] = rep.partial_sums;
  if (rep.criterion == "berman_integral") {
    j["estimate"] = rep.estimate;
    j["standard_error"] = rep.standard_error;
    j["probe"] = rep.probe;
  }
  return j;
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), ErrorCode::parse_error, "malformed JSON");
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::parse_error, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_json(text);
}

}  // namespace wow
