#include "mextremal/io.hpp"

#include "mextremal/error.hpp"

namespace mextremal {

const json& require_key(const json& j, const char* key) {
  require(j.is_object() && j.contains(key), ErrorKind::Schema, std::string("missing key '") + key + "'");
  return j.at(key);
}

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  require(j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number(), ErrorKind::Schema,
          "complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const cvec& v) {
  json a = json::array();
  for (const cplx z : v) a.push_back(to_json(z));
  return a;
}

cvec cvec_from_json(const json& j) {
  require(j.is_array(), ErrorKind::Schema, "expected an array of complex numbers");
  cvec v;
  for (const json& x : j) v.push_back(complex_from_json(x));
  return v;
}

json to_json(const NumericPolicy& p) {
  return {{"unimodular_tol", p.unimodular_tol},       {"singular_tol", p.singular_tol},
          {"boundary_band", p.boundary_band},         {"infeasible_slack", p.infeasible_slack},
          {"circle_grid", p.circle_grid},             {"construction_grid", p.construction_grid},
          {"boundary_samples", p.boundary_samples},   {"bisection_max_steps", p.bisection_max_steps}};
}

NumericPolicy policy_from_json(const json& j, NumericPolicy base) {
  require(j.is_object(), ErrorKind::Schema, "numeric policy must be an object");
  auto read = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  read("unimodular_tol", base.unimodular_tol);
  read("singular_tol", base.singular_tol);
  read("boundary_band", base.boundary_band);
  read("infeasible_slack", base.infeasible_slack);
  read("circle_grid", base.circle_grid);
  read("construction_grid", base.construction_grid);
  read("boundary_samples", base.boundary_samples);
  read("bisection_max_steps", base.bisection_max_steps);
  return base;
}

json to_json(const DomainModel& dom) {
  json j;
  if (std::holds_alternative<UnitDisc>(dom.shape)) {
    j = {{"type", "disc"}};
  } else if (const auto* pd = std::get_if<Polydisc>(&dom.shape)) {
    j = {{"type", "polydisc"}, {"n", pd->n}};
  } else if (const auto* b = std::get_if<Ball>(&dom.shape)) {
    j = {{"type", "ball"}, {"n", b->n}};
  } else if (const auto* e = std::get_if<Ellipsoid>(&dom.shape)) {
    j = {{"type", "ellipsoid"}, {"p", e->p}};
  } else {
    const auto& g = std::get<CustomGauge>(dom.shape);
    json terms = json::array();
    for (const GaugeTerm& t : g.terms) terms.push_back({{"coords", t.coords}, {"exponent", t.exponent}});
    j = {{"type", "gauge"}, {"name", g.name}, {"n", g.n}, {"terms", terms}};
  }
  j["k"] = dom.k;
  return j;
}

DomainModel domain_from_json(const json& j) {
  const std::string type = require_key(j, "type").get<std::string>();
  DomainModel dom;
  if (type == "disc") {
    dom = unit_disc();
  } else if (type == "polydisc") {
    dom = polydisc(require_key(j, "n").get<int>());
  } else if (type == "ball") {
    dom = ball(require_key(j, "n").get<int>());
  } else if (type == "ellipsoid") {
    dom = ellipsoid(require_key(j, "p").get<std::vector<double>>());
  } else if (type == "propab") {
    dom = propab_domain();
  } else if (type == "prop40") {
    dom = prop40_domain();
  } else if (type == "gauge") {
    CustomGauge g;
    g.name = j.value("name", std::string("gauge"));
    g.n = require_key(j, "n").get<int>();
    for (const json& t : require_key(j, "terms"))
      g.terms.push_back({require_key(t, "coords").get<std::vector<int>>(), require_key(t, "exponent").get<double>()});
    dom = {g, std::vector<int>(static_cast<std::size_t>(g.n), 1)};
  } else {
    fail(ErrorKind::Schema, "unknown domain type '" + type + "'");
  }
  if (j.contains("k")) dom.k = j.at("k").get<std::vector<int>>();
  validate(dom);
  return dom;
}

json to_json(const BlaschkeProduct& b) {
  return {{"zeros", to_json(b.zeros())}, {"factor", to_json(b.unimodular_factor())}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  const cplx factor = j.contains("factor") ? complex_from_json(j.at("factor")) : cplx(1.0);
  return BlaschkeProduct(cvec_from_json(require_key(j, "zeros")), factor);
}

}  // namespace mextremal
