#include "mextremal/cli.hpp"

#include <array>
#include <cmath>
#include <map>

#include "mextremal/certify.hpp"
#include "mextremal/error.hpp"
#include "mextremal/kernels.hpp"
#include "mextremal/maps.hpp"
#include "mextremal/pick.hpp"

namespace mextremal::cli {

namespace {

constexpr std::array<const char*, 9> kVerbs = {"pick", "schur",   "certify", "edigarian", "ball3",
                                               "sn",   "falsify", "profile", "family"};

PickData pick_data_from(const json& in) {
  return {cvec_from_json(require_key(in, "nodes")), cvec_from_json(require_key(in, "values"))};
}

json tagged_to_json(const TaggedMap& t) {
  json j = {{"map", t.map.to_json()},
            {"domain", to_json(t.domain)},
            {"m", t.m},
            {"claims", {{"m_extremal", t.extremal}, {"weak_m_extremal", t.weak_extremal}}},
            {"note", t.note}};
  if (t.geodesic) j["claims"]["m_geodesic"] = *t.geodesic;
  return j;
}

TaggedMap family_from(const json& in) {
  const std::string name = require_key(in, "name").get<std::string>();
  const int m = require_key(in, "m").get<int>();
  const double a = require_key(in, "a").get<double>();
  if (name == "prop1") return family_prop1(m, a);
  if (name == "prop1_geodesic") return family_prop1_geodesic(m, a);
  if (name == "propab") return family_propab(m, a);
  if (name == "prop40") return family_prop40(m, a);
  if (name == "propmm") return family_propmm(m, a);
  fail(ErrorKind::Schema, "unknown family '" + name + "'");
}

Outcome run_pick(const Command& cmd) {
  const PickData data = pick_data_from(cmd.input);
  const PickVerdict v = classify_pick(data);
  Outcome out;
  out.report = {{"verdict", to_string(v.tag)},
                {"rank", v.rank},
                {"smallest_eigenvalue", v.smallest_eigenvalue},
                {"norm", v.norm},
                {"eigenvalues", v.eigenvalues}};
  switch (v.tag) {
    case PickTag::SingularPSD:
      out.report["weak_extremal"] = true;
      out.report["blaschke_degree"] = v.rank;
      out.code = ExitCode::Success;
      break;
    case PickTag::PositiveDefinite:
      out.report["weak_extremal"] = false;
      out.code = ExitCode::Negative;
      break;
    case PickTag::Indefinite:
      out.report["infeasible"] = true;
      out.code = ExitCode::Negative;
      break;
  }
  return out;
}

Outcome run_schur(const Command& cmd) {
  Outcome out;
  const json& in = cmd.input;
  if (in.contains("nodes")) {
    const PickData data = pick_data_from(in);
    try {
      const DataDegree d = blaschke_degree_of_data(data.nodes, data.values);
      out.report = {{"blaschke_extremal", d.blaschke_extremal}, {"degree", d.degree}};
      out.code = d.blaschke_extremal ? ExitCode::Success : ExitCode::Negative;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Infeasible) throw;
      out.report = {{"infeasible", true}, {"reason", e.what()}};
      out.code = ExitCode::Negative;
    }
    return out;
  }
  MapSpec f = in.contains("blaschke") ? MapSpec::blaschke(blaschke_from_json(in.at("blaschke")))
                                      : MapSpec::from_json(require_key(in, "map"));
  require(f.dimension() == 1, ErrorKind::Schema, "schur: map must be scalar");
  const int ring = in.value("ring_size", 64);
  const auto pts = schur_sample_points(ring);
  const SampledFunction s = sample([&f](cplx lam) { return f(lam)[0]; }, std::span<const cplx>(pts));
  try {
    out.report = {{"degree", schur_reduction_degree(s, in.value("max_steps", 32))}, {"sample_points", pts.size()}};
    out.code = ExitCode::Success;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Inconsistent) throw;
    out.report = {{"blaschke", false}, {"reason", e.what()}};
    out.code = ExitCode::Negative;
  }
  return out;
}

Outcome certificate_outcome(const Certificate& c) {
  Outcome out;
  out.report = {{"certificate", c.to_json()}, {"verdict", to_string(c.verdict)}};
  out.code = c.verdict == Verdict::Certified ? ExitCode::Success
             : c.verdict == Verdict::Refuted ? ExitCode::Negative
                                             : ExitCode::Inconclusive;
  return out;
}

Outcome run_certify(const Command& cmd) {
  const json& in = cmd.input;
  CertifyOptions opts;
  opts.seed = cmd.seed;
  if (cmd.samples) opts.samples = *cmd.samples;
  if (in.contains("family")) {
    const std::string name = in.at("family").get<std::string>();
    const int m = in.value("m", 0);
    if (name == "prop24") {
      const Prop24Result r = prop24_certificate(m, require_key(in, "b").get<double>(), opts);
      Outcome out = certificate_outcome(r.certificate);
      out.report["c"] = r.c;
      out.report["d"] = r.d;
      out.report["identity_residual"] = r.identity_residual;
      return out;
    }
    const double a = require_key(in, "a").get<double>();
    Certificate c;
    if (name == "prop1_geodesic" || name == "prop1") {
      const TaggedMap t = family_prop1_geodesic(m, a);
      c = verify_left_inverse(t.map, MultiPolynomial::linear({1.0, 1.0}), BlaschkeProduct::monomial(m - 1), t.domain,
                              m, opts);
    } else if (name == "propab") {
      const TaggedMap t = family_propab(m, a);
      const MultiPolynomial F(3, {{4.0, {1, 1, 0}}, {1.0, {0, 0, 1}}});
      c = verify_left_inverse(t.map, F, BlaschkeProduct::monomial(m - 1), t.domain, m, opts);
    } else if (name == "prop40") {
      const TaggedMap t = family_prop40(m, a);
      const MultiPolynomial F(3, {{2.0, {1, 1, 0}}, {1.0, {0, 0, 1}}});
      c = verify_left_inverse(t.map, F, BlaschkeProduct::monomial(m - 1), t.domain, m, opts);
    } else if (name == "ball3") {
      c = verify_left_inverse(ball3_normal_form(a, 0.0), ball3_left_inverse(a), BlaschkeProduct::monomial(2), ball(2),
                              3, opts);
    } else {
      fail(ErrorKind::Schema, "certify: unknown family '" + name + "'");
    }
    c.name = name;
    return certificate_outcome(c);
  }
  Certificate c = verify_left_inverse(MapSpec::from_json(require_key(in, "map")),
                                      MultiPolynomial::from_json(require_key(in, "left_inverse")),
                                      blaschke_from_json(require_key(in, "blaschke")),
                                      domain_from_json(require_key(in, "domain")), require_key(in, "m").get<int>(), opts);
  c.name = in.value("name", std::string("custom"));
  return certificate_outcome(c);
}

EdigarianParams edigarian_from(const json& in, bool need_alpha0) {
  EdigarianParams p;
  p.p = require_key(in, "p").get<std::vector<double>>();
  p.a = cvec_from_json(require_key(in, "a"));
  for (const json& row : require_key(in, "alpha")) p.alpha.push_back(cvec_from_json(row));
  p.r = require_key(in, "r").get<std::vector<std::vector<int>>>();
  p.n = static_cast<int>(p.p.size());
  p.m = static_cast<int>(p.alpha.size()) + 1;
  if (need_alpha0) p.alpha0 = cvec_from_json(require_key(in, "alpha0"));
  return p;
}

json edigarian_to_json(const EdigarianParams& p) {
  json alpha = json::array();
  for (const cvec& row : p.alpha) alpha.push_back(to_json(row));
  return {{"p", p.p}, {"a", to_json(p.a)}, {"alpha", alpha}, {"alpha0", to_json(p.alpha0)}, {"r", p.r}};
}

double boundary_gauge_deviation(const EdigarianParams& p) {
  double dev = 0.0;
  for (const cplx lam : kernels::circle_grid(numeric_policy().circle_grid)) {
    const cvec f = edigarian_eval(p, lam);
    double s = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) s += std::pow(std::abs(f[j]), 2.0 * p.p[j]);
    dev = std::max(dev, std::abs(s - 1.0));
  }
  return dev;
}

Outcome run_edigarian(const Command& cmd) {
  const json& in = cmd.input;
  Outcome out;
  if (in.contains("alpha0")) {
    const EdigarianParams p = edigarian_from(in, true);
    const double residual = edigarian_check(p);
    out.report = {{"params", edigarian_to_json(p)}, {"residual", residual}};
    if (residual <= 1e-8) out.report["boundary_gauge_deviation"] = boundary_gauge_deviation(p);
    out.code = residual <= 1e-8 ? ExitCode::Success : ExitCode::Negative;
    return out;
  }
  const EdigarianParams p = edigarian_from(in, false);
  try {
    const EdigarianCompletion c = edigarian_complete(p.a, p.p, p.alpha, p.r);
    out.report = {{"params", edigarian_to_json(c.params)},
                  {"scale", c.scale},
                  {"residual", c.residual},
                  {"boundary_gauge_deviation", boundary_gauge_deviation(c.params)},
                  {"map", edigarian_map(c.params).to_json()}};
    out.code = ExitCode::Success;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Infeasible) throw;
    out.report = {{"infeasible", true}, {"reason", e.what()}};
    out.code = ExitCode::Negative;
  }
  return out;
}

Outcome run_ball3(const Command& cmd) {
  const json& in = cmd.input;
  const std::string mode = in.value("mode", std::string("normal_form"));
  Outcome out;
  if (mode == "normal_form") {
    const double a = require_key(in, "a").get<double>();
    const cplx alpha = in.contains("alpha") ? complex_from_json(in.at("alpha")) : cplx(0.0);
    const int n = in.value("n", 2);
    out.report = {{"map", ball3_normal_form(a, alpha, n).to_json()}};
    if (alpha == cplx(0.0) && a < 1.0) out.report["left_inverse"] = ball3_left_inverse(a, n).to_json();
  } else if (mode == "forward") {
    const Thm32Forward f = thm32_forward(require_key(in, "b").get<double>(), complex_from_json(require_key(in, "c")));
    out.report = {{"alpha", f.alpha}, {"beta", f.beta}, {"gamma", to_json(f.gamma)}, {"a", f.a}};
  } else if (mode == "inverse") {
    const Thm32Inverse r = thm32_inverse(require_key(in, "p").get<double>(), require_key(in, "q").get<double>());
    const Thm32Forward f = thm32_forward(r.b, r.c);
    out.report = {{"b", r.b}, {"c", r.c}, {"forward", {{"alpha", f.alpha}, {"beta", f.beta}, {"gamma", to_json(f.gamma)}}}};
  } else {
    fail(ErrorKind::Schema, "ball3: unknown mode '" + mode + "'");
  }
  return out;
}

Outcome run_sn(const Command& cmd) {
  const std::vector<double> p = require_key(cmd.input, "p").get<std::vector<double>>();
  const SnDecision d = sn_membership(p);
  Outcome out;
  out.report = {{"member", d.member}, {"witness", d.witness}, {"explanation", d.explanation},
                {"convex", convexity_check(p)}};
  out.code = d.member ? ExitCode::Success : ExitCode::Negative;
  return out;
}

Outcome run_falsify(const Command& cmd) {
  const json& in = cmd.input;
  FalsifierOptions opts;
  opts.seed = cmd.seed;
  opts.restarts = in.value("restarts", opts.restarts);
  opts.budget = in.value("budget", opts.budget);
  opts.degree = in.value("degree", opts.degree);
  const FalsifierResult r = falsify_weak_extremality(MapSpec::from_json(require_key(in, "map")),
                                                     domain_from_json(require_key(in, "domain")),
                                                     cvec_from_json(require_key(in, "nodes")), opts);
  Outcome out;
  out.report = {{"verdict", r.falsified ? "Falsified" : "Unknown"},
                {"best_search_defect", r.best_search_defect},
                {"verified_defect", r.verified_defect},
                {"best_restart", r.best_restart},
                {"degree", r.degree},
                {"restart_defects", r.restart_defects}};
  if (r.witness) out.report["witness"] = r.witness->to_json();
  out.code = r.falsified ? ExitCode::Negative : ExitCode::Inconclusive;
  return out;
}

Outcome run_profile(const Command& cmd) {
  const json& in = cmd.input;
  MapSpec f;
  DomainModel dom;
  if (in.contains("family")) {
    const TaggedMap t = family_from(in.at("family"));
    f = t.map;
    dom = t.domain;
  } else {
    f = MapSpec::from_json(require_key(in, "map"));
    dom = domain_from_json(require_key(in, "domain"));
  }
  const ProfileReport rep =
      properness_profile(f, dom, in.value("n_rays", 64), in.value("n_radii", 8), in.value("kappa", 100.0));
  Outcome out;
  out.report = {{"radii", rep.radii},
                {"hopf_constant", rep.hopf_constant},
                {"max_ray_defect", rep.max_ray_defect},
                {"almost_proper", rep.almost_proper},
                {"kappa", rep.kappa},
                {"rows", rep.rows.size()}};
  out.csv = rep.csv();
  out.code = rep.almost_proper ? ExitCode::Success : ExitCode::Negative;
  return out;
}

Outcome run_family(const Command& cmd) {
  Outcome out;
  out.report = tagged_to_json(family_from(cmd.input));
  return out;
}

}  // namespace

bool is_verb(const std::string& verb) {
  for (const char* v : kVerbs)
    if (verb == v) return true;
  return false;
}

Outcome run(const Command& cmd) {
  require(is_verb(cmd.verb), ErrorKind::Schema, "unknown verb '" + cmd.verb + "'");
  require(cmd.input.is_object(), ErrorKind::Schema, "input must be a JSON object");
  NumericPolicy policy = numeric_policy();
  if (cmd.input.contains("policy")) policy = policy_from_json(cmd.input.at("policy"), policy);
  if (cmd.samples) policy.boundary_samples = *cmd.samples;
  if (cmd.tol) {
    policy.unimodular_tol = *cmd.tol;
    policy.singular_tol = *cmd.tol;
    policy.boundary_band = *cmd.tol;
    policy.infeasible_slack = *cmd.tol;
  }
  ScopedNumericPolicy scope(policy);

  static const std::map<std::string, Outcome (*)(const Command&)> handlers = {
      {"pick", run_pick},   {"schur", run_schur},     {"certify", run_certify}, {"edigarian", run_edigarian},
      {"ball3", run_ball3}, {"sn", run_sn},           {"falsify", run_falsify}, {"profile", run_profile},
      {"family", run_family}};
  Outcome out = handlers.at(cmd.verb)(cmd);
  json result = std::move(out.report);
  out.report = {{"verb", cmd.verb},
                {"version", MEXTREMAL_VERSION},
                {"input", cmd.input},
                {"seed", cmd.seed},
                {"policy", to_json(policy)},
                {"result", std::move(result)},
                {"exit_code", static_cast<int>(out.code)}};
  return out;
}

}  // namespace mextremal::cli
