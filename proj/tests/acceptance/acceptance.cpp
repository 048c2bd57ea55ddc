// Acceptance suite: one PASS/FAIL line per criterion. Runtime limits are part
// of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "mextremal/certify.hpp"
#include "mextremal/error.hpp"
#include "mextremal/kernels.hpp"
#include "mextremal/maps.hpp"
#include "mextremal/pick.hpp"
#include "../support.hpp"

using namespace mextremal;
using testing_support::Rng;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Pick classification and the Schur recursion agree on Blaschke data.
Result criterion1() {
  Rng rng(1001);
  int ok = 0, literal = 0;
  for (int t = 0; t < 500; ++t) {
    const int d = rng.integer(1, 5);
    const int m = rng.integer(d + 1, 7);
    const BlaschkeProduct b = rng.blaschke(d, 0.9);
    PickData data{rng.separated_nodes(m, 0.8, 0.1), {}};
    for (const cplx x : data.nodes) data.values.push_back(b(x));
    const PickVerdict v = classify_pick(data);
    const DataDegree dd = blaschke_degree_of_data(data.nodes, data.values);
    if (v.tag == PickTag::SingularPSD && v.rank == d && dd.blaschke_extremal && dd.degree == d) ++ok;
    if (m - v.rank == d) ++literal;
  }
  return {ok == 500, fmt("%d/500 SingularPSD with rank = degree = d (m - rank = d holds in %d/500)", ok, literal)};
}

// h(lam^k z) = |lam| h(z).
Result criterion2() {
  Rng rng(1002);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const int n = rng.integer(1, 4);
    std::vector<double> p;
    std::vector<int> k;
    cvec z;
    for (int j = 0; j < n; ++j) {
      p.push_back(rng.uniform(0.25, 4.0));
      k.push_back(rng.integer(1, 4));
      z.push_back(rng.disc(2.0));
    }
    const DomainModel dom = ellipsoid(p, k);
    const cplx lam = rng.disc(3.0);
    cvec w = z;
    for (int j = 0; j < n; ++j) w[j] *= std::pow(lam, k[j]);
    worst = std::max(worst, std::abs(minkowski_value(dom, w) - std::abs(lam) * minkowski_value(dom, z)));
  }
  return {worst <= 1e-9, fmt("max |h(lam^k z) - |lam| h(z)| = %.3e over 1000 cases", worst)};
}

// Completed Edigarian forms satisfy the identity and send the circle to the boundary.
Result criterion3() {
  Rng rng(1003);
  int built = 0, rejected = 0;
  double worst_res = 0.0, worst_dev = 0.0;
  const auto circle = kernels::circle_grid(1024);
  while (built < 100) {
    const int n = rng.integer(1, 3), m = rng.integer(2, 4);
    cvec a;
    std::vector<double> p;
    for (int j = 0; j < n; ++j) {
      a.push_back(std::polar(rng.uniform(0.2, 1.0), rng.uniform(0.0, 2.0 * std::numbers::pi)));
      p.push_back(rng.uniform(0.5, 3.0));
    }
    std::vector<cvec> alpha(static_cast<std::size_t>(m - 1));
    std::vector<std::vector<int>> r(static_cast<std::size_t>(m - 1));
    for (int k = 0; k < m - 1; ++k)
      for (int j = 0; j < n; ++j) {
        alpha[static_cast<std::size_t>(k)].push_back(rng.disc(0.9));
        r[static_cast<std::size_t>(k)].push_back(rng.integer(0, 1));
      }
    EdigarianCompletion c;
    try {
      c = edigarian_complete(a, p, alpha, r);
    } catch (const Error&) {
      ++rejected;
      continue;
    }
    ++built;
    worst_res = std::max(worst_res, c.residual);
    for (const cplx lam : circle) {
      const cvec f = edigarian_eval(c.params, lam);
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += std::pow(std::abs(f[static_cast<std::size_t>(j)]), 2.0 * c.params.p[static_cast<std::size_t>(j)]);
      worst_dev = std::max(worst_dev, std::abs(s - 1.0));
    }
  }
  return {worst_res <= 1e-10 && worst_dev <= 1e-8,
          fmt("100 instances (%d rejected draws): max residual %.3e, max boundary gauge deviation %.3e", rejected,
              worst_res, worst_dev)};
}

Result criterion4() {
  double worst = 0.0;
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      const double p = i / 10.0, q = j / 10.0;
      const Thm32Inverse s = thm32_inverse(p, q);
      const Thm32Forward f = thm32_forward(s.b, s.c);
      worst = std::max({worst, std::abs(f.beta - std::sqrt(p)), std::abs(f.gamma - q)});
    }
  const Thm32Forward e = thm32_forward(std::sqrt(0.5), 0.5);
  const double inst = std::max({std::abs(e.alpha * e.alpha - 0.6), std::abs(e.beta * e.beta - 0.4),
                                std::abs(e.gamma - 2.0 / 3.0)});
  return {worst <= 1e-8 && inst <= 1e-12, fmt("grid round-trip error %.3e, (b^2, c) = (0.5, 0.5) error %.3e", worst, inst)};
}

Result criterion5() {
  int certified = 0, total = 0;
  double worst = 0.0;
  auto record = [&](const Certificate& c) {
    ++total;
    if (c.verdict == Verdict::Certified && c.residual_composition <= 1e-9) ++certified;
    worst = std::max(worst, c.residual_composition);
  };
  for (int m = 3; m <= 6; ++m)
    for (const double a : {0.25, 0.5, 0.75}) {
      const TaggedMap t = family_prop1_geodesic(m, a);
      record(verify_left_inverse(t.map, MultiPolynomial::linear({1.0, 1.0}), BlaschkeProduct::monomial(m - 1), t.domain,
                                 m));
    }
  for (const int m : {4, 5}) {
    const TaggedMap t = family_propab(m, 0.3);
    record(verify_left_inverse(t.map, MultiPolynomial(3, {{4.0, {1, 1, 0}}, {1.0, {0, 0, 1}}}),
                               BlaschkeProduct::monomial(m - 1), t.domain, m));
  }
  for (const int m : {5, 6}) {
    const TaggedMap t = family_prop40(m, 0.5);
    record(verify_left_inverse(t.map, MultiPolynomial(3, {{2.0, {1, 1, 0}}, {1.0, {0, 0, 1}}}),
                               BlaschkeProduct::monomial(m - 1), t.domain, m));
  }
  for (const double a : {0.0, 0.3, 0.6, 0.9})
    record(verify_left_inverse(ball3_normal_form(a, 0.0), ball3_left_inverse(a), BlaschkeProduct::monomial(2), ball(2), 3));
  for (int m = 3; m <= 5; ++m) record(prop24_certificate(m, 1.0 / (m - 1)).certificate);
  return {certified == total, fmt("%d/%d certified, max composition residual %.3e", certified, total, worst)};
}

Result criterion6() {
  bool ok = true;
  double worst1 = -1.0, worstab = -1.0, worst40 = -1.0, corner = 0.0;
  for (int i = 1; i <= 99; ++i) {
    const double a = i / 100.0;
    worst1 = std::max(worst1, slack_prop1(a));
    worstab = std::max(worstab, slack_propab(0.5 * i / 100.0));
  }
  ok = worst1 < 0.0 && worstab < 0.0;
  for (int i = 0; i <= 98; ++i)
    for (int j = 0; j <= 98; ++j)
      for (int l = 1; l <= 99; ++l) {
        const double v = slack_prop40(i / 98.0, j / 98.0, l / 100.0);
        if (i == 98 && j == 98) {
          corner = std::max(corner, std::abs(v));
          continue;
        }
        worst40 = std::max(worst40, v);
      }
  ok = ok && worst40 < 0.0 && corner <= 1e-15;
  return {ok, fmt("max slack: prop1 %.3e, propab %.3e, prop40 off the corner %.3e, |prop40| at the corner %.1e", worst1,
                  worstab, worst40, corner)};
}

Result criterion7() {
  using testing_support::Q;
  const std::vector<Q> grid{Q(1, 2), Q(3, 4), Q(1), Q(5, 4), Q(3, 2), Q(2)};
  int agree = 0, total = 0;
  for (const int n : {2, 3}) {
    const auto generated = testing_support::sn_generate(n, testing_support::sn_value_set(grid));
    for (const auto& t : testing_support::all_tuples(n, grid)) {
      std::vector<double> p;
      for (const Q& q : t) p.push_back(testing_support::to_double(q));
      ++total;
      if (sn_membership(p).member == (generated.count(t) == 1)) ++agree;
    }
  }
  return {agree == total && total == 252, fmt("%d/%d tuples agree", agree, total)};
}

Result criterion8() {
  Rng rng(1008);
  int false_alarms = 0, found = 0;
  FalsifierOptions opt;
  for (int t = 0; t < 100; ++t) {
    const int m = rng.integer(2, 4);
    const BlaschkeProduct B = rng.blaschke(rng.integer(1, m - 1), 0.8);
    const cvec nodes = rng.separated_nodes(m, 0.7, 0.15);
    MapSpec f;
    DomainModel dom;
    switch (t % 3) {
      case 0:
        f = MapSpec::tuple({MapSpec::blaschke(B), monomial_map(0.5, 1)});
        dom = polydisc(2);
        break;
      case 1:
        f = MapSpec::tuple({MapSpec::blaschke(B), MapSpec::constant(0.0)});
        dom = ball(2);
        break;
      default:
        f = MapSpec::tuple({MapSpec::blaschke(B), MapSpec::constant(0.0)});
        dom = ellipsoid({rng.uniform(0.5, 2.0), rng.uniform(0.5, 2.0)});
    }
    opt.seed = static_cast<std::uint64_t>(t);
    if (falsify_weak_extremality(f, dom, nodes, opt).falsified) ++false_alarms;
  }
  const auto grid = kernels::disc_grid(2048);
  int built = 0;
  while (built < 50) {
    const int m = rng.integer(2, 4);
    const DomainModel dom = built % 2 ? ball(2) : polydisc(2);
    std::vector<MapSpec> comps;
    for (int j = 0; j < 2; ++j) {
      cvec c;
      for (int e = 0, deg = rng.integer(1, 3); e <= deg; ++e) c.push_back(rng.disc(1.0));
      comps.push_back(MapSpec::polynomial(ComplexPolynomial(c)));
    }
    MapSpec f = MapSpec::tuple(comps);
    // Shrink until the closed disc maps well inside.
    double s = 1.0;
    while (kernels::max_defect_serial(MapSpec::product({MapSpec::constant(s), f}), dom, grid) > -0.1) s *= 0.8;
    f = MapSpec::product({MapSpec::constant(s), f});
    ++built;
    opt.seed = static_cast<std::uint64_t>(1000 + built);
    if (falsify_weak_extremality(f, dom, rng.separated_nodes(m, 0.7, 0.15), opt).falsified) ++found;
  }
  return {false_alarms == 0 && found == 50,
          fmt("SingularPSD cases falsified %d/100, interior cases falsified %d/50", false_alarms, found)};
}

Result criterion9() {
  struct Case {
    const char* name;
    TaggedMap t;
  };
  const std::vector<Case> cases{{"prop1", family_prop1(3, 0.5)},
                                {"propab", family_propab(4, 0.3)},
                                {"prop40", family_prop40(5, 0.5)},
                                {"propmm", family_propmm(4, 0.6)}};
  bool ok = true;
  std::string detail;
  for (const Case& c : cases) {
    const ProfileReport p = properness_profile(c.t.map, c.t.domain, 64, 5);
    ok = ok && p.max_ray_defect <= 1e-3;
    detail += fmt("%s %.4e, ", c.name, p.max_ray_defect);
  }
  const ProfileReport cst = properness_profile(MapSpec::constant(cvec{0.2, 0.1}), ball(2), 64, 5);
  ok = ok && !cst.almost_proper;
  detail += fmt("constant flagged not almost proper: %s", cst.almost_proper ? "no" : "yes");
  return {ok, "max-ray defect at r = 0.999: " + detail};
}

struct Criterion {
  const char* title;
  double limit_seconds;
  std::function<Result()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int which = 0;
  app.add_option("--criterion", which, "criterion number, 0 for all")->check(CLI::Range(0, 9));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {"Pick/Schur degree agreement", 10.0, criterion1},  {"Minkowski homogeneity", 5.0, criterion2},
      {"Edigarian identity and properness", 30.0, criterion3}, {"ball3 parameter solver", 2.0, criterion4},
      {"left-inverse certificates", 60.0, criterion5},    {"slack inequalities", 1.0, criterion6},
      {"S_n rule vs generative oracle", 5.0, criterion7}, {"falsifier soundness", 120.0, criterion8},
      {"properness profiles", 10.0, criterion9}};

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (which != 0 && static_cast<std::size_t>(which) != i + 1) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i].run();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < criteria[i].limit_seconds;
    const bool pass = r.pass && in_time;
    if (!pass) ++failures;
    std::printf("criterion %zu [%s]: %s  %s  (%.2f s, limit %.0f s%s)\n", i + 1, criteria[i].title,
                pass ? "PASS" : "FAIL", r.detail.c_str(), secs, criteria[i].limit_seconds,
                in_time ? "" : ", too slow");
  }
  return failures == 0 ? 0 : 1;
}
