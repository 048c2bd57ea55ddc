#include <doctest.h>

#include "mextremal/error.hpp"
#include "mextremal/kernels.hpp"
#include "mextremal/maps.hpp"
#include "support.hpp"

using namespace mextremal;
using testing_support::Rng;

namespace {

double max_diff(const cvec& a, const cvec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

EdigarianParams identity_params(int n, const cvec& a) {
  EdigarianParams e;
  e.n = n;
  e.m = 2;
  e.p.assign(static_cast<std::size_t>(n), 1.0);
  e.a = a;
  e.alpha = {cvec(static_cast<std::size_t>(n), 0.0)};
  e.alpha0 = {0.0};
  e.r = {std::vector<int>(static_cast<std::size_t>(n), 1)};
  return e;
}

}  // namespace

TEST_CASE("edigarian_eval examples") {
  const EdigarianParams e1 = identity_params(1, {1.0});
  for (const cplx lam : {cplx(0.3, 0.1), cplx(-0.7, 0.2), cplx(0.0, 1.0)}) CHECK(std::abs(edigarian_eval(e1, lam)[0] - lam) < 1e-15);

  const EdigarianParams e2 = identity_params(2, {0.6, cplx(0.0, 0.8)});
  const cplx lam(0.25, -0.4);
  CHECK(max_diff(edigarian_eval(e2, lam), {0.6 * lam, cplx(0.0, 0.8) * lam}) < 1e-15);
  CHECK(edigarian_check(e1) < 1e-15);
  CHECK(edigarian_check(e2) < 1e-15);
}

TEST_CASE("edigarian_check detects perturbed amplitudes") {
  EdigarianCompletion c = edigarian_complete({0.5, 0.5}, {0.5, 0.5}, {{0.2, -0.2}}, {{1, 1}});
  CHECK(edigarian_check(c.params) <= 1e-10);
  c.params.a[0] *= 1.01;
  CHECK(edigarian_check(c.params) > 1e-4);
}

TEST_CASE("edigarian_complete examples") {
  EdigarianCompletion c = edigarian_complete({1.0}, {1.0}, {{0.3}}, {{1}});
  CHECK(std::abs(c.params.alpha0[0] - 0.3) < 1e-12);
  CHECK(c.residual <= 1e-12);

  c = edigarian_complete({0.6, 0.8}, {1.0, 1.0}, {{0.0, 0.0}}, {{1, 1}});
  CHECK(std::abs(c.params.alpha0[0]) < 1e-12);
  CHECK(std::abs(c.scale - 1.0) < 1e-12);

  c = edigarian_complete({0.5, 0.5}, {0.5, 0.5}, {{0.2, -0.2}}, {{1, 1}});
  CHECK(c.residual <= 1e-10);
  CHECK(std::abs(c.params.alpha0[0]) < 1e-12);  // symmetric zeros pair at the origin
  CHECK(std::abs(c.scale - 1.04) < 1e-12);

  // Q = -(lam - 1)^2 has its roots on the circle.
  CHECK_THROWS_AS(edigarian_complete({1.0}, {1.0}, {{1.0}}, {{1}}), Error);
}

TEST_CASE("completed Edigarian maps satisfy the identity and send the circle to the boundary") {
  Rng rng(41);
  int done = 0;
  for (int t = 0; t < 200 && done < 60; ++t) {
    const int n = rng.integer(1, 3), m = rng.integer(2, 4);
    cvec a;
    std::vector<double> p;
    for (int j = 0; j < n; ++j) {
      a.push_back(std::polar(rng.uniform(0.2, 1.0), rng.uniform(0.0, 6.28)));
      p.push_back(rng.uniform(0.5, 3.0));
    }
    std::vector<cvec> alpha;
    std::vector<std::vector<int>> r;
    for (int k = 0; k < m - 1; ++k) {
      cvec row;
      std::vector<int> rr;
      for (int j = 0; j < n; ++j) {
        row.push_back(rng.disc(0.9));
        rr.push_back(rng.integer(0, 1));
      }
      alpha.push_back(row);
      r.push_back(rr);
    }
    EdigarianCompletion c;
    try {
      c = edigarian_complete(a, p, alpha, r);
    } catch (const Error&) {
      continue;
    }
    ++done;
    CHECK(c.residual <= 1e-10);
    const DomainModel dom = ellipsoid(c.params.p);
    for (const cplx z : kernels::circle_grid(64)) CHECK(std::abs(minkowski_value(dom, edigarian_eval(c.params, z)) - 1.0) <= 1e-8);
    // With every r_kj = 0 and n = 1 the map is a unimodular constant.
    bool has_zero = false;
    for (const auto& row : r) has_zero = has_zero || std::count(row.begin(), row.end(), 1) > 0;
    if (!has_zero) continue;
    for (const cplx z : kernels::circle_grid(16, 0.6)) CHECK(minkowski_value(dom, edigarian_eval(c.params, z)) < 1.0);
  }
  CHECK(done >= 50);
}

TEST_CASE("squared exponents at p = 1/2 give a left inverse z1 + z2") {
  const EdigarianCompletion c = edigarian_complete({0.7, 0.4}, {0.5, 0.5}, {{0.3, cplx(-0.1, 0.5)}, {0.2, 0.0}},
                                                   {{1, 1}, {1, 1}});
  for (const cplx z : kernels::circle_grid(32, 0.8)) {
    const cvec g = edigarian_eval(c.params, z);
    cplx expect = 1.0;
    for (const cplx a0 : c.params.alpha0) expect *= MoebiusMap(a0)(z);
    CHECK(std::abs(g[0] + g[1] - expect) < 1e-10);
  }
}

TEST_CASE("lemma10_factor examples") {
  const cvec a{0.6, 0.8};
  FactorResult r = lemma10_factor(linear_ray(a), 0.0, {1, 1}, ball(2));
  CHECK(r.classification == FactorClass::Boundary);
  CHECK(max_diff(r.phi(0.3), a) < 1e-12);

  const MapSpec f = MapSpec::tuple({monomial_map(0.5, 1), monomial_map(0.5, 2)});
  r = lemma10_factor(f, 0.0, {1, 1}, ellipsoid({0.5, 0.5}));
  CHECK(r.classification == FactorClass::Interior);
  CHECK(std::abs(r.gauge_at_zero - 0.5) < 1e-12);
  CHECK(max_diff(r.phi(0.4), {0.5, 0.2}) < 1e-12);

  const MapSpec g = MapSpec::tuple({MapSpec::variable() * MapSpec::moebius(0.3), MapSpec::constant(0.0)});
  r = lemma10_factor(g, 0.3, {1, 1}, ball(2));
  CHECK(r.classification == FactorClass::Interior);
  CHECK(max_diff(r.phi(cplx(0.2, 0.1)), {cplx(0.2, 0.1), 0.0}) < 1e-12);

  CHECK_THROWS_AS(lemma10_factor(MapSpec::tuple({monomial_map(0.5, 0), monomial_map(0.5, 1)}), 0.0, {1, 1}, ball(2)),
                  Error);
}

TEST_CASE("lemma10 multiply examples and round trip") {
  const cvec a{0.6, 0.8};
  MapSpec psi = lemma10_multiply(MapSpec::constant(a), 0.0, 1, {1, 1});
  CHECK(max_diff(psi(0.4), {0.24, 0.32}) < 1e-15);

  psi = lemma10_multiply(linear_ray(a), 0.5, 2, {1, 1});
  const cplx lam(0.1, -0.3);
  const cplx mm = std::pow(MoebiusMap(0.5)(lam), 2);
  CHECK(max_diff(psi(lam), {mm * lam * a[0], mm * lam * a[1]}) < 1e-15);

  const FactorResult back = lemma10_factor(psi, 0.5, {2, 2}, ball(2));
  CHECK(back.classification == FactorClass::Interior);
  CHECK(max_diff(back.phi(lam), {lam * a[0], lam * a[1]}) < 1e-10);
  CHECK_THROWS_AS(lemma10_multiply(linear_ray(a), 0.5, 1, {2, 1}), Error);
}

TEST_CASE("family_nc builds B a with the recorded claims") {
  const std::vector<double> p{0.4, 1.0};
  const cvec a{std::pow(0.5, 1.25), std::sqrt(0.5)};
  const BlaschkeProduct B({0.2, cplx(-0.3, 0.4)});
  const TaggedMap t = family_nc(p, a, B);
  CHECK(t.m == 3);
  CHECK(t.weak_extremal);
  CHECK_FALSE(t.extremal);
  const cplx lam(0.3, 0.3);
  CHECK(max_diff(t.map(lam), {B(lam) * a[0], B(lam) * a[1]}) < 1e-14);
  for (const cplx z : kernels::circle_grid(32)) CHECK(std::abs(minkowski_value(t.domain, t.map(z)) - 1.0) < 1e-10);
  CHECK_THROWS_AS(family_nc({0.5, 0.5}, {0.5, 0.5}, B), Error);
  CHECK_THROWS_AS(family_nc(p, a, BlaschkeProduct({0.2, 0.2})), Error);
}

TEST_CASE("chi_w examples and involution") {
  Rng rng(42);
  for (int t = 0; t < 50; ++t) {
    const int n = rng.integer(1, 4);
    cvec w, z;
    for (int j = 0; j < n; ++j) {
      w.push_back(rng.disc(0.5));
      z.push_back(rng.disc(0.5));
    }
    const BallAutomorphism aut = ball_automorphism(w);
    cvec minus_w = w;
    for (cplx& x : minus_w) x = -x;
    CHECK(max_diff(chi_eval(aut, cvec(static_cast<std::size_t>(n), 0.0)), minus_w) < 1e-15);
    CHECK(max_diff(chi_eval(aut, w), cvec(static_cast<std::size_t>(n), 0.0)) < 1e-15);
    // chi_{-w} inverts chi_w.
    CHECK(max_diff(chi_eval(ball_automorphism(minus_w), chi_eval(aut, z)), z) < 1e-13);
    CHECK(minkowski_value(ball(n), chi_eval(aut, z)) < 1.0);
    CHECK(max_diff(chi_eval(ball_automorphism(cvec(static_cast<std::size_t>(n), 0.0)), z), z) < 1e-15);
  }
}

TEST_CASE("ball3 normal form examples") {
  const cplx lam(0.3, -0.2);
  CHECK(max_diff(ball3_normal_form(1.0, 0.0, 3)(lam), {lam, 0.0, 0.0}) < 1e-15);
  CHECK(max_diff(ball3_normal_form(0.0, 0.0)(lam), {0.0, lam * lam}) < 1e-15);
  const MapSpec f = ball3_normal_form(0.6, 0.2);
  CHECK(kernels::max_defect_serial(f, ball(2), kernels::disc_grid(512)) <= 1e-14);
  for (const cplx z : kernels::circle_grid(64, 0.99)) CHECK(membership_defect(ball(2), f(z)) < 0.0);
}

TEST_CASE("thm32 forward examples") {
  Thm32Forward fw = thm32_forward(std::sqrt(0.5), 0.5);
  CHECK(std::abs(fw.gamma - 2.0 / 3.0) < 1e-15);
  CHECK(std::abs(fw.beta * fw.beta - 0.4) < 1e-15);
  CHECK(std::abs(fw.alpha * fw.alpha - 0.6) < 1e-15);
  fw = thm32_forward(0.7, 1e-6);
  CHECK(std::abs(fw.gamma) < 1e-5);
  CHECK(std::abs(fw.beta * fw.beta - 0.49) < 1e-10);
  CHECK(std::abs(fw.alpha * fw.alpha - 0.51) < 1e-10);
  CHECK(thm32_forward(1e-6, 0.5).beta < 1e-5);
  for (double b = 0.05; b < 1.0; b += 0.1)
    for (double c = 0.05; c < 1.0; c += 0.1) {
      const Thm32Forward f = thm32_forward(b, cplx(c, 0.0));
      CHECK(std::abs(f.alpha * f.alpha + f.beta * f.beta - 1.0) < 1e-14);
    }
}

TEST_CASE("thm32 inverse round trip") {
  const Thm32Inverse inv = thm32_inverse(0.4, 2.0 / 3.0);
  CHECK(std::abs(inv.b * inv.b - 0.5) < 1e-12);
  CHECK(std::abs(inv.c - 0.5) < 1e-12);
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      const double p = i / 10.0, q = j / 10.0;
      const Thm32Inverse s = thm32_inverse(p, q);
      const Thm32Forward f = thm32_forward(s.b, s.c);
      CHECK(std::abs(f.beta * f.beta - p) < 1e-8);
      CHECK(std::abs(f.gamma - q) < 1e-8);
    }
  // b shrinks with p at fixed q.
  double prev = 1.0;
  for (const double p : {0.3, 0.1, 0.01, 0.001}) {
    const double b = thm32_inverse(p, 0.5).b;
    CHECK(b < prev);
    prev = b;
  }
}

TEST_CASE("named families") {
  const cplx lam(0.4, 0.1);
  TaggedMap t = family_prop1(3, 0.5);
  CHECK(max_diff(t.map(lam), {0.5 * lam, 0.5 * lam * lam}) < 1e-15);
  CHECK(t.extremal);
  CHECK(t.geodesic == false);
  for (const cplx z : kernels::circle_grid(64)) CHECK(std::abs(minkowski_value(t.domain, t.map(z)) - 1.0) < 1e-12);

  t = family_propab(4, 0.3);
  CHECK(max_diff(t.map(lam), {0.3 * lam, 0.3 * lam * lam, 0.64 * std::pow(lam, 3)}) < 1e-15);
  t = family_prop40(5, 0.5);
  CHECK(max_diff(t.map(lam), {0.5 * lam, 0.5 * std::pow(lam, 3), 0.5 * std::pow(lam, 4)}) < 1e-15);
  t = family_propmm(4, 0.6);
  CHECK(max_diff(t.map(lam), {0.6 * lam * lam, 0.8 * std::pow(lam, 3)}) < 1e-15);
  CHECK_THROWS_AS(family_prop1(2, 0.5), Error);
  CHECK_THROWS_AS(family_propab(4, 0.6), Error);
}
