#include <doctest.h>

#include <Eigen/Dense>

#include "mextremal/cplane.hpp"
#include "mextremal/error.hpp"
#include "mextremal/pick.hpp"
#include "support.hpp"

using namespace mextremal;
using testing_support::Rng;

TEST_CASE("moebius_eval examples") {
  CHECK(std::abs(moebius_eval(MoebiusMap(0.0), 0.3) - 0.3) < 1e-15);
  CHECK(std::abs(moebius_eval(MoebiusMap(0.5), 0.5)) < 1e-15);
  const cplx v = moebius_eval(MoebiusMap(0.5), 1.0);
  CHECK(std::abs(v - 1.0) < 1e-15);
  CHECK_THROWS_AS(MoebiusMap(1.0), Error);
  CHECK_THROWS_AS(MoebiusMap(cplx(0.6, 0.8)), Error);
}

TEST_CASE("moebius composition with its inverse is the identity") {
  Rng rng(11);
  for (int t = 0; t < 20; ++t) {
    const MoebiusMap m(rng.disc(0.95));
    for (int i = 0; i < 100; ++i) {
      const cplx lam = rng.disc(1.0);
      CHECK(std::abs(m(m.inverse()(lam)) - lam) < 1e-12);
    }
  }
}

TEST_CASE("blaschke_eval examples") {
  CHECK(std::abs(blaschke_eval(BlaschkeProduct({0.0, 0.0}), 0.5) - 0.25) < 1e-15);
  CHECK(std::abs(blaschke_eval(BlaschkeProduct({}, cplx(0, 1)), 0.3) - cplx(0, 1)) < 1e-15);
  const BlaschkeProduct b({0.5});
  for (int k = 0; k < 16; ++k) CHECK(std::abs(std::abs(b(std::polar(1.0, 0.4 * k))) - 1.0) < 1e-12);
  CHECK_THROWS_AS(BlaschkeProduct({1.0}), Error);
  CHECK_THROWS_AS(BlaschkeProduct({0.1}, 2.0), Error);
}

TEST_CASE("blaschke products are unimodular on the circle") {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const BlaschkeProduct b = rng.blaschke(rng.integer(1, 6), 0.95);
    for (int i = 0; i < 20; ++i) CHECK(std::abs(std::abs(b(rng.unimodular())) - 1.0) < 1e-10);
  }
}

TEST_CASE("blaschke numerator/denominator and canonical form") {
  Rng rng(13);
  const BlaschkeProduct b = rng.blaschke(4);
  const ComplexPolynomial num = b.numerator(), den = b.denominator();
  for (int i = 0; i < 10; ++i) {
    const cplx lam = rng.disc(1.0);
    CHECK(std::abs(num(lam) / den(lam) - b(lam)) < 1e-12);
  }
  const BlaschkeProduct c = BlaschkeProduct({0.3, -0.2}, cplx(-1.0, 0.0)).canonical();
  CHECK(c.unimodular_factor() == cplx(1.0));
  CHECK(c.zeros().front() == cplx(-0.2));
  const BlaschkeProduct d = BlaschkeProduct({0.1}, cplx(0.0, -1.0)).canonical();
  CHECK(d.unimodular_factor() == cplx(0.0, 1.0));
}

TEST_CASE("schur_step examples") {
  const auto pts = schur_sample_points();
  SUBCASE("lambda^2 reduces to lambda") {
    const SampledFunction f = sample([](cplx l) { return l * l; }, std::span<const cplx>(pts));
    const SampledFunction g = schur_step(f, f.value_at_zero());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(std::abs(g.values[i] - pts[i]) < 1e-10);
  }
  SUBCASE("lambda m_0.3 reduces to m_0.3") {
    const MoebiusMap m(0.3);
    const SampledFunction f = sample([&](cplx l) { return l * m(l); }, std::span<const cplx>(pts));
    const SampledFunction g = schur_step(f, f.value_at_zero());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(std::abs(g.values[i] - m(pts[i])) < 1e-10);
  }
  SUBCASE("constant 0.4 reduces to 0") {
    const SampledFunction f = sample([](cplx) { return cplx(0.4); }, std::span<const cplx>(pts));
    const SampledFunction g = schur_step(f, 0.4);
    for (const cplx v : g.values) CHECK(std::abs(v) < 1e-12);
  }
  SUBCASE("unimodular value is not reducible") {
    const SampledFunction f = sample([](cplx) { return cplx(0.0, 1.0); }, std::span<const cplx>(pts));
    try {
      schur_step(f, cplx(0.0, 1.0));
      FAIL("expected NotReducible");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotReducible);
    }
  }
}

TEST_CASE("schur_step with the Richardson stencil fallback") {
  const auto pts = richardson_sample_points(1e-3, 0);
  const SampledFunction f = sample([](cplx l) { return l * MoebiusMap(0.3)(l); }, std::span<const cplx>(pts));
  const SampledFunction g = schur_step(f, f.value_at_zero());
  // g = m_0.3, g(0) = -0.3; the stencil is fourth order in h.
  CHECK(std::abs(g.value_at_zero() - cplx(-0.3)) < 1e-9);
}

TEST_CASE("schur reduction recovers the degree of random Blaschke products") {
  Rng rng(14);
  const auto pts = schur_sample_points();
  for (int t = 0; t < 100; ++t) {
    const int d = rng.integer(0, 5);
    const BlaschkeProduct b = rng.blaschke(d);
    CHECK(schur_reduction_degree(sample(b, std::span<const cplx>(pts))) == d);
  }
  // A non-Blaschke function never reaches a unimodular constant.
  const SampledFunction f = sample([](cplx l) { return 0.5 * l; }, std::span<const cplx>(pts));
  CHECK_THROWS_AS(schur_reduction_degree(f), Error);
}

TEST_CASE("blaschke_degree_of_data examples") {
  const cvec nodes{0.0, 0.3, 0.6};
  DataDegree d = blaschke_degree_of_data(nodes, nodes);
  CHECK(d.blaschke_extremal);
  CHECK(d.degree == 1);
  // Oracle: Pick matrix rank of the same data.
  CHECK(classify_pick({nodes, nodes}).rank == 1);

  d = blaschke_degree_of_data(cvec{0.0, 0.5}, cvec{0.0, 0.25});
  CHECK(d.degree == 2);
  CHECK_FALSE(d.blaschke_extremal);

  try {
    blaschke_degree_of_data(cvec{0.0, 0.5}, cvec{0.0, 0.9});
    FAIL("expected infeasible data");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Infeasible);
  }
}

TEST_CASE("blaschke_degree_of_data at d+1 nodes returns d") {
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const int d = rng.integer(1, 5);
    const BlaschkeProduct b = rng.blaschke(d);
    const cvec nodes = rng.separated_nodes(d + 1, 0.8, 0.1);
    cvec values;
    for (const cplx l : nodes) values.push_back(b(l));
    const DataDegree r = blaschke_degree_of_data(nodes, values);
    CHECK(r.blaschke_extremal);
    CHECK(r.degree == d);
  }
}

TEST_CASE("poincare_distance") {
  CHECK(poincare_distance(0.2, 0.2) == 0.0);
  CHECK(std::abs(poincare_distance(0.0, 0.5) - 0.5493061443340549) < 1e-15);
  CHECK(std::abs(poincare_distance(0.1, 0.7) - poincare_distance(0.7, 0.1)) < 1e-14);
  // Moebius maps are isometries.
  Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const cplx a = rng.disc(0.9), b = rng.disc(0.9);
    const MoebiusMap m(rng.disc(0.9));
    CHECK(std::abs(poincare_distance(m(a), m(b)) - poincare_distance(a, b)) < 1e-10);
  }
}

TEST_CASE("polynomial roots and Lagrange interpolation") {
  const cvec roots{0.5, cplx(0.0, 2.0), -1.5};
  const ComplexPolynomial p = ComplexPolynomial::from_roots(roots, 2.0);
  cvec found = p.roots();
  REQUIRE(found.size() == 3);
  for (const cplx r : roots) {
    double best = 1.0;
    for (const cplx f : found) best = std::min(best, std::abs(f - r));
    CHECK(best < 1e-12);
  }
  const cvec nodes{0.1, -0.2, cplx(0.0, 0.4)};
  const cvec values{1.0, cplx(0.0, 1.0), 2.0};
  const ComplexPolynomial L = lagrange_interpolant(nodes, values);
  CHECK(L.degree() <= 2);
  for (std::size_t i = 0; i < nodes.size(); ++i) CHECK(std::abs(L(nodes[i]) - values[i]) < 1e-12);
}
