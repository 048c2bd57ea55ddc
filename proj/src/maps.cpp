#include "mextremal/maps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mextremal/error.hpp"

namespace mextremal {

namespace {

constexpr int kTaylorSamples = 32;
constexpr double kDivisibilityTol = 1e-9;
constexpr double kDeadBand = 1e-8;

MapSpec weighted_moebius_powers(cplx alpha, const std::vector<int>& k, int scale) {
  std::vector<MapSpec> comps;
  for (const int kj : k) comps.push_back(MapSpec::power(MapSpec::moebius(alpha), scale * kj));
  return comps.size() == 1 ? comps.front() : MapSpec::tuple(std::move(comps));
}

MapSpec coordinate_monomials(const std::vector<std::pair<double, int>>& terms) {
  std::vector<MapSpec> comps;
  for (const auto& [c, e] : terms) comps.push_back(monomial_map(c, e));
  return MapSpec::tuple(std::move(comps));
}

}  // namespace

const char* to_string(FactorClass c) { return c == FactorClass::Interior ? "Interior" : "Boundary"; }

FactorResult lemma10_factor(const MapSpec& f, cplx alpha, const std::vector<int>& k, const DomainModel& dom) {
  const auto n = static_cast<std::size_t>(f.dimension());
  require(k.size() == n && dom.dimension() == f.dimension(), ErrorKind::Domain, "lemma10_factor: dimension mismatch");
  require(std::abs(alpha) < 1.0, ErrorKind::Domain, "lemma10_factor: alpha must lie in the open disc");
  for (const int kj : k) require(kj >= 0, ErrorKind::Domain, "lemma10_factor: weights must be nonnegative");

  // Taylor coefficients at alpha from a small circle: each f_j must vanish to
  // order k_j there.
  const double rho = 0.25 * (1.0 - std::abs(alpha));
  std::vector<cvec> samples;
  double scale = 1.0;
  for (int t = 0; t < kTaylorSamples; ++t) {
    samples.push_back(f(alpha + std::polar(rho, 2.0 * std::numbers::pi * t / kTaylorSamples)));
    for (const cplx v : samples.back()) scale = std::max(scale, std::abs(v));
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (int i = 0; i < k[j]; ++i) {
      cplx ci = 0.0;
      for (int t = 0; t < kTaylorSamples; ++t)
        ci += samples[static_cast<std::size_t>(t)][j] * std::polar(1.0, -2.0 * std::numbers::pi * i * t / kTaylorSamples);
      ci /= static_cast<double>(kTaylorSamples);  // c_i rho^i
      require(std::abs(ci) <= kDivisibilityTol * scale, ErrorKind::Domain,
              "lemma10_factor: component is not divisible by the Moebius power");
    }
  }

  FactorResult out;
  out.phi = MapSpec::quotient(f, weighted_moebius_powers(alpha, k, 1));
  out.gauge_at_zero = minkowski_value(dom, out.phi(0.0));
  if (out.gauge_at_zero < 1.0 - kDeadBand) {
    out.classification = FactorClass::Interior;
  } else if (out.gauge_at_zero <= 1.0 + kDeadBand) {
    out.classification = FactorClass::Boundary;
  } else {
    fail(ErrorKind::Inconsistent, "lemma10_factor: phi(0) lies outside the domain");
  }
  // The dichotomy says phi maps the whole disc into D or into its boundary.
  for (int t = 0; t < 8; ++t) {
    const double h = minkowski_value(dom, out.phi(std::polar(0.5, 2.0 * std::numbers::pi * t / 8)));
    const bool ok = out.classification == FactorClass::Interior ? h < 1.0 - kDeadBand : std::abs(h - 1.0) <= 1e-6;
    require(ok, ErrorKind::Inconsistent, "lemma10_factor: samples disagree with the classification at 0");
  }
  return out;
}

MapSpec lemma10_multiply(const MapSpec& f, cplx mu, int l, const std::vector<int>& k) {
  require(static_cast<int>(k.size()) == f.dimension(), ErrorKind::Domain, "lemma10_multiply: dimension mismatch");
  require(l >= 1, ErrorKind::Domain, "lemma10_multiply: l must be positive");
  for (const int kj : k)
    require(kj >= 0 && kj <= 1, ErrorKind::Domain, "lemma10_multiply: requires weights k_j <= 1");
  return MapSpec::product({weighted_moebius_powers(mu, k, l), f});
}

TaggedMap lemma10_multiply(const TaggedMap& f, cplx mu, int l) {
  TaggedMap out = f;
  out.map = lemma10_multiply(f.map, mu, l, f.domain.k);
  out.m = f.m + l;
  out.extremal = false;
  out.geodesic.reset();
  out.note = "weak (m+l)-extremal for the nodes of f together with mu (claim carried from f)";
  return out;
}

BallAutomorphism ball_automorphism(cvec w, std::optional<Eigen::MatrixXcd> unitary) {
  const auto n = static_cast<Eigen::Index>(w.size());
  require(n >= 1, ErrorKind::Domain, "ball automorphism: empty center");
  double w2 = 0.0;
  for (const cplx x : w) w2 += std::norm(x);
  require(w2 < 1.0, ErrorKind::Domain, "ball automorphism: center must lie in the open ball");
  Eigen::MatrixXcd U = unitary.value_or(Eigen::MatrixXcd::Identity(n, n));
  require(U.rows() == n && U.cols() == n, ErrorKind::Domain, "ball automorphism: unitary has the wrong size");
  require((U * U.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12, ErrorKind::Domain,
          "ball automorphism: matrix is not unitary");
  return {std::move(U), std::move(w)};
}

cvec chi_eval(const BallAutomorphism& aut, const cvec& z) {
  const std::size_t n = aut.w.size();
  require(z.size() == n, ErrorKind::Domain, "chi_eval: dimension mismatch");
  double w2 = 0.0;
  cplx zw = 0.0;  // <z, w>
  for (std::size_t j = 0; j < n; ++j) {
    w2 += std::norm(aut.w[j]);
    zw += z[j] * std::conj(aut.w[j]);
  }
  cvec chi = z;
  if (w2 > 0.0) {
    const cplx den = 1.0 - zw;
    require(std::abs(den) >= 1e-15, ErrorKind::Internal, "chi_eval: 1 - <z, w> vanished");
    const double s = std::sqrt(1.0 - w2);
    for (std::size_t j = 0; j < n; ++j)
      chi[j] = (s * (w2 * z[j] - zw * aut.w[j]) - w2 * aut.w[j] + zw * aut.w[j]) / (w2 * den);
  }
  Eigen::VectorXcd v = Eigen::Map<const Eigen::VectorXcd>(chi.data(), static_cast<Eigen::Index>(n));
  v = aut.unitary * v;
  return cvec(v.data(), v.data() + v.size());
}

MapSpec ball3_normal_form(double a, cplx alpha, int n) {
  require(a >= 0.0 && a <= 1.0, ErrorKind::Domain, "ball3_normal_form: a must lie in [0, 1]");
  require(n >= 2, ErrorKind::Domain, "ball3_normal_form: dimension must be at least 2");
  std::vector<MapSpec> comps{monomial_map(a, 1),
                             MapSpec::product({monomial_map(std::sqrt(1.0 - a * a), 1), MapSpec::moebius(alpha)})};
  for (int j = 2; j < n; ++j) comps.push_back(MapSpec::constant(cplx(0.0)));
  return MapSpec::tuple(std::move(comps));
}

Thm32Forward thm32_forward(double b, cplx c) {
  require(b > 0.0 && b < 1.0, ErrorKind::Domain, "thm32_forward: b must lie in (0, 1)");
  require(std::abs(c) > 0.0 && std::abs(c) < 1.0, ErrorKind::Domain, "thm32_forward: c must lie in the punctured disc");
  const double b2 = b * b, c2 = std::norm(c);
  const double den = 1.0 - b2 * b2 * c2;
  Thm32Forward out;
  out.gamma = c * (1.0 + b2) / (1.0 + b2 * c2);
  out.beta = std::sqrt((b2 - b2 * c2) / den);
  out.alpha = std::sqrt((1.0 - b2) * (1.0 + b2 * c2) / den);
  out.a = std::sqrt(1.0 - b2);
  return out;
}

Thm32Inverse thm32_inverse(double p, double q) {
  require(p > 0.0 && p < 1.0 && q > 0.0 && q < 1.0, ErrorKind::Domain, "thm32_inverse: p, q must lie in (0, 1)");
  const MoebiusMap mp(p), mq(q);
  auto F = [&](double lam) { return (mq(lam) - lam * mp(lam * mq(lam))).real(); };
  double lo = 0.0, hi = q;
  require(F(lo) < 0.0 && F(hi) > 0.0, ErrorKind::Numeric, "thm32_inverse: bisection failed to bracket");
  // Bisect down to adjacent doubles; b^2 = -m_q(c) / c amplifies the error in c.
  for (int step = 0; step < 200; ++step) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (F(mid) < 0.0 ? lo : hi) = mid;
  }
  const double c = 0.5 * (lo + hi);
  const double b2 = -mq(c).real() / c;
  require(b2 > 0.0 && b2 < 1.0, ErrorKind::Numeric, "thm32_inverse: recovered b^2 outside (0, 1)");
  return {std::sqrt(b2), c};
}

TaggedMap family_prop1(int m, double a) {
  require(m >= 3 && a > 0.0 && a < 1.0, ErrorKind::Domain, "family_prop1: need m >= 3 and 0 < a < 1");
  return {coordinate_monomials({{a, m - 2}, {1.0 - a, m - 1}}), ellipsoid({0.5, 0.5}), m, true, true, false, "m-extremal, not an m-geodesic"};
}

TaggedMap family_prop1_geodesic(int m, double a) {
  require(m >= 3 && a > 0.0 && a < 1.0, ErrorKind::Domain, "family_prop1_geodesic: need m >= 3 and 0 < a < 1");
  return {coordinate_monomials({{a, m - 1}, {1.0 - a, m - 1}}), ellipsoid({0.5, 0.5}), m, true, true, true,
          "m-geodesic with left inverse z1 + z2"};
}

TaggedMap family_propab(int m, double a) {
  require(m >= 4 && a > 0.0 && a < 0.5, ErrorKind::Domain, "family_propab: need m >= 4 and 0 < a < 1/2");
  const double b = 1.0 - 4.0 * a * a;
  return {coordinate_monomials({{a, 1}, {a, m - 2}, {b, m - 1}}), propab_domain(), m, true, true, true,
          "m-geodesic with left inverse 4 z1 z2 + z3; f / lam is not an (m-1)-geodesic"};
}

TaggedMap family_prop40(int m, double a) {
  require(m >= 5 && a > 0.0 && a < 1.0 / std::numbers::sqrt2, ErrorKind::Domain,
          "family_prop40: need m >= 5 and 0 < a < 1/sqrt(2)");
  const double b = 1.0 - 2.0 * a * a;
  return {coordinate_monomials({{a, 1}, {a, m - 2}, {b, m - 1}}), prop40_domain(), m, true, true, true,
          "m-geodesic with left inverse 2 z1 z2 + z3; f / lam is not an (m-1)-geodesic"};
}

TaggedMap family_propmm(int m, double a) {
  require(m >= 4 && a > 0.0 && a < 1.0, ErrorKind::Domain, "family_propmm: need m >= 4 and 0 < a < 1");
  return {coordinate_monomials({{a, m - 2}, {std::sqrt(1.0 - a * a), m - 1}}), ball(2), m, true, true, false,
          "m-extremal, not an m-geodesic"};
}

TaggedMap family_nc(const std::vector<double>& p, const cvec& a, const BlaschkeProduct& b) {
  DomainModel dom = ellipsoid(p);
  require(!convexity_check(p), ErrorKind::Domain, "family_nc: the ellipsoid must be non-convex");
  require(static_cast<int>(a.size()) == dom.dimension(), ErrorKind::Domain, "family_nc: dimension mismatch");
  require(std::abs(membership_defect(dom, a)) <= 1e-10, ErrorKind::Domain, "family_nc: a must lie on the boundary");
  require(b.degree() >= 1, ErrorKind::Domain, "family_nc: B must be non-constant");
  const auto& z = b.zeros();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(std::abs(z[i] - z[j]) > 1e-12, ErrorKind::Domain, "family_nc: zeros of B must be distinct");
  return {MapSpec::product({MapSpec::constant(a), MapSpec::blaschke(b)}), std::move(dom), b.degree() + 1, false, true,
          false,
          "weak m-extremal; not m-extremal for the boundary points a at which lam -> lam a fails to be a 2-extremal"};
}

}  // namespace mextremal
