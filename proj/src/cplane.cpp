#include "mextremal/cplane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "mextremal/error.hpp"
#include "mextremal/policy.hpp"

namespace mextremal {

namespace {

constexpr double kConstructionTol = 1e-12;

std::vector<cplx> ring(double radius, int size) {
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) pts.push_back(std::polar(radius, 2.0 * std::numbers::pi * k / size));
  return pts;
}

std::optional<std::size_t> find_point(const std::vector<cplx>& pts, cplx target, double tol) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (std::abs(pts[i] - target) <= tol) return i;
  return std::nullopt;
}

// Indices of the equispaced ring that best recovers the value at the origin
// (smallest aliasing bound radius^N), if the point set contains one.
std::optional<std::vector<std::size_t>> best_ring(const std::vector<cplx>& pts) {
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (std::abs(pts[i]) > 0.0) order.push_back(i);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return std::abs(pts[a]) < std::abs(pts[b]); });

  std::optional<std::vector<std::size_t>> best;
  double best_bound = 1.0;
  std::size_t start = 0;
  while (start < order.size()) {
    const double r0 = std::abs(pts[order[start]]);
    std::size_t end = start;
    while (end < order.size() && std::abs(std::abs(pts[order[end]]) - r0) <= 1e-12 * r0) ++end;
    std::vector<std::size_t> group(order.begin() + static_cast<std::ptrdiff_t>(start),
                                   order.begin() + static_cast<std::ptrdiff_t>(end));
    start = end;
    const std::size_t n = group.size();
    if (n < 8 || r0 < 0.05 || r0 > 1.0) continue;
    std::vector<double> angles;
    for (std::size_t i : group) angles.push_back(std::arg(pts[i]));
    std::sort(angles.begin(), angles.end());
    const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
    bool equispaced = true;
    for (std::size_t i = 1; i < n && equispaced; ++i)
      equispaced = std::abs(angles[i] - angles[i - 1] - step) <= 1e-9;
    if (!equispaced) continue;
    const double bound = std::pow(r0, static_cast<double>(n));
    if (bound < best_bound) {
      best_bound = bound;
      best = std::move(group);
    }
  }
  return best;
}

}  // namespace

MoebiusMap::MoebiusMap(cplx alpha) : alpha_(alpha) {
  require(std::abs(alpha) < 1.0 - kConstructionTol, ErrorKind::Domain,
          "Moebius parameter must lie in the open unit disc");
}

cplx MoebiusMap::operator()(cplx lam) const {
  const cplx den = 1.0 - std::conj(alpha_) * lam;
  require(std::abs(den) >= 1e-15, ErrorKind::Internal, "Moebius denominator vanished");
  return (lam - alpha_) / den;
}

cplx moebius_eval(const MoebiusMap& m, cplx lam) {
  require(std::abs(lam) <= 1.0 + kConstructionTol, ErrorKind::Domain,
          "moebius_eval expects a point of the closed disc");
  return m(lam);
}

BlaschkeProduct::BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular_factor)
    : zeros_(std::move(zeros)), factor_(unimodular_factor) {
  require(std::abs(std::abs(factor_) - 1.0) <= kConstructionTol, ErrorKind::Domain,
          "Blaschke unimodular factor must have modulus 1");
  for (const cplx a : zeros_)
    require(std::abs(a) < 1.0 - kConstructionTol, ErrorKind::Domain, "Blaschke zeros must lie in the open disc");
}

BlaschkeProduct BlaschkeProduct::monomial(int degree, cplx unimodular_factor) {
  require(degree >= 0, ErrorKind::Domain, "Blaschke degree must be nonnegative");
  return BlaschkeProduct(std::vector<cplx>(static_cast<std::size_t>(degree), 0.0), unimodular_factor);
}

cplx BlaschkeProduct::operator()(cplx lam) const {
  cplx value = factor_;
  for (const cplx a : zeros_) value *= (lam - a) / (1.0 - std::conj(a) * lam);
  return value;
}

BlaschkeProduct BlaschkeProduct::canonical() const {
  std::vector<cplx> z = zeros_;
  std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  cplx f = factor_;
  if (f.real() < 0.0 || (f.real() == 0.0 && f.imag() < 0.0)) f = -f;
  return BlaschkeProduct(std::move(z), f);
}

ComplexPolynomial BlaschkeProduct::numerator() const {
  return ComplexPolynomial::from_roots(zeros_, factor_);
}

ComplexPolynomial BlaschkeProduct::denominator() const {
  ComplexPolynomial d = ComplexPolynomial::constant(1.0);
  for (const cplx a : zeros_) d = d * ComplexPolynomial({1.0, -std::conj(a)});
  return d;
}

cplx blaschke_eval(const BlaschkeProduct& b, cplx lam) {
  require(std::abs(lam) <= 1.0 + kConstructionTol, ErrorKind::Domain,
          "blaschke_eval expects a point of the closed disc");
  return b(lam);
}

cplx SampledFunction::value_at_zero() const {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i] == cplx(0.0)) return values[i];
  fail(ErrorKind::Domain, "sample set does not contain the origin");
}

std::vector<cplx> schur_sample_points(int ring_size, std::span<const double> radii) {
  static constexpr double kDefaultRadii[] = {0.5, 0.85};
  if (radii.empty()) radii = kDefaultRadii;
  std::vector<cplx> pts{0.0};
  for (const double r : radii) {
    const auto ring_pts = ring(r, ring_size);
    pts.insert(pts.end(), ring_pts.begin(), ring_pts.end());
  }
  return pts;
}

std::vector<cplx> richardson_sample_points(double h, int ring_size) {
  std::vector<cplx> pts{0.0, h, -h, 2.0 * h, -2.0 * h};
  const auto ring_pts = ring(0.5, ring_size);
  pts.insert(pts.end(), ring_pts.begin(), ring_pts.end());
  return pts;
}

SampledFunction schur_step(const SampledFunction& f, cplx f0) {
  require(f.points.size() == f.values.size(), ErrorKind::Domain, "schur_step: points/values size mismatch");
  if (std::abs(f0) >= 1.0 - numeric_policy().unimodular_tol)
    fail(ErrorKind::NotReducible, "constant unimodular, not reducible");
  const MoebiusMap m(f0);

  SampledFunction g;
  g.points = f.points;
  g.values.resize(f.values.size());
  std::vector<cplx> composed(f.values.size());
  std::optional<std::size_t> origin;
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    composed[i] = m(f.values[i]);
    if (f.points[i] == cplx(0.0)) {
      origin = i;
    } else {
      g.values[i] = composed[i] / f.points[i];
    }
  }
  require(origin.has_value(), ErrorKind::Domain, "schur_step: sample set must contain 0");

  if (const auto ring_idx = best_ring(f.points)) {
    cplx mean = 0.0;
    for (std::size_t i : *ring_idx) mean += g.values[i];
    g.values[*origin] = mean / static_cast<double>(ring_idx->size());
    return g;
  }

  // Fall back to the derivative of m_{f0} o f at 0 from +-h, +-2h.
  std::optional<double> h_best;
  std::size_t ip = 0, im = 0, ip2 = 0, im2 = 0;
  for (std::size_t i = 0; i < f.points.size(); ++i) {
    const cplx p = f.points[i];
    if (p.imag() != 0.0 || p.real() <= 0.0) continue;
    const double h = p.real();
    const double tol = 1e-14 * h;
    const auto a = find_point(f.points, -h, tol);
    const auto b = find_point(f.points, 2.0 * h, tol);
    const auto c = find_point(f.points, -2.0 * h, tol);
    if (a && b && c && (!h_best || h < *h_best)) {
      h_best = h;
      ip = i, im = *a, ip2 = *b, im2 = *c;
    }
  }
  require(h_best.has_value(), ErrorKind::Domain,
          "schur_step: samples contain neither an equispaced ring nor a +-h, +-2h stencil");
  const double h = *h_best;
  g.values[*origin] =
      (8.0 * (composed[ip] - composed[im]) - (composed[ip2] - composed[im2])) / (12.0 * h);
  return g;
}

int schur_reduction_degree(SampledFunction f, int max_steps) {
  const double tol = numeric_policy().unimodular_tol;
  for (int step = 0; step <= max_steps; ++step) {
    const cplx f0 = f.value_at_zero();
    const double r = std::abs(f0);
    if (r > 1.0 + tol) fail(ErrorKind::Inconsistent, "sampled function leaves the closed disc");
    if (r >= 1.0 - tol) {
      double spread = 0.0;
      for (const cplx v : f.values) spread = std::max(spread, std::abs(v - f0));
      require(spread <= 1e-8, ErrorKind::Inconsistent,
              "unimodular value at 0 but the sampled function is not constant");
      return step;
    }
    if (step == max_steps) break;
    f = schur_step(f, f0);
  }
  fail(ErrorKind::Inconsistent, "samples do not reduce to a unimodular constant: not a finite Blaschke product");
}

DataDegree blaschke_degree_of_data(std::span<const cplx> nodes, std::span<const cplx> values) {
  require(nodes.size() == values.size(), ErrorKind::Domain, "nodes/values size mismatch");
  require(!nodes.empty(), ErrorKind::Domain, "at least one node required");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    require(std::abs(nodes[i]) < 1.0, ErrorKind::Domain, "nodes must lie in the open disc");
    for (std::size_t j = 0; j < i; ++j)
      require(nodes[i] != nodes[j], ErrorKind::Domain, "nodes must be distinct");
  }
  const NumericPolicy& policy = numeric_policy();
  std::vector<cplx> lam(nodes.begin(), nodes.end());
  std::vector<cplx> w(values.begin(), values.end());
  int steps = 0;
  while (true) {
    for (const cplx v : w)
      if (std::abs(v) > 1.0 + policy.infeasible_slack)
        fail(ErrorKind::Infeasible, "infeasible data: no holomorphic interpolant into the closed disc");
    // Pivot on the smallest value: the degree does not depend on the order and
    // m_w amplifies rounding by 1 / (1 - |w|^2).
    const auto k = static_cast<std::size_t>(
        std::min_element(w.begin(), w.end(), [](cplx x, cplx y) { return std::abs(x) < std::abs(y); }) - w.begin());
    const cplx pivot = w[k];
    if (std::abs(pivot) >= 1.0 - policy.unimodular_tol) {
      // A Schur function with a unimodular interior value is that constant.
      for (const cplx v : w)
        if (std::abs(v - pivot) > 1e-8)
          fail(ErrorKind::Infeasible, "infeasible data: unimodular value forces a constant interpolant");
      return DataDegree{steps >= 1, steps};
    }
    if (w.size() == 1) return DataDegree{false, steps + 1};
    const MoebiusMap mw(pivot);
    const MoebiusMap ml(lam[k]);
    std::vector<cplx> next_lam, next_w;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (j == k) continue;
      next_w.push_back(mw(w[j]) / ml(lam[j]));
      next_lam.push_back(lam[j]);
    }
    lam = std::move(next_lam);
    w = std::move(next_w);
    ++steps;
  }
}

double poincare_distance(cplx a, cplx b) {
  require(std::abs(a) < 1.0 && std::abs(b) < 1.0, ErrorKind::Domain, "poincare_distance expects disc points");
  return std::atanh(std::abs(MoebiusMap(a)(b)));
}

}  // namespace mextremal
