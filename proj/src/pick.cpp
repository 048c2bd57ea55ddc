#include "mextremal/pick.hpp"

#include <algorithm>
#include <cmath>

#include "mextremal/error.hpp"
#include "mextremal/kernels.hpp"
#include "mextremal/policy.hpp"

namespace mextremal {

namespace {

constexpr int kMaxHalvings = 50;

// Componentwise Lagrange interpolant through (nodes, values_j) as a map.
MapSpec lagrange_map(const cvec& nodes, const std::vector<cvec>& values) {
  const std::size_t n = values.front().size();
  std::vector<MapSpec> comps;
  for (std::size_t j = 0; j < n; ++j) {
    cvec w;
    for (const cvec& v : values) w.push_back(v[j]);
    comps.push_back(MapSpec::polynomial(lagrange_interpolant(nodes, w)));
  }
  return n == 1 ? comps.front() : MapSpec::tuple(std::move(comps));
}

}  // namespace

void validate(const PickData& data) {
  require(data.nodes.size() == data.values.size(), ErrorKind::Domain, "pick data: nodes/values size mismatch");
  require(!data.nodes.empty(), ErrorKind::Domain, "pick data: at least one node required");
  for (std::size_t i = 0; i < data.nodes.size(); ++i) {
    require(std::abs(data.nodes[i]) < 1.0, ErrorKind::Domain, "pick data: nodes must lie in the open disc");
    require(std::abs(data.values[i]) <= 1.0 + 1e-12, ErrorKind::Domain,
            "pick data: values must lie in the closed disc");
    for (std::size_t j = 0; j < i; ++j)
      require(std::abs(data.nodes[i] - data.nodes[j]) >= 1e-8, ErrorKind::Domain,
              "pick data: nodes must be separated by at least 1e-8");
  }
}

Eigen::MatrixXcd pick_matrix(const PickData& data) {
  validate(data);
  const auto m = static_cast<Eigen::Index>(data.nodes.size());
  Eigen::MatrixXcd M(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      const auto a = static_cast<std::size_t>(i), b = static_cast<std::size_t>(j);
      M(i, j) = (1.0 - data.values[a] * std::conj(data.values[b])) /
                (1.0 - data.nodes[a] * std::conj(data.nodes[b]));
    }
  }
  return M;
}

const char* to_string(PickTag tag) {
  switch (tag) {
    case PickTag::PositiveDefinite:
      return "PositiveDefinite";
    case PickTag::SingularPSD:
      return "SingularPSD";
    case PickTag::Indefinite:
      return "Indefinite";
  }
  return "?";
}

PickVerdict classify_pick(const PickData& data) {
  const Eigen::MatrixXcd M = pick_matrix(data);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M, Eigen::EigenvaluesOnly);
  require(solver.info() == Eigen::Success, ErrorKind::Numeric, "Pick matrix eigen solver failed");
  const Eigen::VectorXd ev = solver.eigenvalues();

  PickVerdict v;
  v.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  v.smallest_eigenvalue = ev(0);
  v.norm = ev.cwiseAbs().maxCoeff();
  const double band = numeric_policy().singular_tol * v.norm;
  int zero = 0;
  for (const double e : v.eigenvalues) {
    if (e > band)
      ++v.rank;
    else if (e >= -band)
      ++zero;
  }
  if (v.smallest_eigenvalue < -band)
    v.tag = PickTag::Indefinite;
  else if (zero > 0)
    v.tag = PickTag::SingularPSD;
  else
    v.tag = PickTag::PositiveDefinite;
  return v;
}

bool disc_weak_extremality(const PickData& data) {
  const PickVerdict v = classify_pick(data);
  switch (v.tag) {
    case PickTag::Indefinite:
      fail(ErrorKind::Inconsistent, "indefinite Pick matrix: data does not come from a disc map");
    case PickTag::SingularPSD:
      // Rank 0 means every value is unimodular and equal: a constant, which
      // no holomorphic self-map of the open disc attains.
      require(v.rank > 0, ErrorKind::Inconsistent, "unimodular constant data is not a disc map");
      return true;
    case PickTag::PositiveDefinite:
      return false;
  }
  return false;
}

InterpolantResult lemma28_interpolant_at(const MapSpec& g, const DomainModel& dom, const cvec& nodes, double r) {
  require(r > 1.0, ErrorKind::Domain, "lemma28: r must exceed 1");
  require(!nodes.empty(), ErrorKind::Domain, "lemma28: at least one node required");
  require(g.dimension() == dom.dimension(), ErrorKind::Domain, "lemma28: map and domain dimensions differ");
  const MapSpec g_r = MapSpec::compose(g, MapSpec::polynomial(ComplexPolynomial({0.0, 1.0 / r})));
  std::vector<cvec> w;
  for (const cplx lam : nodes) {
    cvec a = g(lam);
    const cvec b = g_r(lam);
    for (std::size_t j = 0; j < a.size(); ++j) a[j] -= b[j];
    w.push_back(std::move(a));
  }
  InterpolantResult out;
  out.r = r;
  out.h = MapSpec::sum({g_r, lagrange_map(nodes, w)});
  const auto circle = kernels::circle_grid(numeric_policy().construction_grid);
  out.boundary_defect = kernels::max_defect_serial(out.h, dom, circle);
  for (const cplx lam : nodes) {
    const cvec a = g(lam), b = out.h(lam);
    for (std::size_t j = 0; j < a.size(); ++j) out.node_residual = std::max(out.node_residual, std::abs(a[j] - b[j]));
  }
  return out;
}

InterpolantResult lemma28_interpolant(const MapSpec& g, const DomainModel& dom, const cvec& nodes) {
  require(g.dimension() == dom.dimension(), ErrorKind::Domain, "lemma28: map and domain dimensions differ");
  const auto grid = kernels::disc_grid(numeric_policy().construction_grid);
  const double delta = -kernels::max_defect_serial(g, dom, grid);
  require(delta > 0.0, ErrorKind::Domain, "lemma28: image of g is not compactly inside the domain");
  double step = 0.5;
  for (int i = 0; i <= kMaxHalvings; ++i, step *= 0.5) {
    InterpolantResult res = lemma28_interpolant_at(g, dom, nodes, 1.0 + step);
    if (res.boundary_defect <= -delta / 2.0) {
      res.delta = delta;
      return res;
    }
  }
  fail(ErrorKind::Numeric, "lemma28: image not compact enough (no admissible r after 50 halvings)");
}

}  // namespace mextremal
