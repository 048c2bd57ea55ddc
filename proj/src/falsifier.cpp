#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "mextremal/error.hpp"
#include "mextremal/kernels.hpp"
#include "mextremal/pick.hpp"

namespace mextremal {

namespace {

constexpr double kInitialStep = 0.25;
constexpr double kMinStep = 1e-7;
constexpr double kEarlyExit = -1e-2;
constexpr double kRestartNoise = 0.25;

struct Problem {
  const DomainModel* dom = nullptr;
  std::size_t n = 0;       // target dimension
  std::size_t terms = 0;   // degree cap + 1
  std::vector<cplx> points;
  std::vector<cvec> base;   // L(lam_s)
  std::vector<cvec> basis;  // B(lam_s) lam_s^d
};

using Coeffs = std::vector<cvec>;  // [component][degree]

struct Search {
  Coeffs q;
  double objective = 0.0;
};

double objective_of(const Problem& pb, const std::vector<cvec>& H) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const cvec& h : H) worst = std::max(worst, membership_defect(*pb.dom, h));
  return worst;
}

std::vector<cvec> evaluate(const Problem& pb, const Coeffs& q) {
  std::vector<cvec> H = pb.base;
  for (std::size_t s = 0; s < pb.points.size(); ++s)
    for (std::size_t j = 0; j < pb.n; ++j)
      for (std::size_t d = 0; d < pb.terms; ++d) H[s][j] += q[j][d] * pb.basis[s][d];
  return H;
}

// Coordinate descent on the real and imaginary parts of the Q coefficients,
// keeping h at the grid points cached so a trial costs one pass.
Search descend(const Problem& pb, Coeffs q, int budget) {
  std::vector<cvec> H = evaluate(pb, q);
  double obj = objective_of(pb, H);
  std::vector<cvec> trial = H;
  double step = kInitialStep;
  const cplx dirs[] = {1.0, -1.0, cplx(0.0, 1.0), cplx(0.0, -1.0)};
  for (int sweep = 0; sweep < budget && step >= kMinStep && obj > kEarlyExit; ++sweep) {
    bool improved = false;
    for (std::size_t j = 0; j < pb.n; ++j) {
      for (std::size_t d = 0; d < pb.terms; ++d) {
        for (const cplx dir : dirs) {
          const cplx delta = step * dir;
          double worst = -std::numeric_limits<double>::infinity();
          for (std::size_t s = 0; s < pb.points.size() && worst < obj; ++s) {
            trial[s] = H[s];
            trial[s][j] += delta * pb.basis[s][d];
            worst = std::max(worst, membership_defect(*pb.dom, trial[s]));
          }
          if (worst < obj) {
            for (std::size_t s = 0; s < pb.points.size(); ++s) H[s][j] += delta * pb.basis[s][d];
            q[j][d] += delta;
            obj = worst;
            improved = true;
            break;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return {std::move(q), obj};
}

}  // namespace

FalsifierResult falsify_weak_extremality(const MapSpec& f, const DomainModel& dom, const cvec& nodes,
                                         const FalsifierOptions& options) {
  require(f.dimension() == dom.dimension(), ErrorKind::Domain, "falsifier: map and domain dimensions differ");
  require(!nodes.empty(), ErrorKind::Domain, "falsifier: at least one node required");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    require(std::abs(nodes[i]) < 1.0, ErrorKind::Domain, "falsifier: nodes must lie in the open disc");
    for (std::size_t j = 0; j < i; ++j)
      require(nodes[i] != nodes[j], ErrorKind::Domain, "falsifier: nodes must be distinct");
  }
  require(options.restarts >= 1, ErrorKind::Domain, "falsifier: at least one restart required");

  const std::size_t n = static_cast<std::size_t>(dom.dimension());
  const int degree = options.degree >= 0 ? options.degree : static_cast<int>(nodes.size()) + 4;

  std::vector<ComplexPolynomial> lagrange;
  for (std::size_t j = 0; j < n; ++j) {
    cvec w;
    for (const cplx lam : nodes) w.push_back(f(lam)[j]);
    lagrange.push_back(lagrange_interpolant(nodes, w));
  }
  const BlaschkeProduct bn(nodes);

  Problem pb;
  pb.dom = &dom;
  pb.n = n;
  pb.terms = static_cast<std::size_t>(degree + 1);
  pb.points = kernels::circle_grid(options.search_grid);
  for (const cplx lam : pb.points) {
    cvec b(n), basis(pb.terms);
    for (std::size_t j = 0; j < n; ++j) b[j] = lagrange[j](lam);
    cplx pw = bn(lam);
    for (std::size_t d = 0; d < pb.terms; ++d, pw *= lam) basis[d] = pw;
    pb.base.push_back(std::move(b));
    pb.basis.push_back(std::move(basis));
  }

  // Restart 0: Q cancels the analytic part of L conj(B) on the circle, the
  // least-squares choice of |h| = |L conj(B) + Q| there.
  Coeffs q0(n, cvec(pb.terms, 0.0));
  for (std::size_t s = 0; s < pb.points.size(); ++s) {
    const cplx lb = std::conj(pb.basis[s][0]);
    cplx pw = 1.0;
    for (std::size_t d = 0; d < pb.terms; ++d, pw *= std::conj(pb.points[s]))
      for (std::size_t j = 0; j < n; ++j) q0[j][d] -= pb.base[s][j] * lb * pw;
  }
  for (cvec& row : q0)
    for (cplx& c : row) c /= static_cast<double>(pb.points.size());

  const int restarts = options.restarts;
  std::vector<Search> results(static_cast<std::size_t>(restarts));
  auto run = [&](int r) {
    Coeffs q = q0;
    if (r > 0) {
      std::mt19937_64 rng(kernels::chunk_seed(options.seed, static_cast<std::uint64_t>(r)));
      std::normal_distribution<double> normal(0.0, kRestartNoise);
      for (cvec& row : q)
        for (std::size_t d = 0; d < row.size(); ++d)
          row[d] += cplx(normal(rng), normal(rng)) / static_cast<double>(d + 1);
    }
    results[static_cast<std::size_t>(r)] = descend(pb, std::move(q), options.budget);
  };
  if (options.parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < restarts; ++r) run(r);
  } else {
    for (int r = 0; r < restarts; ++r) run(r);
  }

  FalsifierResult out;
  out.degree = degree;
  out.seed = options.seed;
  for (const Search& s : results) out.restart_defects.push_back(s.objective);

  std::vector<int> order(static_cast<std::size_t>(restarts));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return results[static_cast<std::size_t>(a)].objective < results[static_cast<std::size_t>(b)].objective;
  });
  out.best_restart = order.front();
  out.best_search_defect = results[static_cast<std::size_t>(order.front())].objective;

  std::vector<cplx> verify = kernels::circle_grid(options.verify_grid);
  const auto fine = kernels::circle_grid(4 * options.verify_grid);
  const auto inner = kernels::disc_grid(512);
  verify.insert(verify.end(), fine.begin(), fine.end());
  verify.insert(verify.end(), inner.begin(), inner.end());

  for (const int r : order) {
    const Search& s = results[static_cast<std::size_t>(r)];
    if (s.objective >= -options.margin) break;
    std::vector<MapSpec> comps;
    for (std::size_t j = 0; j < n; ++j)
      comps.push_back(MapSpec::sum({MapSpec::polynomial(lagrange[j]),
                                    MapSpec::product({MapSpec::blaschke(bn), MapSpec::polynomial(ComplexPolynomial(s.q[j]))})}));
    MapSpec h = n == 1 ? comps.front() : MapSpec::tuple(std::move(comps));
    const double verified = kernels::max_defect_serial(h, dom, verify);
    if (verified < -options.margin) {
      out.falsified = true;
      out.witness = std::move(h);
      out.verified_defect = verified;
      out.best_restart = r;
      return out;
    }
  }
  out.verified_defect = out.best_search_defect;
  return out;
}

}  // namespace mextremal
