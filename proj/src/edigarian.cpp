#include <algorithm>
#include <cmath>

#include "mextremal/error.hpp"
#include "mextremal/maps.hpp"

namespace mextremal {

namespace {

constexpr double kUnitCircleTol = 1e-12;
constexpr double kTrimTol = 1e-13;
constexpr double kCircleBand = 1e-8;
constexpr double kPairTol = 1e-8;
constexpr double kResidualTol = 1e-8;

bool on_circle(cplx alpha) { return std::abs(std::abs(alpha) - 1.0) <= kUnitCircleTol; }

// (lam - alpha)(1 - conj(alpha) lam)
ComplexPolynomial pair_factor(cplx alpha) {
  return ComplexPolynomial({-alpha, 1.0 + std::norm(alpha), -std::conj(alpha)});
}

ComplexPolynomial lhs_of(const cvec& a, const std::vector<double>& p, const std::vector<cvec>& alpha) {
  ComplexPolynomial q;
  for (std::size_t j = 0; j < a.size(); ++j) {
    ComplexPolynomial term = ComplexPolynomial::constant(std::pow(std::abs(a[j]), 2.0 * p[j]));
    for (const cvec& row : alpha) term = term * pair_factor(row[j]);
    q += term;
  }
  return q;
}

void check_shapes(std::size_t n, std::size_t m1, const std::vector<double>& p, const cvec& a,
                  const std::vector<cvec>& alpha, const std::vector<std::vector<int>>& r) {
  require(n >= 1 && m1 >= 1, ErrorKind::Domain, "edigarian: need n >= 1 and m >= 2");
  require(p.size() == n && a.size() == n, ErrorKind::Domain, "edigarian: p and a must have length n");
  require(alpha.size() == m1 && r.size() == m1, ErrorKind::Domain, "edigarian: alpha and r need m - 1 rows");
  for (std::size_t k = 0; k < m1; ++k) {
    require(alpha[k].size() == n && r[k].size() == n, ErrorKind::Domain, "edigarian: alpha and r rows need n entries");
    for (std::size_t j = 0; j < n; ++j) {
      require(std::abs(alpha[k][j]) <= 1.0 + kUnitCircleTol, ErrorKind::Domain,
              "edigarian: alpha_kj must lie in the closed disc");
      require(r[k][j] == 0 || r[k][j] == 1, ErrorKind::Domain, "edigarian: r_kj must be 0 or 1");
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    require(p[j] > 0.0, ErrorKind::Domain, "edigarian: exponents must be positive");
    require(a[j] != cplx(0.0), ErrorKind::Domain, "edigarian: amplitudes must be nonzero");
  }
}

}  // namespace

void validate(const EdigarianParams& params) {
  const auto n = static_cast<std::size_t>(params.n);
  const auto m1 = static_cast<std::size_t>(params.m - 1);
  check_shapes(n, m1, params.p, params.a, params.alpha, params.r);
  require(params.alpha0.size() == m1, ErrorKind::Domain, "edigarian: alpha0 needs m - 1 entries");
  for (const cplx z : params.alpha0)
    require(std::abs(z) < 1.0, ErrorKind::Domain, "edigarian: alpha0 must lie in the open disc");
}

EdigarianValue edigarian_eval_checked(const EdigarianParams& params, cplx lam) {
  validate(params);
  require(std::abs(lam) <= 1.0 + kUnitCircleTol, ErrorKind::Domain, "edigarian_eval expects a closed-disc point");
  EdigarianValue out;
  out.value.resize(static_cast<std::size_t>(params.n));
  for (std::size_t j = 0; j < out.value.size(); ++j) {
    cplx v = params.a[j];
    const double s = 1.0 / params.p[j];
    for (std::size_t k = 0; k < params.alpha.size(); ++k) {
      const cplx al = params.alpha[k][j];
      if (params.r[k][j] == 1) v *= on_circle(al) ? -al : MoebiusMap(al)(lam);
      const cplx num = 1.0 - std::conj(al) * lam;
      const cplx den = 1.0 - std::conj(params.alpha0[k]) * lam;
      if (std::abs(num) < 1e-14) {
        out.boundary_singularity = true;
        v = 0.0;
        continue;
      }
      v *= std::exp(s * (std::log(num) - std::log(den)));
    }
    out.value[j] = v;
  }
  return out;
}

cvec edigarian_eval(const EdigarianParams& params, cplx lam) { return edigarian_eval_checked(params, lam).value; }

MapSpec edigarian_map(const EdigarianParams& params) {
  validate(params);
  std::vector<MapSpec> comps;
  for (std::size_t j = 0; j < static_cast<std::size_t>(params.n); ++j) {
    std::vector<MapSpec> factors{MapSpec::constant(params.a[j])};
    for (std::size_t k = 0; k < params.alpha.size(); ++k) {
      const cplx al = params.alpha[k][j];
      if (params.r[k][j] == 1) factors.push_back(on_circle(al) ? MapSpec::constant(-al) : MapSpec::moebius(al));
      factors.push_back(MapSpec::real_power(al, params.alpha0[k], 1.0 / params.p[j]));
    }
    comps.push_back(MapSpec::product(std::move(factors)));
  }
  return comps.size() == 1 ? comps.front() : MapSpec::tuple(std::move(comps));
}

ComplexPolynomial edigarian_lhs(const EdigarianParams& params) { return lhs_of(params.a, params.p, params.alpha); }

ComplexPolynomial edigarian_rhs(const EdigarianParams& params) {
  ComplexPolynomial q = ComplexPolynomial::constant(1.0);
  for (const cplx z : params.alpha0) q = q * pair_factor(z);
  return q;
}

double edigarian_check(const EdigarianParams& params) {
  validate(params);
  return max_coefficient_distance(edigarian_lhs(params), edigarian_rhs(params));
}

EdigarianCompletion edigarian_complete(const cvec& a, const std::vector<double>& p, const std::vector<cvec>& alpha,
                                       const std::vector<std::vector<int>>& r) {
  const std::size_t n = a.size();
  const std::size_t m1 = alpha.size();
  check_shapes(n, m1, p, a, alpha, r);
  const ComplexPolynomial q = lhs_of(a, p, alpha);
  const std::size_t full = 2 * m1;

  // Split off exact-looking zero roots and roots at infinity (negligible low
  // and high coefficients) before the eigenvalue solve.
  const auto& c = q.coefficients();
  double cmax = 0.0;
  for (const cplx x : c) cmax = std::max(cmax, std::abs(x));
  require(cmax > 0.0, ErrorKind::Infeasible, "edigarian_complete: left-hand side vanishes");
  std::size_t lo = 0, hi = c.size();
  while (lo < hi && std::abs(c[lo]) <= kTrimTol * cmax) ++lo;
  while (hi > lo && std::abs(c[hi - 1]) <= kTrimTol * cmax) --hi;
  const std::size_t at_zero = lo;
  const std::size_t at_infinity = full + 1 - hi;
  require(at_zero == at_infinity, ErrorKind::Infeasible, "edigarian_complete: roots at 0 and infinity do not pair");

  cvec inside(at_zero, 0.0), outside;
  if (hi - lo > 1) {
    const ComplexPolynomial core(cvec(c.begin() + static_cast<std::ptrdiff_t>(lo), c.begin() + static_cast<std::ptrdiff_t>(hi)));
    for (const cplx z : core.roots()) {
      const double rz = std::abs(z);
      if (rz < 1.0 - kCircleBand)
        inside.push_back(z);
      else if (rz > 1.0 + kCircleBand)
        outside.push_back(z);
      else
        fail(ErrorKind::Domain, "edigarian_complete: root on the unit circle (degenerate instance)");
    }
  }
  require(inside.size() == m1 && outside.size() + at_infinity == m1, ErrorKind::Infeasible,
          "edigarian_complete: roots do not split evenly across the unit circle");
  std::vector<bool> used(outside.size(), false);
  for (std::size_t i = at_zero; i < inside.size(); ++i) {
    const cplx mirror = 1.0 / std::conj(inside[i]);
    std::size_t best = outside.size();
    double best_d = 0.0;
    for (std::size_t k = 0; k < outside.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(outside[k] - mirror) / std::max(1.0, std::abs(mirror));
      if (best == outside.size() || d < best_d) best = k, best_d = d;
    }
    require(best < outside.size() && best_d <= kPairTol, ErrorKind::Infeasible,
            "edigarian_complete: roots fail to pair as (beta, 1/conj(beta))");
    used[best] = true;
  }
  std::sort(inside.begin(), inside.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() < y.real() : x.imag() < y.imag();
  });

  EdigarianCompletion out;
  out.params.n = static_cast<int>(n);
  out.params.m = static_cast<int>(m1 + 1);
  out.params.p = p;
  out.params.alpha = alpha;
  out.params.r = r;
  out.params.alpha0 = inside;

  // Q / rhs is a positive constant; read it off the largest coefficient.
  ComplexPolynomial rhs = edigarian_rhs(out.params);
  std::size_t kmax = 0;
  for (std::size_t k = 0; k < rhs.coefficients().size(); ++k)
    if (std::abs(rhs.coefficients()[k]) > std::abs(rhs.coefficients()[kmax])) kmax = k;
  out.scale = (q.coefficient(static_cast<int>(kmax)) / rhs.coefficients()[kmax]).real();
  require(out.scale > 0.0, ErrorKind::Infeasible, "edigarian_complete: nonpositive normalization");
  out.params.a = a;
  for (std::size_t j = 0; j < n; ++j) out.params.a[j] *= std::pow(out.scale, -1.0 / (2.0 * p[j]));
  out.residual = edigarian_check(out.params);
  require(out.residual <= kResidualTol, ErrorKind::Numeric, "edigarian_complete: coefficient identity residual too large");
  return out;
}

}  // namespace mextremal
