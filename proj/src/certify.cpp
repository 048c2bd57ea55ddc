#include "mextremal/certify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mextremal/error.hpp"
#include "mextremal/kernels.hpp"
#include "mextremal/policy.hpp"

namespace mextremal {

namespace {

constexpr double kCertifiedResidual = 1e-9;
constexpr double kCertifiedSup = 1.0 + 1e-9;
constexpr double kRefutedResidual = 1e-4;
constexpr double kRefutedSup = 1.0 + 1e-6;

}  // namespace

MultiPolynomial::MultiPolynomial(int n, std::vector<Monomial> terms) : n_(n), terms_(std::move(terms)) {
  require(n >= 1, ErrorKind::Domain, "multivariate polynomial needs at least one variable");
  for (const Monomial& t : terms_) {
    require(static_cast<int>(t.exponents.size()) == n, ErrorKind::Domain, "monomial exponent length mismatch");
    for (const int e : t.exponents) require(e >= 0, ErrorKind::Domain, "monomial exponents must be nonnegative");
  }
}

MultiPolynomial MultiPolynomial::linear(const cvec& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  std::vector<Monomial> terms;
  for (int j = 0; j < n; ++j) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(j)] = 1;
    terms.push_back({coeffs[static_cast<std::size_t>(j)], std::move(e)});
  }
  return MultiPolynomial(n, std::move(terms));
}

int MultiPolynomial::degree() const {
  int d = 0;
  for (const Monomial& t : terms_) d = std::max(d, std::accumulate(t.exponents.begin(), t.exponents.end(), 0));
  return d;
}

cplx MultiPolynomial::operator()(std::span<const cplx> z) const {
  require(static_cast<int>(z.size()) == n_, ErrorKind::Domain, "polynomial evaluated at a point of wrong dimension");
  cplx sum = 0.0;
  for (const Monomial& t : terms_) {
    cplx v = t.coeff;
    for (std::size_t j = 0; j < z.size(); ++j)
      if (t.exponents[j] != 0) v *= std::pow(z[j], t.exponents[j]);
    sum += v;
  }
  return sum;
}

json MultiPolynomial::to_json() const {
  json terms = json::array();
  for (const Monomial& t : terms_) terms.push_back({{"coeff", mextremal::to_json(t.coeff)}, {"exponents", t.exponents}});
  return {{"n", n_}, {"terms", terms}};
}

MultiPolynomial MultiPolynomial::from_json(const json& j) {
  std::vector<Monomial> terms;
  for (const json& t : require_key(j, "terms"))
    terms.push_back({complex_from_json(require_key(t, "coeff")), require_key(t, "exponents").get<std::vector<int>>()});
  return MultiPolynomial(require_key(j, "n").get<int>(), std::move(terms));
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "Certified";
    case Verdict::Refuted:
      return "Refuted";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

json Certificate::to_json() const {
  return {{"name", name},
          {"map", map.to_json()},
          {"domain", mextremal::to_json(domain)},
          {"left_inverse", left_inverse.to_json()},
          {"blaschke", mextremal::to_json(blaschke)},
          {"m", m},
          {"residual_composition", residual_composition},
          {"boundary_sup_estimate", boundary_sup_estimate},
          {"circle_samples", circle_samples},
          {"boundary_samples", boundary_samples},
          {"seed", seed},
          {"sampled_bound", sampled_bound},
          {"verdict", to_string(verdict)}};
}

Certificate Certificate::from_json(const json& j) {
  Certificate c;
  c.name = j.value("name", std::string());
  c.map = MapSpec::from_json(require_key(j, "map"));
  c.domain = domain_from_json(require_key(j, "domain"));
  c.left_inverse = MultiPolynomial::from_json(require_key(j, "left_inverse"));
  c.blaschke = blaschke_from_json(require_key(j, "blaschke"));
  c.m = require_key(j, "m").get<int>();
  c.residual_composition = require_key(j, "residual_composition").get<double>();
  c.boundary_sup_estimate = require_key(j, "boundary_sup_estimate").get<double>();
  c.circle_samples = require_key(j, "circle_samples").get<int>();
  c.boundary_samples = require_key(j, "boundary_samples").get<long>();
  c.seed = require_key(j, "seed").get<std::uint64_t>();
  c.sampled_bound = j.value("sampled_bound", true);
  const std::string v = require_key(j, "verdict").get<std::string>();
  if (v == "Certified")
    c.verdict = Verdict::Certified;
  else if (v == "Refuted")
    c.verdict = Verdict::Refuted;
  else if (v == "Inconclusive")
    c.verdict = Verdict::Inconclusive;
  else
    fail(ErrorKind::Schema, "unknown verdict '" + v + "'");
  return c;
}

Certificate verify_left_inverse(const MapSpec& f, const MultiPolynomial& F, const BlaschkeProduct& B,
                                const DomainModel& dom, int m, const CertifyOptions& options) {
  require(f.dimension() == dom.dimension() && F.dimension() == dom.dimension(), ErrorKind::Domain,
          "verify_left_inverse: dimension mismatch between map, left inverse and domain");
  const NumericPolicy& policy = numeric_policy();
  Certificate c;
  c.map = f;
  c.domain = dom;
  c.left_inverse = F;
  c.blaschke = B;
  c.m = m;
  c.seed = options.seed;
  c.circle_samples = policy.circle_grid;
  c.boundary_samples = options.samples >= 0 ? options.samples : policy.boundary_samples;

  for (const cplx lam : kernels::circle_grid(c.circle_samples))
    c.residual_composition = std::max(c.residual_composition, std::abs(F(f(lam)) - B(lam)));

  const auto points = options.parallel ? kernels::sample_boundary_omp(dom, c.boundary_samples, c.seed)
                                       : kernels::sample_boundary_serial(dom, c.boundary_samples, c.seed);
  const kernels::ScalarField field = [&F](std::span<const cplx> z) { return F(z); };
  c.boundary_sup_estimate = options.parallel ? kernels::sup_abs_omp(field, points) : kernels::sup_abs_serial(field, points);

  const bool degree_ok = B.degree() >= 1 && B.degree() <= m - 1;
  if (c.residual_composition <= kCertifiedResidual && c.boundary_sup_estimate <= kCertifiedSup && degree_ok)
    c.verdict = Verdict::Certified;
  else if (c.residual_composition > kRefutedResidual || c.boundary_sup_estimate > kRefutedSup)
    c.verdict = Verdict::Refuted;
  else
    c.verdict = Verdict::Inconclusive;
  return c;
}

bool replay(const Certificate& cert) {
  NumericPolicy policy = numeric_policy();
  policy.circle_grid = cert.circle_samples;
  ScopedNumericPolicy scope(policy);
  const Certificate again = verify_left_inverse(cert.map, cert.left_inverse, cert.blaschke, cert.domain, cert.m,
                                                {cert.boundary_samples, cert.seed, true});
  return again.verdict == cert.verdict && again.residual_composition == cert.residual_composition &&
         again.boundary_sup_estimate == cert.boundary_sup_estimate;
}

MultiPolynomial ball3_left_inverse(double a, int n) {
  require(a >= 0.0 && a < 1.0, ErrorKind::Domain, "ball3_left_inverse: a must lie in [0, 1)");
  require(n >= 2, ErrorKind::Domain, "ball3_left_inverse: dimension must be at least 2");
  const double den = 2.0 - a * a;
  std::vector<int> e1(static_cast<std::size_t>(n), 0), e2(static_cast<std::size_t>(n), 0);
  e1[0] = 2;
  e2[1] = 1;
  return MultiPolynomial(n, {{1.0 / den, e1}, {2.0 * std::sqrt(1.0 - a * a) / den, e2}});
}

bool rational_approximation(double x, int max_den, double tol, long& num, long& den) {
  // Convergents h_k / k_k of the continued fraction of x.
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rest = x;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(rest);
    const long ai = static_cast<long>(fl);
    const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) <= tol) {
      num = h1;
      den = k1;
      return true;
    }
    const double frac = rest - fl;
    if (frac <= 0.0) break;
    rest = 1.0 / frac;
  }
  return false;
}

MonomialInverse monomial_left_inverse(const std::vector<double>& p, const cvec& a) {
  const std::size_t n = p.size();
  require(n >= 1 && a.size() == n, ErrorKind::Domain, "monomial_left_inverse: dimension mismatch");
  const DomainModel dom = ellipsoid(p);
  require(std::abs(membership_defect(dom, a)) <= 1e-10, ErrorKind::Domain,
          "monomial_left_inverse: a must lie on the boundary of E(p)");
  MonomialInverse out;
  for (std::size_t j = 0; j < n; ++j) {
    require(a[j] != cplx(0.0), ErrorKind::Domain, "monomial_left_inverse: coordinates of a must be nonzero");
    out.v.push_back(p[j] * std::pow(std::abs(a[j]), 2.0 * p[j]));
  }
  std::vector<long> nums(n), dens(n);
  for (std::size_t j = 0; j < n; ++j)
    if (!rational_approximation(out.v[j] / out.v[0], 64, 1e-9, nums[j], dens[j])) return out;
  long l = 1;
  for (const long d : dens) l = std::lcm(l, d);
  std::vector<long> ms(n);
  long g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    ms[j] = nums[j] * (l / dens[j]);
    g = std::gcd(g, ms[j]);
  }
  for (std::size_t j = 0; j < n; ++j) out.m.push_back(static_cast<int>(ms[j] / g));
  out.c = out.v[0] / out.m[0];
  for (std::size_t j = 0; j < n; ++j)
    if (std::abs(out.v[j] - out.c * out.m[j]) > 1e-9 * std::max(1.0, out.v[j])) return out;
  cplx coeff = 1.0;
  for (std::size_t j = 0; j < n; ++j) coeff /= std::pow(a[j], out.m[j]);
  out.F = MultiPolynomial(static_cast<int>(n), {{coeff, out.m}});
  out.commensurable = true;
  return out;
}

MultiPolynomial bl1_left_inverse(const std::vector<double>& p, const std::vector<double>& a,
                                 const std::vector<int>& m_js) {
  const std::size_t n = p.size();
  require(n >= 1 && a.size() == n && m_js.size() == n, ErrorKind::Domain, "bl1_left_inverse: dimension mismatch");
  int m = 1;
  for (const int mj : m_js) {
    require(mj >= 1, ErrorKind::Domain, "bl1_left_inverse: multiplicities must be positive");
    m = std::lcm(m, mj);
  }
  double den = 0.0;
  std::vector<double> b(n);
  for (std::size_t j = 0; j < n; ++j) {
    require(2.0 * p[j] * m_js[j] >= static_cast<double>(m), ErrorKind::Domain,
            "bl1_left_inverse: constraint 2 p_j m_j >= m violated");
    require(a[j] > 0.0 && a[j] <= 1.0, ErrorKind::Domain, "bl1_left_inverse: a_j must lie in (0, 1]");
    b[j] = std::pow(a[j], static_cast<double>(m) / m_js[j]);
    den += p[j] * m_js[j] * std::pow(b[j], 2.0 * p[j] * m_js[j] / m);
  }
  std::vector<Monomial> terms;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> e(n, 0);
    e[j] = m / m_js[j];
    terms.push_back({p[j] * m_js[j] * std::pow(b[j], 2.0 * p[j] * m_js[j] / m - 1.0) / den, std::move(e)});
  }
  return MultiPolynomial(static_cast<int>(n), std::move(terms));
}

Prop24Result prop24_certificate(int m, double b, const CertifyOptions& options) {
  require(m >= 3, ErrorKind::Domain, "prop24_certificate: m must be at least 3");
  require(b > 0.0 && b <= 1.0 / (m - 1), ErrorKind::Domain, "prop24_certificate: b must lie in (0, 1/(m-1)]");
  Prop24Result out;
  out.b = b;
  out.a = std::sqrt(1.0 - b * b);
  const double a = out.a;
  const double s = a * a + m * b * b;
  out.c = 1.0 / (s * std::pow(a, m - 2));
  out.d = m * b / s;
  out.identity_residual = std::abs(out.c * std::pow(a, m) + out.d * b - 1.0);
  require(out.identity_residual <= 1e-12, ErrorKind::Numeric, "prop24_certificate: c a^m + d b != 1");
  require(out.c <= 1.0 + 1e-12 && out.d <= 1.0 + 1e-12, ErrorKind::Numeric, "prop24_certificate: c or d exceeds 1");
  const MapSpec f = MapSpec::tuple({monomial_map(a, 1), monomial_map(b, m)});
  const MultiPolynomial F(2, {{out.c, {m, 0}}, {out.d, {0, 1}}});
  out.certificate = verify_left_inverse(f, F, BlaschkeProduct::monomial(m), ball(2), m + 1, options);
  out.certificate.name = "prop24";
  return out;
}

double slack_prop1(double a) {
  require(a > 0.0 && a < 1.0, ErrorKind::Domain, "slack_prop1: a must lie in (0, 1)");
  return a * a - a;
}

double slack_propab(double a) {
  require(a > 0.0 && a < 0.5, ErrorKind::Domain, "slack_propab: a must lie in (0, 1/2)");
  return a * a / ((1.0 - a) * (1.0 - a)) + (1.0 - 4.0 * a * a) / (1.0 - a * a) - 1.0;
}

double slack_prop40(double alpha_mod, double beta_mod, double c) {
  require(alpha_mod >= 0.0 && alpha_mod <= 1.0 && beta_mod >= 0.0 && beta_mod <= 1.0, ErrorKind::Domain,
          "slack_prop40: |alpha|, |beta| must lie in [0, 1]");
  require(c > 0.0 && c < 1.0, ErrorKind::Domain, "slack_prop40: c must lie in (0, 1)");
  return beta_mod * (1.0 - c * c) + alpha_mod * alpha_mod * c * c - 1.0;
}

bool product_rule(const std::vector<bool>& verdicts) {
  require(!verdicts.empty(), ErrorKind::Domain, "product_rule: no factors");
  return std::any_of(verdicts.begin(), verdicts.end(), [](bool v) { return v; });
}

bool polydisc_test(const std::vector<PickData>& components) {
  require(!components.empty(), ErrorKind::Domain, "polydisc_test: no components");
  return std::any_of(components.begin(), components.end(),
                     [](const PickData& d) { return disc_weak_extremality(d); });
}

bool polydisc_test_by_degree(const std::vector<PickData>& components) {
  require(!components.empty(), ErrorKind::Domain, "polydisc_test: no components");
  return std::any_of(components.begin(), components.end(), [](const PickData& d) {
    const DataDegree r = blaschke_degree_of_data(d.nodes, d.values);
    return r.blaschke_extremal && r.degree >= 1 && r.degree <= static_cast<int>(d.nodes.size()) - 1;
  });
}

MapSpec compose_with_blaschke(const MapSpec& f, const BlaschkeProduct& B) {
  require(B.degree() >= 1, ErrorKind::Domain, "compose_with_blaschke: B must be non-constant");
  return MapSpec::compose(f, MapSpec::blaschke(B));
}

TaggedMap compose_with_blaschke(const TaggedMap& f, const BlaschkeProduct& B) {
  TaggedMap out = f;
  out.map = compose_with_blaschke(f.map, B);
  out.m = f.m * B.degree();
  out.weak_extremal = f.extremal && f.domain.is_convex();
  out.extremal = false;
  out.geodesic.reset();
  out.note = out.weak_extremal ? "weak (m deg B)-extremal: f is an m-extremal of a convex domain"
                               : "no claim: f is not tagged m-extremal or the domain is not convex";
  if (B.degree() == 1) {
    out.extremal = f.extremal;
    out.geodesic = f.geodesic;
  }
  return out;
}

DerivativeCount derivative_count_check(const MapSpec& f, const cvec& nodes, bool tagged_extremal_with_hopf) {
  constexpr double h = 1e-6;
  DerivativeCount out;
  auto central = [&](cplx lam, double step) {
    cvec fp = f(lam + step), fm = f(lam - step);
    for (std::size_t j = 0; j < fp.size(); ++j) fp[j] = (fp[j] - fm[j]) / (2.0 * step);
    return fp;
  };
  for (const cplx lam : nodes) {
    const cvec d1 = central(lam, h), d2 = central(lam, h / 2.0);
    double norm2 = 0.0;
    for (std::size_t j = 0; j < d1.size(); ++j) norm2 += std::norm((4.0 * d2[j] - d1[j]) / 3.0);
    const double norm = std::sqrt(norm2);
    out.derivative_norms.push_back(norm);
    if (norm > 1e-8) ++out.count;
  }
  out.warning = tagged_extremal_with_hopf && out.count < 2;
  return out;
}

}  // namespace mextremal
