#include "mextremal/domains.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <boost/math/tools/roots.hpp>

#include "mextremal/error.hpp"
#include "mextremal/policy.hpp"

namespace mextremal {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<int> ones(int n) { return std::vector<int>(static_cast<std::size_t>(n), 1); }

// Defect of the scaled point (z_j / t^{k_j}).
// Defect of the point with coordinate moduli r_j / t^{k_j}.
double scaled_defect(const DomainModel& dom, std::span<const double> r, double t, std::vector<double>& buf) {
  for (std::size_t j = 0; j < r.size(); ++j) buf[j] = r[j] / std::pow(t, dom.k[j]);
  return std::visit(overloaded{
                        [&](const UnitDisc&) { return buf[0] * buf[0] - 1.0; },
                        [&](const Polydisc&) { return *std::max_element(buf.begin(), buf.end()) - 1.0; },
                        [&](const Ball&) {
                          double s = 0.0;
                          for (const double x : buf) s += x * x;
                          return s - 1.0;
                        },
                        [&](const Ellipsoid& e) {
                          double s = 0.0;
                          for (std::size_t j = 0; j < buf.size(); ++j) s += std::pow(buf[j], 2.0 * e.p[j]);
                          return s - 1.0;
                        },
                        [&](const CustomGauge& g) {
                          double s = 0.0;
                          for (const GaugeTerm& term : g.terms) {
                            double inner = 0.0;
                            for (const int c : term.coords) inner += buf[static_cast<std::size_t>(c)];
                            s += std::pow(inner, term.exponent);
                          }
                          return s - 1.0;
                        },
                    },
                    dom.shape);
}

}  // namespace

int DomainModel::dimension() const {
  return std::visit(overloaded{
                        [](const UnitDisc&) { return 1; },
                        [](const Polydisc& d) { return d.n; },
                        [](const Ball& d) { return d.n; },
                        [](const Ellipsoid& d) { return static_cast<int>(d.p.size()); },
                        [](const CustomGauge& d) { return d.n; },
                    },
                    shape);
}

std::string DomainModel::type_name() const {
  return std::visit(overloaded{
                        [](const UnitDisc&) { return std::string("disc"); },
                        [](const Polydisc&) { return std::string("polydisc"); },
                        [](const Ball&) { return std::string("ball"); },
                        [](const Ellipsoid&) { return std::string("ellipsoid"); },
                        [](const CustomGauge& d) { return d.name; },
                    },
                    shape);
}

bool DomainModel::is_convex() const {
  return std::visit(overloaded{
                        [](const UnitDisc&) { return true; },
                        [](const Polydisc&) { return true; },
                        [](const Ball&) { return true; },
                        [](const Ellipsoid& d) { return convexity_check(d.p); },
                        [](const CustomGauge& d) {
                          return std::all_of(d.terms.begin(), d.terms.end(),
                                             [](const GaugeTerm& t) { return t.exponent >= 1.0; });
                        },
                    },
                    shape);
}

DomainModel unit_disc() { return {UnitDisc{}, {1}}; }
DomainModel polydisc(int n) { return {Polydisc{n}, ones(n)}; }
DomainModel ball(int n) { return {Ball{n}, ones(n)}; }

DomainModel ellipsoid(std::vector<double> p, std::vector<int> k) {
  const int n = static_cast<int>(p.size());
  for (const double pj : p) require(pj > 0.0, ErrorKind::Domain, "ellipsoid exponents must be positive");
  DomainModel dom{Ellipsoid{std::move(p)}, k.empty() ? ones(n) : std::move(k)};
  validate(dom);
  return dom;
}

DomainModel propab_domain() {
  return {CustomGauge{"propab", 3, {{{0, 1}, 2.0}, {{2}, 1.0}}}, ones(3)};
}

DomainModel prop40_domain() {
  return {CustomGauge{"prop40", 3, {{{0}, 2.0}, {{1}, 2.0}, {{2}, 1.0}}}, ones(3)};
}

void validate(const DomainModel& dom) {
  const int n = dom.dimension();
  require(n >= 1, ErrorKind::Domain, "domain dimension must be positive");
  require(static_cast<int>(dom.k.size()) == n, ErrorKind::Domain, "weight vector length must match the dimension");
  require(std::all_of(dom.k.begin(), dom.k.end(), [](int kj) { return kj >= 0; }), ErrorKind::Domain,
          "weights must be nonnegative");
  require(std::any_of(dom.k.begin(), dom.k.end(), [](int kj) { return kj > 0; }), ErrorKind::Domain,
          "weights must not all vanish");
  if (const auto* g = std::get_if<CustomGauge>(&dom.shape)) {
    for (const GaugeTerm& t : g->terms) {
      require(t.exponent > 0.0, ErrorKind::Domain, "gauge exponents must be positive");
      for (const int c : t.coords) require(c >= 0 && c < n, ErrorKind::Domain, "gauge coordinate out of range");
    }
  }
}

double membership_defect(const DomainModel& dom, std::span<const cplx> z) {
  require(static_cast<int>(z.size()) == dom.dimension(), ErrorKind::Domain, "point dimension does not match domain");
  return std::visit(overloaded{
                        [&](const UnitDisc&) { return std::norm(z[0]) - 1.0; },
                        [&](const Polydisc&) {
                          double m = 0.0;
                          for (const cplx zj : z) m = std::max(m, std::abs(zj));
                          return m - 1.0;
                        },
                        [&](const Ball&) {
                          double s = 0.0;
                          for (const cplx zj : z) s += std::norm(zj);
                          return s - 1.0;
                        },
                        [&](const Ellipsoid& e) {
                          double s = 0.0;
                          for (std::size_t j = 0; j < z.size(); ++j) s += std::pow(std::abs(z[j]), 2.0 * e.p[j]);
                          return s - 1.0;
                        },
                        [&](const CustomGauge& g) {
                          double s = 0.0;
                          for (const GaugeTerm& t : g.terms) {
                            double inner = 0.0;
                            for (const int c : t.coords) inner += std::abs(z[static_cast<std::size_t>(c)]);
                            s += std::pow(inner, t.exponent);
                          }
                          return s - 1.0;
                        },
                    },
                    dom.shape);
}

Region classify_point(const DomainModel& dom, std::span<const cplx> z) {
  const double d = membership_defect(dom, z);
  if (std::abs(d) <= numeric_policy().boundary_band) return Region::Boundary;
  return d < 0.0 ? Region::Interior : Region::Exterior;
}

double minkowski_value(const DomainModel& dom, std::span<const cplx> z) {
  require(static_cast<int>(z.size()) == dom.dimension(), ErrorKind::Domain, "point dimension does not match domain");
  require(std::all_of(dom.k.begin(), dom.k.end(), [](int kj) { return kj >= 1; }), ErrorKind::Domain,
          "minkowski_value requires all weights k_j >= 1");
  if (std::all_of(z.begin(), z.end(), [](cplx zj) { return zj == cplx(0.0); })) return 0.0;

  const int max_steps = numeric_policy().bisection_max_steps;
  constexpr double kTiny = 1e-300;
  std::vector<double> r(z.size()), buf(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) r[j] = std::abs(z[j]);
  auto defect = [&](double t) { return scaled_defect(dom, r, t, buf); };

  double lo = 1.0, hi = 1.0;
  if (defect(1.0) < 0.0) {
    while (defect(lo) < 0.0) {
      hi = lo;
      lo *= 0.5;
      if (lo < kTiny) return 0.0;
    }
  } else {
    while (defect(hi) >= 0.0) {
      lo = hi;
      hi *= 2.0;
      require(std::isfinite(hi), ErrorKind::Numeric, "minkowski_value: gauge bracket diverged");
    }
  }
  // defect(lo) >= 0 > defect(hi); the defect is decreasing in t. TOMS 748 keeps
  // the bracket and needs far fewer evaluations than plain bisection.
  const double f_lo = defect(lo);
  if (f_lo == 0.0) return lo;
  auto iters = static_cast<boost::uintmax_t>(max_steps);
  const auto root = boost::math::tools::toms748_solve(defect, lo, hi, f_lo, defect(hi),
                                                      boost::math::tools::eps_tolerance<double>(51), iters);
  require(iters < static_cast<boost::uintmax_t>(max_steps), ErrorKind::Numeric,
          "minkowski_value: root bracketing did not converge");
  return 0.5 * (root.first + root.second);
}

bool convexity_check(std::span<const double> p) {
  if (p.size() <= 1) return true;
  return std::all_of(p.begin(), p.end(), [](double pj) { return pj >= 0.5; });
}

SnDecision sn_membership(std::span<const double> p) {
  require(!p.empty(), ErrorKind::Domain, "sn_membership: empty exponent vector");
  const auto [mn_it, mx_it] = std::minmax_element(p.begin(), p.end());
  const double mn = *mn_it, mx = *mx_it;
  SnDecision out;
  if (mn < 0.5) {
    out.explanation = "min < 1/2";
    return out;
  }
  std::set<double> big{1.0};
  if (mn >= 1.0) {
    big.insert(p.begin(), p.end());
    out.member = true;
    out.witness.assign(big.begin(), big.end());
    out.witness.push_back(mx);
    out.explanation = "all exponents >= 1";
    return out;
  }
  const double v = mn;
  for (const double pj : p) {
    if (pj < 1.0 && pj != v) {
      out.explanation = "exponents below 1 are not all equal";
      return out;
    }
    if (pj >= 1.0) big.insert(pj);
  }
  if (2.0 * v < mx) {
    out.explanation = "2·min < max";
    return out;
  }
  out.member = true;
  out.witness.assign(big.begin(), big.end());
  out.witness.push_back(2.0 * v);
  out.explanation = "exponents below 1 share the value v with 2v >= max";
  return out;
}

}  // namespace mextremal
