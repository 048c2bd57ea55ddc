#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mextremal/cplane.hpp"
#include "mextremal/domains.hpp"
#include "mextremal/io.hpp"
#include "mextremal/mapspec.hpp"
#include "mextremal/maps.hpp"
#include "mextremal/pick.hpp"

namespace mextremal {

struct Monomial {
  cplx coeff = 0.0;
  std::vector<int> exponents;
};

// Sparse polynomial in n complex variables.
class MultiPolynomial {
 public:
  MultiPolynomial() = default;
  MultiPolynomial(int n, std::vector<Monomial> terms);

  // sum_j c_j z_j
  static MultiPolynomial linear(const cvec& coeffs);

  int dimension() const { return n_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  int degree() const;

  cplx operator()(std::span<const cplx> z) const;

  json to_json() const;
  static MultiPolynomial from_json(const json& j);

 private:
  int n_ = 0;
  std::vector<Monomial> terms_;
};

enum class Verdict { Certified, Refuted, Inconclusive };
const char* to_string(Verdict v);

struct CertifyOptions {
  long samples = -1;        // boundary samples; -1 means the numeric policy
  std::uint64_t seed = 0;
  bool parallel = true;
};

struct Certificate {
  MapSpec map;
  DomainModel domain;
  MultiPolynomial left_inverse;
  BlaschkeProduct blaschke;
  int m = 0;
  double residual_composition = 0.0;
  double boundary_sup_estimate = 0.0;
  int circle_samples = 0;
  long boundary_samples = 0;
  std::uint64_t seed = 0;
  // The sup of |F| comes from sampling; it is evidence, not a proof.
  bool sampled_bound = true;
  Verdict verdict = Verdict::Inconclusive;
  std::string name;

  json to_json() const;
  static Certificate from_json(const json& j);
};

// Checks that F o f = B on the circle, |F| <= 1 on sampled boundary points of
// dom and 1 <= deg B <= m - 1.
Certificate verify_left_inverse(const MapSpec& f, const MultiPolynomial& F, const BlaschkeProduct& B,
                                const DomainModel& dom, int m, const CertifyOptions& options = {});

// Recomputes a certificate from its serialized inputs; true when residuals and
// verdict reproduce exactly.
bool replay(const Certificate& cert);

// z1^2 / (2 - a^2) + 2 sqrt(1 - a^2) z2 / (2 - a^2), n >= 2 variables.
MultiPolynomial ball3_left_inverse(double a, int n = 2);

struct MonomialInverse {
  bool commensurable = false;
  std::vector<double> v;   // p_j |a_j|^{2 p_j}
  std::vector<int> m;      // v = c m
  double c = 0.0;
  MultiPolynomial F;       // prod (z_j / a_j)^{m_j}
};

MonomialInverse monomial_left_inverse(const std::vector<double>& p, const cvec& a);

// Best rational approximation num/den with den <= max_den (continued
// fractions); returns false if none is within tol.
bool rational_approximation(double x, int max_den, double tol, long& num, long& den);

MultiPolynomial bl1_left_inverse(const std::vector<double>& p, const std::vector<double>& a,
                                 const std::vector<int>& m_js);

struct Prop24Result {
  double a = 0.0, b = 0.0, c = 0.0, d = 0.0;
  double identity_residual = 0.0;  // |c a^m + d b - 1|
  Certificate certificate;         // order m + 1 in Ball(2)
};

Prop24Result prop24_certificate(int m, double b, const CertifyOptions& options = {});

double slack_prop1(double a);
double slack_propab(double a);
double slack_prop40(double alpha_mod, double beta_mod, double c);

bool product_rule(const std::vector<bool>& verdicts);
// Each entry holds one coordinate's values at the same m nodes.
bool polydisc_test(const std::vector<PickData>& components);
// Same decision via the Schur recursion on each coordinate.
bool polydisc_test_by_degree(const std::vector<PickData>& components);

MapSpec compose_with_blaschke(const MapSpec& f, const BlaschkeProduct& B);
// Carries the claim: weak (m deg B)-extremal when f is an m-extremal of a
// convex domain.
TaggedMap compose_with_blaschke(const TaggedMap& f, const BlaschkeProduct& B);

struct ProfileRow {
  cplx zeta;
  double r = 0.0;
  double defect = 0.0;  // 1 - h(f(r zeta))
};

struct ProfileReport {
  std::vector<ProfileRow> rows;
  std::vector<double> radii;
  double hopf_constant = 0.0;   // min over samples of defect / (1 - r)
  double max_ray_defect = 0.0;  // max over rays of the defect at the largest radius
  bool almost_proper = false;
  double kappa = 100.0;

  std::string csv() const;
};

// Radii 1 - 10^{-1 - 2j/(n_radii - 1)} run from 0.9 to 0.999. The map is
// flagged almost proper when every ray has defect <= kappa (1 - r) at the
// largest radius.
ProfileReport properness_profile(const MapSpec& f, const DomainModel& dom, int n_rays, int n_radii,
                                 double kappa = 100.0);

struct DerivativeCount {
  int count = 0;
  std::vector<double> derivative_norms;
  bool warning = false;
};

DerivativeCount derivative_count_check(const MapSpec& f, const cvec& nodes, bool tagged_extremal_with_hopf = false);

}  // namespace mextremal
