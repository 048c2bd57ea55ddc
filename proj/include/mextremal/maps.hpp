#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mextremal/cplane.hpp"
#include "mextremal/domains.hpp"
#include "mextremal/mapspec.hpp"

namespace mextremal {

// f_j(lam) = a_j prod_k m_{alpha_kj}(lam)^{r_kj}
//                   ((1 - conj(alpha_kj) lam) / (1 - conj(alpha_k0) lam))^{1/p_j}
// subject to
//   sum_j |a_j|^{2 p_j} prod_k (lam - alpha_kj)(1 - conj(alpha_kj) lam)
//     = prod_k (lam - alpha_k0)(1 - conj(alpha_k0) lam).
struct EdigarianParams {
  int n = 1;
  int m = 2;
  std::vector<double> p;               // n
  cvec a;                              // n
  std::vector<cvec> alpha;             // (m-1) x n, closed disc
  cvec alpha0;                         // m-1, open disc
  std::vector<std::vector<int>> r;     // (m-1) x n, entries 0 or 1
};

void validate(const EdigarianParams& params);

struct EdigarianValue {
  cvec value;
  // Set when lam hit a boundary zero of (1 - conj(alpha_kj) lam); the value
  // is then the radial limit.
  bool boundary_singularity = false;
};

cvec edigarian_eval(const EdigarianParams& params, cplx lam);
EdigarianValue edigarian_eval_checked(const EdigarianParams& params, cplx lam);
MapSpec edigarian_map(const EdigarianParams& params);

// Both sides of the coefficient identity as degree 2(m-1) polynomials.
ComplexPolynomial edigarian_lhs(const EdigarianParams& params);
ComplexPolynomial edigarian_rhs(const EdigarianParams& params);
double edigarian_check(const EdigarianParams& params);

struct EdigarianCompletion {
  EdigarianParams params;  // amplitudes normalized, alpha0 filled in
  double scale = 1.0;      // Q = scale * prod (lam - alpha_k0)(1 - conj(alpha_k0) lam) before normalization
  double residual = 0.0;
};

// Finds alpha0 from the roots of the left-hand side Q. The roots of Q come in
// pairs (beta, 1/conj(beta)); Q is a positive multiple of the right-hand
// side, and the amplitudes are rescaled so the multiple is 1.
EdigarianCompletion edigarian_complete(const cvec& a, const std::vector<double>& p, const std::vector<cvec>& alpha,
                                       const std::vector<std::vector<int>>& r);

enum class FactorClass { Interior, Boundary };
const char* to_string(FactorClass c);

struct FactorResult {
  MapSpec phi;
  FactorClass classification = FactorClass::Interior;
  double gauge_at_zero = 0.0;
};

// phi_j = f_j / m_alpha^{k_j}.
FactorResult lemma10_factor(const MapSpec& f, cplx alpha, const std::vector<int>& k, const DomainModel& dom);

// psi_j = m_mu^{l k_j} f_j, for weights k_j <= 1.
MapSpec lemma10_multiply(const MapSpec& f, cplx mu, int l, const std::vector<int>& k);

struct BallAutomorphism {
  Eigen::MatrixXcd unitary;
  cvec w;
};

BallAutomorphism ball_automorphism(cvec w, std::optional<Eigen::MatrixXcd> unitary = std::nullopt);
// unitary * chi_w(z); chi_w(w) = 0, chi_w(0) = -w.
cvec chi_eval(const BallAutomorphism& aut, const cvec& z);

// lam -> (a lam, sqrt(1 - a^2) lam m_alpha(lam), 0, ..., 0) in C^n.
MapSpec ball3_normal_form(double a, cplx alpha, int n = 2);

struct Thm32Forward {
  double alpha = 0.0;   // alpha^2 + beta^2 = 1
  double beta = 0.0;
  cplx gamma = 0.0;
  double a = 0.0;       // sqrt(1 - b^2)
};

// Normal-form parameters of the 3-geodesic (a m_c, b m_c^2).
Thm32Forward thm32_forward(double b, cplx c);

struct Thm32Inverse {
  double b = 0.0;
  double c = 0.0;
};

// Real (b, c) with thm32_forward(b, c) having beta^2 = p and gamma = q.
Thm32Inverse thm32_inverse(double p, double q);

// A map with the claims the literature makes about it.
struct TaggedMap {
  MapSpec map;
  DomainModel domain;
  int m = 0;
  bool extremal = false;        // m-extremal
  bool weak_extremal = false;   // weak m-extremal
  std::optional<bool> geodesic; // m-geodesic, when known
  std::string note;
};

TaggedMap family_prop1(int m, double a);
// (a lam^{m-1}, (1-a) lam^{m-1}), with left inverse z1 + z2.
TaggedMap family_prop1_geodesic(int m, double a);
TaggedMap family_propab(int m, double a);
TaggedMap family_prop40(int m, double a);
TaggedMap family_propmm(int m, double a);
// B a for a non-convex E(p), a on its boundary and B with distinct zeros.
TaggedMap family_nc(const std::vector<double>& p, const cvec& a, const BlaschkeProduct& b);

// Claim metadata for psi_(l) = m_mu^{l k} f.
TaggedMap lemma10_multiply(const TaggedMap& f, cplx mu, int l);

}  // namespace mextremal
