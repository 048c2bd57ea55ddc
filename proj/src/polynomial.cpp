#include "mextremal/polynomial.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "mextremal/error.hpp"

namespace mextremal {

ComplexPolynomial::ComplexPolynomial(std::vector<cplx> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

ComplexPolynomial ComplexPolynomial::constant(cplx c) { return ComplexPolynomial({c}); }

ComplexPolynomial ComplexPolynomial::monomial(int degree, cplx coefficient) {
  require(degree >= 0, ErrorKind::Domain, "monomial degree must be nonnegative");
  std::vector<cplx> c(static_cast<std::size_t>(degree) + 1, 0.0);
  c.back() = coefficient;
  return ComplexPolynomial(std::move(c));
}

ComplexPolynomial ComplexPolynomial::from_roots(std::span<const cplx> roots, cplx leading) {
  std::vector<cplx> c{leading};
  for (const cplx r : roots) {
    std::vector<cplx> next(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= r * c[k];
    }
    c = std::move(next);
  }
  return ComplexPolynomial(std::move(c));
}

void ComplexPolynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == cplx(0.0)) coefficients_.pop_back();
}

cplx ComplexPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0.0;
  return coefficients_[static_cast<std::size_t>(k)];
}

cplx ComplexPolynomial::operator()(cplx x) const {
  cplx acc = 0.0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPolynomial ComplexPolynomial::derivative() const {
  if (coefficients_.size() <= 1) return {};
  std::vector<cplx> d(coefficients_.size() - 1);
  for (std::size_t k = 1; k < coefficients_.size(); ++k) d[k - 1] = static_cast<double>(k) * coefficients_[k];
  return ComplexPolynomial(std::move(d));
}

ComplexPolynomial ComplexPolynomial::trimmed(double rel_tol) const {
  double largest = 0.0;
  for (const cplx c : coefficients_) largest = std::max(largest, std::abs(c));
  std::vector<cplx> c = coefficients_;
  while (!c.empty() && std::abs(c.back()) <= rel_tol * largest) c.pop_back();
  return ComplexPolynomial(std::move(c));
}

std::vector<cplx> ComplexPolynomial::roots() const {
  const int n = degree();
  require(n >= 1, ErrorKind::Domain, "roots() needs a polynomial of degree >= 1");
  const cplx lead = coefficients_.back();
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -coefficients_[static_cast<std::size_t>(i)] / lead;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  require(solver.info() == Eigen::Success, ErrorKind::Numeric, "companion eigenvalue solver failed");

  const ComplexPolynomial dp = derivative();
  std::vector<cplx> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    cplx z = solver.eigenvalues()(i);
    for (int it = 0; it < 3; ++it) {
      const cplx d = dp(z);
      if (std::abs(d) == 0.0) break;
      const cplx step = (*this)(z) / d;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      if (std::abs(step) > 1e-6 * (1.0 + std::abs(z))) break;  // never jump roots
      z -= step;
    }
    out[static_cast<std::size_t>(i)] = z;
  }
  return out;
}

ComplexPolynomial& ComplexPolynomial::operator+=(const ComplexPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0.0);
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] += other.coefficients_[k];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator-=(const ComplexPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size()) coefficients_.resize(other.coefficients_.size(), 0.0);
  for (std::size_t k = 0; k < other.coefficients_.size(); ++k) coefficients_[k] -= other.coefficients_[k];
  trim();
  return *this;
}

ComplexPolynomial& ComplexPolynomial::operator*=(cplx scale) {
  for (cplx& c : coefficients_) c *= scale;
  trim();
  return *this;
}

ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<cplx> c(a.coefficients_.size() + b.coefficients_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) c[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return ComplexPolynomial(std::move(c));
}

double max_coefficient_distance(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  const int top = std::max(a.degree(), b.degree());
  double worst = 0.0;
  for (int k = 0; k <= top; ++k) worst = std::max(worst, std::abs(a.coefficient(k) - b.coefficient(k)));
  return worst;
}

ComplexPolynomial lagrange_interpolant(std::span<const cplx> nodes, std::span<const cplx> values) {
  require(nodes.size() == values.size(), ErrorKind::Domain, "lagrange_interpolant: size mismatch");
  ComplexPolynomial sum;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    ComplexPolynomial basis = ComplexPolynomial::constant(1.0);
    cplx denom = 1.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      if (k == j) continue;
      basis = basis * ComplexPolynomial({-nodes[k], 1.0});
      denom *= nodes[j] - nodes[k];
    }
    require(std::abs(denom) > 0.0, ErrorKind::Domain, "lagrange_interpolant: repeated node");
    sum += basis * (values[j] / denom);
  }
  return sum;
}

}  // namespace mextremal
