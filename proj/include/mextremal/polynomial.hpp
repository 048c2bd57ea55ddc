#pragma once

#include <complex>
#include <span>
#include <vector>

namespace mextremal {

using cplx = std::complex<double>;

// Univariate polynomial with complex coefficients, ascending degree. Trailing
// zero coefficients are trimmed so that the zero polynomial has no
// coefficients and degree() == -1.
class ComplexPolynomial {
 public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<cplx> coefficients);

  static ComplexPolynomial constant(cplx c);
  static ComplexPolynomial monomial(int degree, cplx coefficient = 1.0);
  static ComplexPolynomial from_roots(std::span<const cplx> roots, cplx leading = 1.0);

  const std::vector<cplx>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  cplx coefficient(int k) const;

  cplx operator()(cplx x) const;
  ComplexPolynomial derivative() const;

  // Drops leading coefficients below rel_tol * max|c|.
  ComplexPolynomial trimmed(double rel_tol) const;

  // Roots via eigenvalues of the companion matrix, each polished by a few
  // Newton steps. Requires degree >= 1.
  std::vector<cplx> roots() const;

  ComplexPolynomial& operator+=(const ComplexPolynomial& other);
  ComplexPolynomial& operator-=(const ComplexPolynomial& other);
  ComplexPolynomial& operator*=(cplx scale);

  friend ComplexPolynomial operator+(ComplexPolynomial a, const ComplexPolynomial& b) { return a += b; }
  friend ComplexPolynomial operator-(ComplexPolynomial a, const ComplexPolynomial& b) { return a -= b; }
  friend ComplexPolynomial operator*(ComplexPolynomial a, cplx s) { return a *= s; }
  friend ComplexPolynomial operator*(cplx s, ComplexPolynomial a) { return a *= s; }
  friend ComplexPolynomial operator*(const ComplexPolynomial& a, const ComplexPolynomial& b);

  // Largest coefficient-wise modulus of a - b.
  friend double max_coefficient_distance(const ComplexPolynomial& a, const ComplexPolynomial& b);

 private:
  void trim();
  std::vector<cplx> coefficients_;
};

// Lagrange interpolation polynomial through (nodes[i], values[i]).
ComplexPolynomial lagrange_interpolant(std::span<const cplx> nodes, std::span<const cplx> values);

}  // namespace mextremal
