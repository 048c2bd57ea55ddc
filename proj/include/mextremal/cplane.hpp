#pragma once

#include <complex>
#include <span>
#include <vector>

#include "mextremal/polynomial.hpp"

namespace mextremal {

// Disc automorphism lam -> (lam - alpha) / (1 - conj(alpha) lam), |alpha| < 1.
class MoebiusMap {
 public:
  explicit MoebiusMap(cplx alpha);

  cplx alpha() const { return alpha_; }
  cplx operator()(cplx lam) const;
  MoebiusMap inverse() const { return MoebiusMap(-alpha_); }

 private:
  cplx alpha_;
};

cplx moebius_eval(const MoebiusMap& m, cplx lam);

// Finite Blaschke product zeta * prod m_{a_j}, stored by its zeros.
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;  // the constant 1
  explicit BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular_factor = 1.0);

  static BlaschkeProduct monomial(int degree, cplx unimodular_factor = 1.0);

  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx unimodular_factor() const { return factor_; }
  int degree() const { return static_cast<int>(zeros_.size()); }
  bool is_constant() const { return zeros_.empty(); }

  cplx operator()(cplx lam) const;

  // Representative of +-B: zeros sorted lexicographically, factor flipped so
  // that Re >= 0 (ties: Im >= 0).
  BlaschkeProduct canonical() const;

  // numerator() / denominator() == B as rational functions.
  ComplexPolynomial numerator() const;
  ComplexPolynomial denominator() const;

 private:
  std::vector<cplx> zeros_;
  cplx factor_ = 1.0;
};

cplx blaschke_eval(const BlaschkeProduct& b, cplx lam);

// A holomorphic function known only by its values on a finite point set.
struct SampledFunction {
  std::vector<cplx> points;
  std::vector<cplx> values;

  cplx value_at_zero() const;
};

template <class Fn>
SampledFunction sample(const Fn& fn, std::span<const cplx> points) {
  SampledFunction s;
  s.points.assign(points.begin(), points.end());
  s.values.reserve(points.size());
  for (const cplx p : points) s.values.push_back(fn(p));
  return s;
}

// Default point set for Schur reduction: the origin plus equispaced rings.
std::vector<cplx> schur_sample_points(int ring_size = 64, std::span<const double> radii = {});

// Origin, the stencil +-h, +-2h on the real axis and one ring of radius 0.5.
std::vector<cplx> richardson_sample_points(double h = 1e-3, int ring_size = 16);

// One Schur reduction: g(lam) = m_{f0}(f(lam)) / lam, with g(0) recovered
// from the samples (ring mean when an equispaced ring is present, otherwise a
// 4-point Richardson stencil on the real axis).
SampledFunction schur_step(const SampledFunction& f, cplx f0);

// Applies schur_step until the function is a unimodular constant; returns the
// number of steps (the Blaschke degree). Throws Inconsistent if the samples do
// not come from a finite Blaschke product within max_steps.
int schur_reduction_degree(SampledFunction f, int max_steps = 32);

// Outcome of the Nevanlinna-Pick/Schur recursion on finite data.
struct DataDegree {
  // True when the recursion terminated with a unimodular constant after at
  // least one step, i.e. the data is interpolated by a unique Blaschke
  // product of degree <= m - 1.
  bool blaschke_extremal = false;
  // Minimal degree of a Blaschke product interpolating the data. Equals the
  // number of nodes when the recursion runs out of nodes before reaching a
  // unimodular constant.
  int degree = 0;
};

DataDegree blaschke_degree_of_data(std::span<const cplx> nodes, std::span<const cplx> values);

double poincare_distance(cplx a, cplx b);

}  // namespace mextremal
