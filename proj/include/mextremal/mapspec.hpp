#pragma once

#include <memory>
#include <vector>

#include <json.hpp>

#include "mextremal/cplane.hpp"
#include "mextremal/domains.hpp"

namespace mextremal {

// Expression tree for a holomorphic map from the disc into C^n. Every node
// evaluates to a vector; nodes of dimension 1 broadcast against wider ones in
// products, sums and quotients. Trees are immutable and shared.
class MapSpec {
 public:
  enum class Op {
    Constant,
    Variable,
    Moebius,
    Power,
    RealPower,
    Product,
    Sum,
    Tuple,
    Polynomial,
    Compose,
    Quotient,
    Blaschke,
  };

  MapSpec();  // the constant 0 in C^1

  static MapSpec constant(cvec value);
  static MapSpec constant(cplx value) { return constant(cvec{value}); }
  static MapSpec variable();
  static MapSpec moebius(cplx alpha);
  static MapSpec power(MapSpec base, int exponent);
  // ((1 - conj(alpha) lam) / (1 - conj(alpha0) lam))^s on principal logs.
  static MapSpec real_power(cplx alpha, cplx alpha0, double s);
  static MapSpec product(std::vector<MapSpec> factors);
  static MapSpec sum(std::vector<MapSpec> terms);
  static MapSpec tuple(std::vector<MapSpec> components);
  static MapSpec polynomial(ComplexPolynomial p);
  // outer(inner(lam)); inner must be scalar.
  static MapSpec compose(MapSpec outer, MapSpec inner);
  // Componentwise numerator / denominator. Points where the denominator is
  // tiny are treated as removable singularities.
  static MapSpec quotient(MapSpec numerator, MapSpec denominator);
  static MapSpec blaschke(BlaschkeProduct b);

  Op op() const;
  int dimension() const;
  const std::vector<MapSpec>& children() const;

  cvec operator()(cplx lam) const;
  // Evaluation at many points; rows follow the points.
  std::vector<cvec> evaluate(std::span<const cplx> lams) const;

  nlohmann::json to_json() const;
  static MapSpec from_json(const nlohmann::json& j);

 private:
  struct Node;
  explicit MapSpec(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

MapSpec operator*(const MapSpec& a, const MapSpec& b);
MapSpec operator+(const MapSpec& a, const MapSpec& b);

// c * lam^e as a scalar map.
MapSpec monomial_map(cplx c, int e);

// Coordinatewise linear ray lam -> lam * a.
MapSpec linear_ray(const cvec& a);

}  // namespace mextremal
