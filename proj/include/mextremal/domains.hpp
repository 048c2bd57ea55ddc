#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "mextremal/polynomial.hpp"

namespace mextremal {

using cvec = std::vector<cplx>;

struct UnitDisc {};
struct Polydisc {
  int n = 1;
};
struct Ball {
  int n = 1;
};
// E(p) = { sum |z_j|^{2 p_j} < 1 }.
struct Ellipsoid {
  std::vector<double> p;
};
// d(z) = sum_t (sum_{j in coords_t} |z_j|)^{exponent_t} - 1.
struct GaugeTerm {
  std::vector<int> coords;
  double exponent = 1.0;
};
struct CustomGauge {
  std::string name;
  int n = 1;
  std::vector<GaugeTerm> terms;
};

using DomainShape = std::variant<UnitDisc, Polydisc, Ball, Ellipsoid, CustomGauge>;

struct DomainModel {
  DomainShape shape;
  std::vector<int> k;  // quasi-balanced weights, one per coordinate

  int dimension() const;
  std::string type_name() const;
  bool is_convex() const;
};

DomainModel unit_disc();
DomainModel polydisc(int n);
DomainModel ball(int n);
DomainModel ellipsoid(std::vector<double> p, std::vector<int> k = {});
// (|z1| + |z2|)^2 + |z3| < 1
DomainModel propab_domain();
// |z1|^2 + |z2|^2 + |z3| < 1
DomainModel prop40_domain();

// Throws Domain unless the weights are nonnegative, not all zero and match
// the dimension.
void validate(const DomainModel& dom);

enum class Region { Interior, Boundary, Exterior };

double membership_defect(const DomainModel& dom, std::span<const cplx> z);
Region classify_point(const DomainModel& dom, std::span<const cplx> z);

// k-Minkowski function inf{t > 0 : (z_j / t^{k_j}) in D}, by bisection on t.
// Restricted to weights with every k_j >= 1.
double minkowski_value(const DomainModel& dom, std::span<const cplx> z);

bool convexity_check(std::span<const double> p);

struct SnDecision {
  bool member = false;
  std::vector<double> witness;  // b_1, ..., b_k; the value set is {b_1..b_{k-1}, b_k/2}
  std::string explanation;
};

SnDecision sn_membership(std::span<const double> p);

}  // namespace mextremal
