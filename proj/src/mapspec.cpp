#include "mextremal/mapspec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mextremal/error.hpp"
#include "mextremal/io.hpp"

namespace mextremal {

struct MapSpec::Node {
  Op op = Op::Constant;
  int dim = 1;
  cvec value;           // Constant
  cplx alpha = 0.0;     // Moebius, RealPower
  cplx alpha0 = 0.0;    // RealPower
  double s = 0.0;       // RealPower
  int exponent = 1;     // Power
  ComplexPolynomial poly;
  BlaschkeProduct blaschke;
  std::vector<MapSpec> children;
};

namespace {

constexpr double kRemovableThreshold = 1e-7;
constexpr double kRemovableRadius = 1e-2;
constexpr int kRemovableSamples = 32;

int broadcast_dim(const std::vector<MapSpec>& parts) {
  int dim = 1;
  for (const MapSpec& p : parts) {
    const int d = p.dimension();
    if (d == 1) continue;
    require(dim == 1 || dim == d, ErrorKind::Domain, "map dimensions do not broadcast");
    dim = d;
  }
  return dim;
}

cplx at(const cvec& v, std::size_t i) { return v.size() == 1 ? v[0] : v[i]; }

}  // namespace

MapSpec::MapSpec() : MapSpec(constant(cplx(0.0))) {}

MapSpec::MapSpec(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

MapSpec MapSpec::constant(cvec value) {
  require(!value.empty(), ErrorKind::Domain, "constant map needs at least one component");
  auto n = std::make_shared<Node>();
  n->op = Op::Constant;
  n->dim = static_cast<int>(value.size());
  n->value = std::move(value);
  return MapSpec(std::move(n));
}

MapSpec MapSpec::variable() {
  auto n = std::make_shared<Node>();
  n->op = Op::Variable;
  return MapSpec(std::move(n));
}

MapSpec MapSpec::moebius(cplx alpha) {
  MoebiusMap check(alpha);
  auto n = std::make_shared<Node>();
  n->op = Op::Moebius;
  n->alpha = alpha;
  return MapSpec(std::move(n));
}

MapSpec MapSpec::power(MapSpec base, int exponent) {
  require(exponent >= 0, ErrorKind::Domain, "power exponent must be nonnegative");
  auto n = std::make_shared<Node>();
  n->op = Op::Power;
  n->dim = base.dimension();
  n->exponent = exponent;
  n->children = {std::move(base)};
  return MapSpec(std::move(n));
}

MapSpec MapSpec::real_power(cplx alpha, cplx alpha0, double s) {
  require(std::abs(alpha) <= 1.0 + 1e-12, ErrorKind::Domain, "real_power: alpha must lie in the closed disc");
  require(std::abs(alpha0) < 1.0, ErrorKind::Domain, "real_power: alpha0 must lie in the open disc");
  auto n = std::make_shared<Node>();
  n->op = Op::RealPower;
  n->alpha = alpha;
  n->alpha0 = alpha0;
  n->s = s;
  return MapSpec(std::move(n));
}

MapSpec MapSpec::product(std::vector<MapSpec> factors) {
  require(!factors.empty(), ErrorKind::Domain, "empty product");
  auto n = std::make_shared<Node>();
  n->op = Op::Product;
  n->dim = broadcast_dim(factors);
  n->children = std::move(factors);
  return MapSpec(std::move(n));
}

MapSpec MapSpec::sum(std::vector<MapSpec> terms) {
  require(!terms.empty(), ErrorKind::Domain, "empty sum");
  auto n = std::make_shared<Node>();
  n->op = Op::Sum;
  n->dim = broadcast_dim(terms);
  n->children = std::move(terms);
  return MapSpec(std::move(n));
}

MapSpec MapSpec::tuple(std::vector<MapSpec> components) {
  require(!components.empty(), ErrorKind::Domain, "empty tuple");
  auto n = std::make_shared<Node>();
  n->op = Op::Tuple;
  n->dim = 0;
  for (const MapSpec& c : components) n->dim += c.dimension();
  n->children = std::move(components);
  return MapSpec(std::move(n));
}

MapSpec MapSpec::polynomial(ComplexPolynomial p) {
  auto n = std::make_shared<Node>();
  n->op = Op::Polynomial;
  n->poly = std::move(p);
  return MapSpec(std::move(n));
}

MapSpec MapSpec::compose(MapSpec outer, MapSpec inner) {
  require(inner.dimension() == 1, ErrorKind::Domain, "compose: inner map must be scalar");
  auto n = std::make_shared<Node>();
  n->op = Op::Compose;
  n->dim = outer.dimension();
  n->children = {std::move(outer), std::move(inner)};
  return MapSpec(std::move(n));
}

MapSpec MapSpec::quotient(MapSpec numerator, MapSpec denominator) {
  auto n = std::make_shared<Node>();
  n->op = Op::Quotient;
  n->children = {std::move(numerator), std::move(denominator)};
  n->dim = broadcast_dim(n->children);
  return MapSpec(std::move(n));
}

MapSpec MapSpec::blaschke(BlaschkeProduct b) {
  auto n = std::make_shared<Node>();
  n->op = Op::Blaschke;
  n->blaschke = std::move(b);
  return MapSpec(std::move(n));
}

MapSpec::Op MapSpec::op() const { return node_->op; }
int MapSpec::dimension() const { return node_->dim; }
const std::vector<MapSpec>& MapSpec::children() const { return node_->children; }

cvec MapSpec::operator()(cplx lam) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Constant:
      return n.value;
    case Op::Variable:
      return {lam};
    case Op::Moebius:
      return {MoebiusMap(n.alpha)(lam)};
    case Op::Power: {
      cvec v = n.children[0](lam);
      for (cplx& x : v) x = n.exponent == 0 ? cplx(1.0) : std::pow(x, n.exponent);
      return v;
    }
    case Op::RealPower: {
      const cplx num = 1.0 - std::conj(n.alpha) * lam;
      const cplx den = 1.0 - std::conj(n.alpha0) * lam;
      if (std::abs(num) < 1e-300) {
        // Radial limit at the boundary zero of the numerator.
        require(n.s > 0.0, ErrorKind::Domain, "real_power: negative exponent at a boundary zero");
        return {cplx(0.0)};
      }
      return {std::exp(n.s * (std::log(num) - std::log(den)))};
    }
    case Op::Product: {
      cvec out(static_cast<std::size_t>(n.dim), 1.0);
      for (const MapSpec& c : n.children) {
        const cvec v = c(lam);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] *= at(v, i);
      }
      return out;
    }
    case Op::Sum: {
      cvec out(static_cast<std::size_t>(n.dim), 0.0);
      for (const MapSpec& c : n.children) {
        const cvec v = c(lam);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += at(v, i);
      }
      return out;
    }
    case Op::Tuple: {
      cvec out;
      out.reserve(static_cast<std::size_t>(n.dim));
      for (const MapSpec& c : n.children) {
        const cvec v = c(lam);
        out.insert(out.end(), v.begin(), v.end());
      }
      return out;
    }
    case Op::Polynomial:
      return {n.poly(lam)};
    case Op::Compose:
      return n.children[0](n.children[1](lam)[0]);
    case Op::Quotient: {
      const cvec num = n.children[0](lam);
      const cvec den = n.children[1](lam);
      cvec out(static_cast<std::size_t>(n.dim));
      bool removable = false;
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (std::abs(at(den, i)) < kRemovableThreshold) {
          removable = true;
          break;
        }
        out[i] = at(num, i) / at(den, i);
      }
      if (!removable) return out;
      // Mean value over a small circle recovers the holomorphic extension.
      std::fill(out.begin(), out.end(), cplx(0.0));
      for (int k = 0; k < kRemovableSamples; ++k) {
        const cplx mu = lam + std::polar(kRemovableRadius, 2.0 * std::numbers::pi * (k + 0.5) / kRemovableSamples);
        const cvec nv = n.children[0](mu);
        const cvec dv = n.children[1](mu);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += at(nv, i) / at(dv, i);
      }
      for (cplx& x : out) x /= static_cast<double>(kRemovableSamples);
      return out;
    }
    case Op::Blaschke:
      return {n.blaschke(lam)};
  }
  fail(ErrorKind::Internal, "unknown map node");
}

std::vector<cvec> MapSpec::evaluate(std::span<const cplx> lams) const {
  std::vector<cvec> out;
  out.reserve(lams.size());
  for (const cplx lam : lams) out.push_back((*this)(lam));
  return out;
}

nlohmann::json MapSpec::to_json() const {
  const Node& n = *node_;
  json j;
  auto list = [](const std::vector<MapSpec>& xs) {
    json a = json::array();
    for (const MapSpec& x : xs) a.push_back(x.to_json());
    return a;
  };
  switch (n.op) {
    case Op::Constant:
      j = {{"op", "constant"}, {"value", mextremal::to_json(n.value)}};
      break;
    case Op::Variable:
      j = {{"op", "variable"}};
      break;
    case Op::Moebius:
      j = {{"op", "moebius"}, {"alpha", mextremal::to_json(n.alpha)}};
      break;
    case Op::Power:
      j = {{"op", "power"}, {"base", n.children[0].to_json()}, {"exponent", n.exponent}};
      break;
    case Op::RealPower:
      j = {{"op", "real_power"},
           {"alpha", mextremal::to_json(n.alpha)},
           {"alpha0", mextremal::to_json(n.alpha0)},
           {"s", n.s}};
      break;
    case Op::Product:
      j = {{"op", "product"}, {"factors", list(n.children)}};
      break;
    case Op::Sum:
      j = {{"op", "sum"}, {"terms", list(n.children)}};
      break;
    case Op::Tuple:
      j = {{"op", "tuple"}, {"components", list(n.children)}};
      break;
    case Op::Polynomial:
      j = {{"op", "polynomial"}, {"coefficients", mextremal::to_json(n.poly.coefficients())}};
      break;
    case Op::Compose:
      j = {{"op", "compose"}, {"outer", n.children[0].to_json()}, {"inner", n.children[1].to_json()}};
      break;
    case Op::Quotient:
      j = {{"op", "quotient"}, {"numerator", n.children[0].to_json()}, {"denominator", n.children[1].to_json()}};
      break;
    case Op::Blaschke:
      j = mextremal::to_json(n.blaschke);
      j["op"] = "blaschke";
      break;
  }
  return j;
}

MapSpec MapSpec::from_json(const nlohmann::json& j) {
  require(j.is_object(), ErrorKind::Schema, "map spec must be a JSON object");
  const std::string op = require_key(j, "op").get<std::string>();
  auto list = [&](const char* key) {
    const json& a = require_key(j, key);
    require(a.is_array(), ErrorKind::Schema, std::string("map spec: '") + key + "' must be an array");
    std::vector<MapSpec> xs;
    for (const json& x : a) xs.push_back(from_json(x));
    return xs;
  };
  if (op == "constant") return constant(cvec_from_json(require_key(j, "value")));
  if (op == "variable") return variable();
  if (op == "moebius") return moebius(complex_from_json(require_key(j, "alpha")));
  if (op == "power") return power(from_json(require_key(j, "base")), require_key(j, "exponent").get<int>());
  if (op == "real_power")
    return real_power(complex_from_json(require_key(j, "alpha")), complex_from_json(require_key(j, "alpha0")),
                      require_key(j, "s").get<double>());
  if (op == "product") return product(list("factors"));
  if (op == "sum") return sum(list("terms"));
  if (op == "tuple") return tuple(list("components"));
  if (op == "polynomial") return polynomial(ComplexPolynomial(cvec_from_json(require_key(j, "coefficients"))));
  if (op == "compose") return compose(from_json(require_key(j, "outer")), from_json(require_key(j, "inner")));
  if (op == "quotient")
    return quotient(from_json(require_key(j, "numerator")), from_json(require_key(j, "denominator")));
  if (op == "blaschke") return blaschke(blaschke_from_json(j));
  fail(ErrorKind::Schema, "map spec: unknown op '" + op + "'");
}

MapSpec operator*(const MapSpec& a, const MapSpec& b) { return MapSpec::product({a, b}); }
MapSpec operator+(const MapSpec& a, const MapSpec& b) { return MapSpec::sum({a, b}); }

MapSpec monomial_map(cplx c, int e) { return MapSpec::polynomial(ComplexPolynomial::monomial(e, c)); }

MapSpec linear_ray(const cvec& a) { return MapSpec::product({MapSpec::constant(a), MapSpec::variable()}); }

}  // namespace mextremal
