#pragma once

// Random generators and independent oracles shared by the unit and
// acceptance tests.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <vector>

#include <boost/rational.hpp>

#include "mextremal/cplane.hpp"
#include "mextremal/domains.hpp"

namespace testing_support {

using mextremal::cplx;
using mextremal::cvec;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }
  double normal() { return std::normal_distribution<double>()(gen_); }

  // Uniform in the disc of radius R.
  cplx disc(double R) { return std::polar(R * std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform()); }
  cplx unimodular() { return std::polar(1.0, 2.0 * std::numbers::pi * uniform()); }

  // m points of the disc of radius R, pairwise at least sep apart.
  cvec separated_nodes(int m, double R, double sep) {
    cvec nodes;
    while (static_cast<int>(nodes.size()) < m) {
      const cplx c = disc(R);
      if (std::all_of(nodes.begin(), nodes.end(), [&](cplx x) { return std::abs(x - c) >= sep; })) nodes.push_back(c);
    }
    return nodes;
  }

  mextremal::BlaschkeProduct blaschke(int degree, double R = 0.9) {
    cvec z;
    for (int i = 0; i < degree; ++i) z.push_back(disc(R));
    return mextremal::BlaschkeProduct(z, unimodular());
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

// Generative oracle for S_n: breadth-first closure of {(1/2, ..., 1/2)} under
// "multiply by c >= 1" and "replace by a tuple from {1, p_1, ..., p_n}^n",
// with exact rational arithmetic and every value confined to `values`.
using Q = boost::rational<long>;

inline std::set<std::vector<Q>> sn_generate(int n, const std::vector<Q>& values) {
  std::set<Q> allowed(values.begin(), values.end());
  std::set<std::vector<Q>> seen;
  std::vector<std::vector<Q>> frontier{std::vector<Q>(static_cast<std::size_t>(n), Q(1, 2))};
  if (!allowed.count(Q(1, 2))) return seen;
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<std::vector<Q>> next;
    auto visit = [&](std::vector<Q> t) {
      if (seen.insert(t).second) next.push_back(std::move(t));
    };
    for (const auto& p : frontier) {
      // Scaling: the factor must send some coordinate onto an allowed value.
      for (const Q& target : allowed) {
        const Q c = target / p[0];
        if (c < Q(1)) continue;
        std::vector<Q> t = p;
        bool ok = true;
        for (Q& x : t) {
          x *= c;
          ok = ok && allowed.count(x);
        }
        if (ok) visit(std::move(t));
      }
      // Re-selection from {1, p_1, ..., p_n}.
      std::set<Q> pool(p.begin(), p.end());
      pool.insert(Q(1));
      std::vector<Q> choices;
      for (const Q& x : pool)
        if (allowed.count(x)) choices.push_back(x);
      std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
      while (true) {
        std::vector<Q> t;
        for (std::size_t i : idx) t.push_back(choices[i]);
        visit(std::move(t));
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == choices.size()) idx[k++] = 0;
        if (k == idx.size()) break;
      }
    }
    frontier = std::move(next);
  }
  return seen;
}

// All n-tuples over a grid, as doubles and rationals.
inline std::vector<std::vector<Q>> all_tuples(int n, const std::vector<Q>& grid) {
  std::vector<std::vector<Q>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    std::vector<Q> t;
    for (std::size_t i : idx) t.push_back(grid[i]);
    out.push_back(std::move(t));
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == grid.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return out;
}

inline double to_double(const Q& q) { return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator()); }

// Value set for the generative oracle. Along a generating sequence every
// intermediate value is a final value divided by a later scaling product,
// which is itself a final value or 1, so ratios x / y of grid values (and 1)
// that stay >= 1/2 suffice. A test checks that widening the set does not
// change the answers on the grids we use.
inline std::vector<Q> sn_value_set(const std::vector<Q>& grid) {
  std::set<Q> base(grid.begin(), grid.end());
  base.insert(Q(1));
  std::set<Q> v(base);
  v.insert(Q(1, 2));
  for (const Q& x : base)
    for (const Q& y : base)
      if (x / y >= Q(1, 2)) v.insert(x / y);
  return {v.begin(), v.end()};
}

}  // namespace testing_support
