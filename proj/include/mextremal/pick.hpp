#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "mextremal/domains.hpp"
#include "mextremal/mapspec.hpp"

namespace mextremal {

struct PickData {
  cvec nodes;
  cvec values;
};

// Throws Domain unless nodes are distinct (separation >= 1e-8) points of the
// open disc and values lie in the closed disc (within 1e-12).
void validate(const PickData& data);

// (1 - w_i conj(w_j)) / (1 - lam_i conj(lam_j))
Eigen::MatrixXcd pick_matrix(const PickData& data);

enum class PickTag { PositiveDefinite, SingularPSD, Indefinite };
const char* to_string(PickTag tag);

struct PickVerdict {
  PickTag tag = PickTag::PositiveDefinite;
  // Numerical rank. For SingularPSD data it equals the degree of the unique
  // interpolating Blaschke product; the kernel has dimension m - rank.
  int rank = 0;
  double smallest_eigenvalue = 0.0;
  double norm = 0.0;
  std::vector<double> eigenvalues;  // ascending
};

PickVerdict classify_pick(const PickData& data);

// True for SingularPSD data, false for PositiveDefinite; Indefinite data
// cannot come from a disc map and raises Inconsistent.
bool disc_weak_extremality(const PickData& data);

struct InterpolantResult {
  MapSpec h;
  double r = 1.0;
  double delta = 0.0;          // -max defect of g over the construction grid
  double boundary_defect = 0.0;  // max defect of h on the boundary grid
  double node_residual = 0.0;
};

// h = g(lam / r) + P_w with P_w the Lagrange interpolant of
// w_j = g(lam_j) - g(lam_j / r), for a fixed r > 1.
InterpolantResult lemma28_interpolant_at(const MapSpec& g, const DomainModel& dom, const cvec& nodes, double r);

// Searches r = 1 + 0.5 / 2^i until the boundary defect of h is <= -delta / 2.
InterpolantResult lemma28_interpolant(const MapSpec& g, const DomainModel& dom, const cvec& nodes);

struct FalsifierOptions {
  int restarts = 8;
  int budget = 200;      // coordinate-descent sweeps per restart
  int degree = -1;       // degree cap of Q; -1 means m + 4
  std::uint64_t seed = 0;
  int search_grid = 256;
  int verify_grid = 1024;
  double margin = 1e-6;  // witness needs verified defect < -margin
  bool parallel = true;
};

struct FalsifierResult {
  bool falsified = false;
  std::optional<MapSpec> witness;
  double best_search_defect = 0.0;
  double verified_defect = 0.0;
  int best_restart = -1;
  int degree = 0;
  std::uint64_t seed = 0;
  std::vector<double> restart_defects;
};

// One-sided search for h = L + B_nodes * Q mapping the closed disc compactly
// into dom and interpolating f at the nodes. Success shows f is not a weak
// extremal for these nodes; failure proves nothing.
FalsifierResult falsify_weak_extremality(const MapSpec& f, const DomainModel& dom, const cvec& nodes,
                                         const FalsifierOptions& options = {});

}  // namespace mextremal
