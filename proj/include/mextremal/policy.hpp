#pragma once

namespace mextremal {

// Tolerances shared by every classification in the library. Reports embed the
// record actually in effect.
struct NumericPolicy {
  double unimodular_tol = 1e-10;   // |z| within this of 1 counts as unimodular
  double singular_tol = 1e-10;     // Pick eigenvalue band, relative to the matrix norm
  double boundary_band = 1e-10;    // |defect| within this counts as boundary
  double infeasible_slack = 1e-10; // Schur values may exceed modulus 1 by this much
  int circle_grid = 1024;          // verification grid on the unit circle
  int construction_grid = 512;     // disc grid used while constructing interpolants
  long boundary_samples = 100000;  // sampled boundary points for sup estimates
  int bisection_max_steps = 200;
};

const NumericPolicy& numeric_policy();
void set_numeric_policy(const NumericPolicy& policy);

// Installs a policy for the lifetime of the object (tests, CLI overrides).
class ScopedNumericPolicy {
 public:
  explicit ScopedNumericPolicy(const NumericPolicy& policy);
  ~ScopedNumericPolicy();
  ScopedNumericPolicy(const ScopedNumericPolicy&) = delete;
  ScopedNumericPolicy& operator=(const ScopedNumericPolicy&) = delete;

 private:
  NumericPolicy saved_;
};

}  // namespace mextremal
