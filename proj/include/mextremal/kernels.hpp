#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "mextremal/domains.hpp"
#include "mextremal/mapspec.hpp"

// Hot loops behind certification, profiling and the falsifier. Each kernel has
// a serial reference and an OpenMP version that must agree exactly: work is
// split into fixed chunks with their own seeds, so the result does not depend
// on the thread count or schedule.
namespace mextremal::kernels {

inline constexpr long kChunk = 4096;

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk);

// Points on the boundary of dom: Gaussian vectors rescaled by the gauge,
// z_j / h(z)^{k_j}.
std::vector<cvec> sample_boundary_serial(const DomainModel& dom, long count, std::uint64_t seed);
std::vector<cvec> sample_boundary_omp(const DomainModel& dom, long count, std::uint64_t seed);

using ScalarField = std::function<cplx(std::span<const cplx>)>;

double sup_abs_serial(const ScalarField& F, std::span<const cvec> points);
double sup_abs_omp(const ScalarField& F, std::span<const cvec> points);

// max over lam of membership_defect(dom, f(lam)).
double max_defect_serial(const MapSpec& f, const DomainModel& dom, std::span<const cplx> lams);
double max_defect_omp(const MapSpec& f, const DomainModel& dom, std::span<const cplx> lams);

// Equispaced points on the circle of radius r.
std::vector<cplx> circle_grid(int size, double r = 1.0);

// Polar grid of the closed disc with about `size` points, boundary included.
std::vector<cplx> disc_grid(int size);

}  // namespace mextremal::kernels
