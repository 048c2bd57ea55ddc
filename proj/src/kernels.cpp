#include "mextremal/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace mextremal::kernels {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void fill_chunk(const DomainModel& dom, std::uint64_t seed, long chunk, long count, std::vector<cvec>& out) {
  std::mt19937_64 rng(chunk_seed(seed, static_cast<std::uint64_t>(chunk)));
  std::normal_distribution<double> normal;
  const long begin = chunk * kChunk;
  const long end = std::min(count, begin + kChunk);
  const auto n = static_cast<std::size_t>(dom.dimension());
  for (long i = begin; i < end; ++i) {
    cvec z(n);
    double h = 0.0;
    while (h == 0.0) {
      for (cplx& zj : z) zj = {normal(rng), normal(rng)};
      h = minkowski_value(dom, z);
    }
    for (std::size_t j = 0; j < n; ++j) z[j] /= std::pow(h, dom.k[j]);
    out[static_cast<std::size_t>(i)] = std::move(z);
  }
}

}  // namespace

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk) {
  return splitmix64(seed ^ splitmix64(chunk + 1));
}

std::vector<cvec> sample_boundary_serial(const DomainModel& dom, long count, std::uint64_t seed) {
  std::vector<cvec> out(static_cast<std::size_t>(count));
  const long chunks = (count + kChunk - 1) / kChunk;
  for (long c = 0; c < chunks; ++c) fill_chunk(dom, seed, c, count, out);
  return out;
}

std::vector<cvec> sample_boundary_omp(const DomainModel& dom, long count, std::uint64_t seed) {
  std::vector<cvec> out(static_cast<std::size_t>(count));
  const long chunks = (count + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(dynamic, 1)
  for (long c = 0; c < chunks; ++c) fill_chunk(dom, seed, c, count, out);
  return out;
}

double sup_abs_serial(const ScalarField& F, std::span<const cvec> points) {
  double sup = 0.0;
  for (const cvec& z : points) sup = std::max(sup, std::abs(F(z)));
  return sup;
}

double sup_abs_omp(const ScalarField& F, std::span<const cvec> points) {
  double sup = 0.0;
  const long n = static_cast<long>(points.size());
#pragma omp parallel for reduction(max : sup) schedule(static)
  for (long i = 0; i < n; ++i) sup = std::max(sup, std::abs(F(points[static_cast<std::size_t>(i)])));
  return sup;
}

double max_defect_serial(const MapSpec& f, const DomainModel& dom, std::span<const cplx> lams) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const cplx lam : lams) worst = std::max(worst, membership_defect(dom, f(lam)));
  return worst;
}

double max_defect_omp(const MapSpec& f, const DomainModel& dom, std::span<const cplx> lams) {
  double worst = -std::numeric_limits<double>::infinity();
  const long n = static_cast<long>(lams.size());
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (long i = 0; i < n; ++i) worst = std::max(worst, membership_defect(dom, f(lams[static_cast<std::size_t>(i)])));
  return worst;
}

std::vector<cplx> circle_grid(int size, double r) {
  std::vector<cplx> pts;
  pts.reserve(static_cast<std::size_t>(size));
  for (int k = 0; k < size; ++k) pts.push_back(std::polar(r, 2.0 * std::numbers::pi * k / size));
  return pts;
}

std::vector<cplx> disc_grid(int size) {
  // Rings at radii j/R, j = 1..R, with 8j points each, plus the center:
  // 1 + 4R(R+1) points.
  int rings = 1;
  while (1 + 4 * (rings + 1) * (rings + 2) <= size) ++rings;
  std::vector<cplx> pts{0.0};
  for (int j = 1; j <= rings; ++j) {
    const auto ring = circle_grid(8 * j, static_cast<double>(j) / rings);
    pts.insert(pts.end(), ring.begin(), ring.end());
  }
  return pts;
}

}  // namespace mextremal::kernels
