#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mextremal/certify.hpp"
#include "mextremal/error.hpp"

namespace mextremal {

std::string ProfileReport::csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "zeta_re,zeta_im,r,defect\n";
  for (const ProfileRow& row : rows)
    out << row.zeta.real() << ',' << row.zeta.imag() << ',' << row.r << ',' << row.defect << '\n';
  return out.str();
}

ProfileReport properness_profile(const MapSpec& f, const DomainModel& dom, int n_rays, int n_radii, double kappa) {
  require(n_rays >= 1 && n_radii >= 2, ErrorKind::Domain, "properness_profile: need n_rays >= 1 and n_radii >= 2");
  require(f.dimension() == dom.dimension(), ErrorKind::Domain, "properness_profile: dimension mismatch");
  ProfileReport rep;
  rep.kappa = kappa;
  for (int j = 0; j < n_radii; ++j)
    rep.radii.push_back(1.0 - std::pow(10.0, -1.0 - 2.0 * j / static_cast<double>(n_radii - 1)));
  const double r_max = rep.radii.back();

  rep.hopf_constant = std::numeric_limits<double>::infinity();
  rep.max_ray_defect = -std::numeric_limits<double>::infinity();
  rep.almost_proper = true;
  for (int i = 0; i < n_rays; ++i) {
    const cplx zeta = std::polar(1.0, 2.0 * std::numbers::pi * i / n_rays);
    for (const double r : rep.radii) {
      const cvec z = f(r * zeta);
      for (const cplx zj : z)
        require(std::isfinite(zj.real()) && std::isfinite(zj.imag()), ErrorKind::Numeric,
                "properness_profile: map evaluation failed near the boundary");
      const double defect = 1.0 - minkowski_value(dom, z);
      rep.rows.push_back({zeta, r, defect});
      rep.hopf_constant = std::min(rep.hopf_constant, defect / (1.0 - r));
      if (r == r_max) {
        rep.max_ray_defect = std::max(rep.max_ray_defect, defect);
        if (defect > kappa * (1.0 - r_max)) rep.almost_proper = false;
      }
    }
  }
  return rep;
}

}  // namespace mextremal
