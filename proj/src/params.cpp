#include "casimir_landau/params.hpp"

#include <cmath>
#include <string>

#include "casimir_landau/errors.hpp"

namespace casimir_landau {

void validate(PhysicalSetup const& setup) {
  if (!(setup.mass > 0) || !std::isfinite(setup.mass))
    throw DomainError("mass must be positive, got " +
                      std::to_string(setup.mass));
  if (setup.charge == 0 || !std::isfinite(setup.charge))
    throw DomainError("charge must be nonzero");
  if (!(setup.field >= 0) || !std::isfinite(setup.field))
    throw DomainError("field must be >= 0 Tesla");
  if (setup.level < 0)
    throw DomainError("Landau level must be >= 0, got " +
                      std::to_string(setup.level));
}

DimensionlessPoint reduce(PhysicalSetup const& setup,
                          ConstantsTable const& k) {
  validate(setup);
  if (setup.field == 0)
    throw DomainError(
        "field = 0 gives x = 0, where log(2/x) is singular; B0 must be > 0");

  double const q = std::abs(setup.charge) * k.elementary_charge;
  double const mu = setup.mass * k.electron_mass;
  double const b_gauss = setup.field * gauss_per_tesla;

  DimensionlessPoint pt;
  pt.alpha = q * q / (k.hbar * k.speed_of_light);
  pt.omega_c = q * b_gauss / (mu * k.speed_of_light);
  pt.x = k.hbar * pt.omega_c / (mu * k.speed_of_light * k.speed_of_light);
  pt.n = setup.level;
  pt.orientation = setup.charge > 0 ? 1 : -1;
  pt.nonrelativistic_warning = (setup.level + 0.5) * pt.x >= validity_threshold;
  return pt;
}

DimensionlessPoint make_point(double alpha, double x, int n) {
  if (!(alpha > 0)) throw DomainError("alpha must be > 0");
  if (!(x > 0)) throw DomainError("x must be > 0");
  if (n < 0) throw DomainError("Landau level must be >= 0");
  DimensionlessPoint pt;
  pt.alpha = alpha;
  pt.x = x;
  pt.n = n;
  pt.nonrelativistic_warning = (n + 0.5) * x >= validity_threshold;
  return pt;
}

double energy_level(int n) { return n + 0.5; }

double energy_level(DimensionlessPoint const& pt) { return energy_level(pt.n); }

}  // namespace casimir_landau
