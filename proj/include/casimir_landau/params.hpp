#pragma once

#include <string_view>

namespace casimir_landau {

//---------------------------------------------------------------------------//
/*!
 * Physical constants in Gaussian-CGS units.
 *
 * Values are CODATA 2018. The elementary charge in statcoulomb is
 * e[C] * c[cm/s] / 10. The fine-structure constant is derived from these,
 * never stored.
 */
struct ConstantsTable {
  double speed_of_light;  // cm s^-1
  double hbar;            // erg s
  double elementary_charge;  // statC
  double electron_mass;      // g
  std::string_view provenance;

  double fine_structure() const {
    return elementary_charge * elementary_charge / (hbar * speed_of_light);
  }
};

inline constexpr ConstantsTable codata2018{
    2.99792458e10,          // exact
    1.054571817e-27,        // exact (h / 2pi, SI 2019)
    4.803204712570263e-10,  // 1.602176634e-19 C * 2.99792458e9
    9.1093837015e-28,
    "CODATA 2018, Gaussian-CGS",
};

//! Gauss per Tesla.
inline constexpr double gauss_per_tesla = 1.0e4;

//! Lab-frame description of the charge.
struct PhysicalSetup {
  double charge = -1.0;  //!< multiples of e, signed, nonzero
  double mass = 1.0;     //!< multiples of m_e, > 0
  double field = 1.0;    //!< B0 in Tesla, >= 0
  int level = 0;         //!< Landau index n >= 0
};

//---------------------------------------------------------------------------//
/*!
 * Reduced state consumed by every closed form and mode integral.
 *
 * All angular momenta are reported along +z, the direction of qB0, so x and
 * omega_c are stored as positive magnitudes. \c orientation records the sign
 * of qB0 relative to the lab field direction.
 */
struct DimensionlessPoint {
  double alpha = 0;    //!< q^2 / hbar c
  double x = 0;        //!< hbar omega_c / mu c^2
  int n = 0;           //!< Landau index
  double omega_c = 0;  //!< s^-1
  int orientation = 1;
  bool nonrelativistic_warning = false;  //!< (n + 1/2) x >= 1e-2
};

//! Threshold on (n + 1/2) x above which the non-relativistic formulas are
//! flagged as questionable.
inline constexpr double validity_threshold = 1.0e-2;

void validate(PhysicalSetup const& setup);

DimensionlessPoint reduce(PhysicalSetup const& setup,
                          ConstantsTable const& constants = codata2018);

//! Build a point directly from (alpha, x, n); omega_c is left at zero.
DimensionlessPoint make_point(double alpha, double x, int n);

//! Landau energy E_n in units of hbar omega_c, at k_z = 0.
double energy_level(DimensionlessPoint const& pt);
double energy_level(int n);

}  // namespace casimir_landau
