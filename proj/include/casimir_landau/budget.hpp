#pragma once

#include <optional>

#include "casimir_landau/params.hpp"

namespace casimir_landau::budget {

//! Upper limit on x for every log(2/x) closed form.
inline constexpr double max_x = 2.0;

/*!
 * Vacuum angular momentum per channel, in units of hbar along qB0.
 *
 * spin + transverse_total + longitudinal + lenz reproduces total_qv, and the
 * kinetic angular momentum is corrected so that l^K + J^QV stays at its
 * unperturbed value.
 */
struct AngularMomentumBudget {
  double spin = 0;
  double transverse_total = 0;
  double longitudinal = 0;
  double lenz = 0;
  double total_qv = 0;
  double kinetic_unperturbed = 0;
  double kinetic_corrected = 0;
  double magnetic_moment_ratio = 0;
};

//! Rates in units of hbar A_n, plus A_n itself in s^-1.
struct RateLedger {
  double A_n = 0;
  double dS_dt = -0.5;
  double dJ_dt = -0.5;
  double dLenz_dt = -1.0;
  double dJqv_dt = -2.0;
  double dlK_dt = 2.0;

  double conservation_sum() const { return dJqv_dt + dlK_dt; }
};

//! E^L / hbar omega_c = (2 alpha / 3 pi) x log(2/x)
double lamb_shift(DimensionlessPoint const& pt);
//! A_n = n omega_c (4 alpha / 3) x, in s^-1
double decay_rate(DimensionlessPoint const& pt);
//! A_n / omega_c; usable on points without a lab frequency.
double decay_rate_per_omega(DimensionlessPoint const& pt);

double spin_closed(DimensionlessPoint const& pt);
double transverse_closed(DimensionlessPoint const& pt);
double longitudinal_closed(DimensionlessPoint const& pt);
double lenz_closed(DimensionlessPoint const& pt);
double total_qv(DimensionlessPoint const& pt);
double kinetic_corrected(DimensionlessPoint const& pt);
//! In units of q hbar / 2 mu.
double magnetic_moment(DimensionlessPoint const& pt);

//! Total vacuum angular momentum at a real-valued level, for root finding.
double total_qv_continuous(double alpha, double x, double n);

/*!
 * Real root n* of total_qv in n at fixed x, to 1e-8 relative.
 *
 * Requires 0 < x <= 2/e. Returns nullopt if there is no sign change in
 * [0, 1e12].
 */
std::optional<double> crossover_level(DimensionlessPoint const& pt);

RateLedger rate_ledger(DimensionlessPoint const& pt);

AngularMomentumBudget assemble(DimensionlessPoint const& pt);

double channel_sum(AngularMomentumBudget const& b);

}  // namespace casimir_landau::budget
