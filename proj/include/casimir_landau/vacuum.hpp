#pragma once

#include <span>
#include <string_view>

#include "casimir_landau/quadrature.hpp"

namespace casimir_landau::vacuum {

// Photon momenta are reduced through u = hbar k / mu c, so the intermediate
// photon + recoil energy is mu c^2 e(u) with e(u) = u + u^2/2 and the
// cyclotron quantum is mu c^2 x.

enum class ModeKind { spin, recoil_orbital, longitudinal_subtracted,
                      longitudinal_raw };

std::string_view to_string(ModeKind kind);

struct ModeIntegral {
  ModeKind kind = ModeKind::spin;
  double x = 0;
  int n = 0;
  double value = 0;
  double error_estimate = 0;
  long evaluations = 0;
  bool converged = false;
  bool divergent = false;
};

inline double photon_energy(double u) { return u + 0.5 * u * u; }

//! u du / (x + e(u))^2
double spin_integrand(double x, double u);

//! I_S(x) = int_0^inf u du / (x + e(u))^2
ModeIntegral spin_integral(double x,
                           double rel_tol = quadrature::acceptance_rel_tol);

//! u^3 / (u + c u^2)^3 with the u^3 cancelled; c = 1/2 is the physical
//! recoil coefficient.
double recoil_orbital_integrand(double u, double recoil_coefficient = 0.5);

//! int_0^inf du / (1 + c u)^3 = 1 / (2c); x-independent.
ModeIntegral recoil_orbital_integral(
    double rel_tol = quadrature::acceptance_rel_tol,
    double recoil_coefficient = 0.5);

//! Orbital weights of the two intermediate levels n +- 1, from the ladder
//! oracle. down is zero at n = 0.
struct TransitionWeights {
  double up = 0;
  double down = 0;
};

TransitionWeights longitudinal_weights(int n);

/*!
 * Longitudinal kernel at photon momentum u.
 *
 * Unsubtracted: sum_n' W_n' u / (Delta_n' + e(u)), which tends to
 * (W_up + W_down) u / e(u) ~ -2(2n+1)/u: the mass-renormalisation log.
 * Subtracted: the counterterm W u / e(u) removed, leaving
 * -sum_n' W_n' Delta_n' u / (e (Delta_n' + e)), which decays as u^-3.
 * Delta_{n+1} = +x, Delta_{n-1} = -x; the n-1 term has a pole at e(u) = x.
 */
double longitudinal_integrand(int n, double x, double u, bool subtracted);

//! Pole of the n-1 channel, e(u_pole) = x.
double longitudinal_pole(double x);

/*!
 * Principal-value integral of the subtracted longitudinal kernel over
 * u in (0, inf). The resonant delta-function part belongs to the decay
 * rate and is not included. Requires 0 < x <= 1e-2.
 */
ModeIntegral longitudinal_value(
    int n, double x, double rel_tol = quadrature::acceptance_rel_tol);

//! Decade probe of the unsubtracted kernel; the returned integral carries
//! divergent = true and an infinite value when the 1/u tail is detected.
ModeIntegral longitudinal_raw(int n, double x, int probe_decades = 5);

quadrature::DivergenceProbe probe_longitudinal(int n, double x,
                                               bool subtracted,
                                               int probe_decades = 5);

//! Prefactor ratio between the direct reduction of the spin mode sum,
//! (alpha/3)(n+1) x I_S, and the closed form (alpha/3pi)(n+1) x log(2/x).
inline constexpr double spin_prefactor_ratio = 3.14159265358979323846;

//! pi I_S(x) / log(2/x): the full measured ratio of the two expressions.
double spin_normalization_ratio(double x, double spin_value);

struct LogFit {
  double slope = 0;         //!< a in v = a log(1/x) + b (free fit)
  double intercept = 0;     //!< b
  double log_constant = 0;  //!< log C in v = log(C/x) (unit slope)
  double constant = 0;      //!< C
  double max_residual = 0;  //!< of the unit-slope fit
};

//! Least-squares fit of values against log(C/x).
LogFit fit_log_asymptote(std::span<double const> xs,
                         std::span<double const> values);

}  // namespace casimir_landau::vacuum
