#pragma once

#include <functional>
#include <string>
#include <vector>

namespace casimir_landau::quadrature {

struct QuadratureResult {
  double value = 0;
  double abs_error_estimate = 0;
  long evaluations = 0;
  bool converged = false;
};

enum class EndpointBehavior { regular, integrable_singular };

struct IntegrandSpec {
  std::function<double(double)> f;
  //! f(u) ~ u^-decay_exponent as u -> infinity
  int decay_exponent = 2;
  EndpointBehavior at_zero = EndpointBehavior::regular;
};

inline constexpr long default_max_evaluations = 1'000'000;
inline constexpr double acceptance_rel_tol = 1e-10;
inline constexpr double sweep_rel_tol = 1e-8;
inline constexpr double min_rel_tol = 1e-13;
inline constexpr double max_rel_tol = 1e-3;

/*!
 * Globally adaptive Gauss-Kronrod (7/15) integration on [a, b].
 *
 * Stops when the summed error estimate is below max(abs_tol, rel_tol |I|).
 * Exhausting the evaluation budget returns the best estimate with
 * converged = false. A non-finite integrand value throws NumericalError
 * naming the abscissa.
 */
QuadratureResult integrate_interval(std::function<double(double)> const& f,
                                    double a, double b, double rel_tol,
                                    double abs_tol = 0.0,
                                    long max_evaluations =
                                        default_max_evaluations);

/*!
 * Integral of spec.f over [lower, infinity) through u = lower + t/(1-t).
 *
 * rel_tol must lie in [1e-13, 1e-3]; a decay hint below 2 is rejected as a
 * suspected divergence (DomainError).
 */
QuadratureResult integrate_semi_infinite(IntegrandSpec const& spec,
                                         double rel_tol, double lower = 0.0,
                                         double abs_tol = 0.0);

struct DivergenceProbe {
  bool log_divergent = false;
  bool inconclusive = false;
  std::vector<double> decade_integrals;  //!< over [10^j, 10^{j+1}]
  std::string diagnostic;
};

//! Integrate over successive decades starting at [10^first, 10^{first+1}].
DivergenceProbe probe_decades(IntegrandSpec const& spec, int probe_decades,
                              int first_decade = 0);

//! True iff the last two decade integrals agree to 10% and are nonzero,
//! i.e. the tail behaves as 1/u.
bool detect_log_divergence(IntegrandSpec const& spec, int probe_decades);

}  // namespace casimir_landau::quadrature
