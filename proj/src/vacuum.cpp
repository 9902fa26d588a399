#include "casimir_landau/vacuum.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "casimir_landau/errors.hpp"
#include "casimir_landau/ladder.hpp"

namespace casimir_landau::vacuum {
namespace {

using quadrature::IntegrandSpec;
using quadrature::QuadratureResult;

void accumulate(ModeIntegral& m, QuadratureResult const& r) {
  m.value += r.value;
  m.error_estimate += r.abs_error_estimate;
  m.evaluations += r.evaluations;
  m.converged = m.converged && r.converged;
}

void require_positive_x(double x, char const* what) {
  if (!(x > 0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << what << " requires x > 0, got " << x;
    throw DomainError(os.str());
  }
}

}  // namespace

std::string_view to_string(ModeKind kind) {
  switch (kind) {
    case ModeKind::spin:
      return "spin";
    case ModeKind::recoil_orbital:
      return "recoil_orbital";
    case ModeKind::longitudinal_subtracted:
      return "longitudinal_subtracted";
    case ModeKind::longitudinal_raw:
      return "longitudinal_raw";
  }
  return "unknown";
}

double spin_integrand(double x, double u) {
  double const d = x + photon_energy(u);
  return u / (d * d);
}

ModeIntegral spin_integral(double x, double rel_tol) {
  require_positive_x(x, "spin_integral");
  ModeIntegral m{ModeKind::spin, x};
  m.converged = true;
  // Split where the integrand turns over (u ~ x) and where recoil takes
  // over (u ~ 1).
  auto f = [x](double u) { return spin_integrand(x, u); };
  double const knee = std::min(x, 1.0);
  accumulate(m, quadrature::integrate_interval(f, 0.0, knee, rel_tol));
  if (knee < 1.0)
    accumulate(m, quadrature::integrate_interval(f, knee, 1.0, rel_tol));
  accumulate(m, quadrature::integrate_semi_infinite({f, 3}, rel_tol,
                                                    std::max(knee, 1.0)));
  return m;
}

double recoil_orbital_integrand(double u, double recoil_coefficient) {
  double const d = 1.0 + recoil_coefficient * u;
  return 1.0 / (d * d * d);
}

ModeIntegral recoil_orbital_integral(double rel_tol,
                                     double recoil_coefficient) {
  if (!(recoil_coefficient > 0))
    throw DomainError("recoil coefficient must be > 0");
  ModeIntegral m{ModeKind::recoil_orbital};
  m.converged = true;
  accumulate(m, quadrature::integrate_semi_infinite(
                    {[recoil_coefficient](double u) {
                       return recoil_orbital_integrand(u, recoil_coefficient);
                     },
                     3},
                    rel_tol));
  return m;
}

TransitionWeights longitudinal_weights(int n) {
  if (n < 0) throw DomainError("Landau level must be >= 0");
  TransitionWeights w;
  w.up = ladder::orbital_transition_weight(n, n + 1);
  if (n > 0) w.down = ladder::orbital_transition_weight(n, n - 1);
  return w;
}

namespace {

// Kernel with weights already resolved; u/e(u) = 1/(1 + u/2).
double kernel(TransitionWeights const& w, double x, double u,
              bool subtracted) {
  double const e = photon_energy(u);
  if (!subtracted)
    return w.up * u / (x + e) + (w.down != 0 ? w.down * u / (e - x) : 0.0);
  double const ratio = 1.0 / (1.0 + 0.5 * u);
  double out = -w.up * x * ratio / (x + e);
  if (w.down != 0) out += w.down * x * ratio / (e - x);
  return out;
}

}  // namespace

double longitudinal_integrand(int n, double x, double u, bool subtracted) {
  require_positive_x(x, "longitudinal_integrand");
  return kernel(longitudinal_weights(n), x, u, subtracted);
}

double longitudinal_pole(double x) {
  return 2.0 * x / (1.0 + std::sqrt(1.0 + 2.0 * x));
}

ModeIntegral longitudinal_value(int n, double x, double rel_tol) {
  require_positive_x(x, "longitudinal_value");
  if (x > 1e-2)
    throw DomainError("longitudinal_value requires x <= 1e-2");
  auto const w = longitudinal_weights(n);

  ModeIntegral m{ModeKind::longitudinal_subtracted, x, n};
  m.converged = true;

  double const up = longitudinal_pole(x);
  // Up channel, regular everywhere.
  auto up_part = [&w, x](double u) {
    return -w.up * x / ((1.0 + 0.5 * u) * (x + photon_energy(u)));
  };
  // Down channel written as h(u) / (u - u_p) using
  // e(u) - x = (u - u_p)(1 + (u + u_p)/2).
  auto h = [&w, x, up](double u) {
    return w.down * x / ((1.0 + 0.5 * u) * (1.0 + 0.5 * (u + up)));
  };
  double const h_pole = h(up);
  // Principal value on the symmetric window [0, 2u_p] after subtracting
  // h(u_p), whose PV integral over that window vanishes.
  auto near = [&](double u) {
    double v = up_part(u);
    if (w.down != 0) v += (h(u) - h_pole) / (u - up);
    return v;
  };
  auto far = [&w, x](double u) { return kernel(w, x, u, true); };

  accumulate(m, quadrature::integrate_interval(near, 0.0, up, rel_tol));
  accumulate(m, quadrature::integrate_interval(near, up, 2 * up, rel_tol));
  double const mid = std::max(2 * up, 1.0);
  if (mid > 2 * up)
    accumulate(m, quadrature::integrate_interval(far, 2 * up, mid, rel_tol));
  accumulate(m,
             quadrature::integrate_semi_infinite({far, 3}, rel_tol, mid));
  return m;
}

quadrature::DivergenceProbe probe_longitudinal(int n, double x,
                                               bool subtracted,
                                               int probe_decades) {
  require_positive_x(x, "probe_longitudinal");
  auto const w = longitudinal_weights(n);
  IntegrandSpec spec{[w, x, subtracted](double u) {
                       return kernel(w, x, u, subtracted);
                     },
                     subtracted ? 3 : 1};
  return quadrature::probe_decades(spec, probe_decades);
}

ModeIntegral longitudinal_raw(int n, double x, int probe_decades) {
  auto const probe = probe_longitudinal(n, x, false, probe_decades);
  ModeIntegral m{ModeKind::longitudinal_raw, x, n};
  m.divergent = probe.log_divergent;
  m.converged = false;
  double const tail = probe.decade_integrals.back();
  m.value = m.divergent
                ? std::copysign(std::numeric_limits<double>::infinity(), tail)
                : std::numeric_limits<double>::quiet_NaN();
  m.error_estimate = std::numeric_limits<double>::infinity();
  return m;
}

double spin_normalization_ratio(double x, double spin_value) {
  return spin_prefactor_ratio * spin_value / std::log(2.0 / x);
}

LogFit fit_log_asymptote(std::span<double const> xs,
                         std::span<double const> values) {
  if (xs.size() != values.size() || xs.size() < 2)
    throw DomainError("log fit needs at least two (x, value) pairs");
  auto const count = static_cast<double>(xs.size());

  double mean_l = 0, mean_v = 0, mean_c = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double const l = std::log(1.0 / xs[i]);
    mean_l += l;
    mean_v += values[i];
    mean_c += values[i] - l;
  }
  mean_l /= count;
  mean_v /= count;
  mean_c /= count;

  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double const l = std::log(1.0 / xs[i]) - mean_l;
    sxy += l * (values[i] - mean_v);
    sxx += l * l;
  }

  LogFit fit;
  fit.slope = sxx > 0 ? sxy / sxx : 0.0;
  fit.intercept = mean_v - fit.slope * mean_l;
  fit.log_constant = mean_c;
  fit.constant = std::exp(mean_c);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double const r = values[i] - (mean_c + std::log(1.0 / xs[i]));
    fit.max_residual = std::max(fit.max_residual, std::abs(r));
  }
  return fit;
}

}  // namespace casimir_landau::vacuum
