#include "casimir_landau/budget.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "casimir_landau/errors.hpp"

namespace casimir_landau::budget {
namespace {

using std::numbers::pi;

double log_factor(double x) {
  if (!(x > 0) || !(x < max_x)) {
    std::ostringstream os;
    os << "x = " << x << " outside (0, 2): log(2/x) must be positive";
    throw DomainError(os.str());
  }
  return std::log(2.0 / x);
}

double polynomial_part(double alpha, double x, double n) {
  return (4 * alpha / (15 * pi)) * (n + 1) * (n + 4) * x;
}

}  // namespace

double lamb_shift(DimensionlessPoint const& pt) {
  return (2 * pt.alpha / (3 * pi)) * pt.x * log_factor(pt.x);
}

double decay_rate_per_omega(DimensionlessPoint const& pt) {
  if (!(pt.x > 0)) throw DomainError("decay rate requires x > 0");
  return pt.n * (4 * pt.alpha / 3) * pt.x;
}

double decay_rate(DimensionlessPoint const& pt) {
  return pt.omega_c * decay_rate_per_omega(pt);
}

double spin_closed(DimensionlessPoint const& pt) {
  return (pt.alpha / (3 * pi)) * (pt.n + 1) * pt.x * log_factor(pt.x);
}

double transverse_closed(DimensionlessPoint const& pt) {
  return spin_closed(pt) - polynomial_part(pt.alpha, pt.x, pt.n);
}

double longitudinal_closed(DimensionlessPoint const& pt) {
  return (4 * pt.alpha / (3 * pi)) * pt.x * log_factor(pt.x);
}

double lenz_closed(DimensionlessPoint const& pt) { return 2 * spin_closed(pt); }

double total_qv_continuous(double alpha, double x, double n) {
  return (4 * alpha / (3 * pi)) * (n + 2) * x * log_factor(x) -
         polynomial_part(alpha, x, n);
}

double total_qv(DimensionlessPoint const& pt) {
  return total_qv_continuous(pt.alpha, pt.x, pt.n);
}

double kinetic_corrected(DimensionlessPoint const& pt) {
  return -(2.0 * pt.n + 1) - total_qv(pt);
}

double magnetic_moment(DimensionlessPoint const& pt) {
  return kinetic_corrected(pt);
}

std::optional<double> crossover_level(DimensionlessPoint const& pt) {
  double const log_limit = max_x / std::numbers::e;
  if (!(pt.x > 0) || !(pt.x <= log_limit)) {
    std::ostringstream os;
    os << "crossover needs 0 < x <= 2/e, got x = " << pt.x;
    throw DomainError(os.str());
  }
  // Sign is that of 5 (n+2) L - (n+1)(n+4); alpha and x factor out.
  double const l = log_factor(pt.x);
  auto g = [l](double n) { return 5 * (n + 2) * l - (n + 1) * (n + 4); };

  double lo = 0.0;
  double hi = 1e12;
  if (g(lo) <= 0 || g(hi) >= 0) return std::nullopt;
  while (hi - lo > 1e-9 * hi) {
    double const mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

RateLedger rate_ledger(DimensionlessPoint const& pt) {
  RateLedger r;
  r.A_n = decay_rate(pt);
  return r;
}

AngularMomentumBudget assemble(DimensionlessPoint const& pt) {
  AngularMomentumBudget b;
  b.spin = spin_closed(pt);
  b.transverse_total = transverse_closed(pt);
  b.longitudinal = longitudinal_closed(pt);
  b.lenz = lenz_closed(pt);
  b.total_qv = total_qv(pt);
  b.kinetic_unperturbed = -(2.0 * pt.n + 1);
  b.kinetic_corrected = b.kinetic_unperturbed - b.total_qv;
  b.magnetic_moment_ratio = b.kinetic_corrected / b.kinetic_unperturbed;
  return b;
}

double channel_sum(AngularMomentumBudget const& b) {
  return b.spin + b.transverse_total + b.longitudinal + b.lenz;
}

}  // namespace casimir_landau::budget
