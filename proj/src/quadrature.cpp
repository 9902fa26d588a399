#include "casimir_landau/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "casimir_landau/errors.hpp"

namespace casimir_landau::quadrature {
namespace {

// Kronrod abscissae and weights; odd indices are the Gauss 7-point nodes.
constexpr std::array<double, 8> xgk{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> wgk{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> wg{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr double tiny = std::numeric_limits<double>::min();

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

template <class F>
Panel kronrod15(F const& f, double a, double b) {
  double const center = 0.5 * (a + b);
  double const half = 0.5 * (b - a);
  double const fc = f(center);
  double resg = fc * wg[3];
  double resk = fc * wgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> f1{}, f2{};
  for (int j = 0; j < 7; ++j) {
    double const dx = half * xgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    double const sum = f1[j] + f2[j];
    resk += wgk[j] * sum;
    resabs += wgk[j] * (std::abs(f1[j]) + std::abs(f2[j]));
    if (j % 2 == 1) resg += wg[j / 2] * sum;
  }
  double const reskh = 0.5 * resk;
  double resasc = wgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += wgk[j] * (std::abs(f1[j] - reskh) + std::abs(f2[j] - reskh));

  double const result = resk * half;
  resabs *= std::abs(half);
  resasc *= std::abs(half);
  double err = std::abs((resk - resg) * half);
  if (resasc != 0 && err != 0)
    err = resasc * std::min(1.0, std::pow(200 * err / resasc, 1.5));
  if (resabs > tiny / (50 * eps)) err = std::max(50 * eps * resabs, err);
  return {a, b, result, err};
}

struct HeapOrder {
  std::vector<Panel> const* panels;
  bool operator()(std::size_t l, std::size_t r) const {
    return (*panels)[l].error < (*panels)[r].error;
  }
};

void check_rel_tol(double rel_tol) {
  if (!(rel_tol >= min_rel_tol && rel_tol <= max_rel_tol)) {
    std::ostringstream os;
    os << "rel_tol " << rel_tol << " outside [" << min_rel_tol << ", "
       << max_rel_tol << "]";
    throw DomainError(os.str());
  }
}

}  // namespace

QuadratureResult integrate_interval(std::function<double(double)> const& f,
                                    double a, double b, double rel_tol,
                                    double abs_tol, long max_evaluations) {
  check_rel_tol(rel_tol);
  if (!std::isfinite(a) || !std::isfinite(b))
    throw DomainError("integrate_interval needs finite limits");

  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  auto eval = [&](double u) {
    double const v = f(u);
    ++out.evaluations;
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "integrand returned " << v << " at u = " << u;
      throw NumericalError(os.str());
    }
    return v;
  };

  std::vector<Panel> panels;
  panels.push_back(kronrod15(eval, a, b));
  std::vector<std::size_t> heap{0};
  HeapOrder const order{&panels};

  double total = panels[0].value;
  double total_err = panels[0].error;
  auto done = [&] {
    return total_err <= std::max(abs_tol, rel_tol * std::abs(total));
  };

  bool converged = done();
  while (!converged) {
    if (out.evaluations + 30 > max_evaluations) break;
    std::pop_heap(heap.begin(), heap.end(), order);
    std::size_t const worst = heap.back();
    heap.pop_back();
    Panel const p = panels[worst];
    double const mid = 0.5 * (p.a + p.b);
    if (!(mid > p.a && mid < p.b)) {
      // Panel cannot be split further in floating point.
      heap.push_back(worst);
      std::push_heap(heap.begin(), heap.end(), order);
      break;
    }
    Panel const left = kronrod15(eval, p.a, mid);
    Panel const right = kronrod15(eval, mid, p.b);
    total += left.value + right.value - p.value;
    total_err += left.error + right.error - p.error;
    panels[worst] = left;
    heap.push_back(worst);
    std::push_heap(heap.begin(), heap.end(), order);
    panels.push_back(right);
    heap.push_back(panels.size() - 1);
    std::push_heap(heap.begin(), heap.end(), order);
    converged = done();
  }

  // Re-sum by panel position so the result does not depend on the running
  // update history.
  std::sort(panels.begin(), panels.end(),
            [](Panel const& l, Panel const& r) { return l.a < r.a; });
  double value = 0;
  double err = 0;
  for (auto const& p : panels) {
    value += p.value;
    err += p.error;
  }
  out.value = value;
  out.abs_error_estimate = err;
  out.converged = err <= std::max(abs_tol, rel_tol * std::abs(value));
  return out;
}

QuadratureResult integrate_semi_infinite(IntegrandSpec const& spec,
                                         double rel_tol, double lower,
                                         double abs_tol) {
  check_rel_tol(rel_tol);
  if (spec.decay_exponent < 2)
    throw DomainError("decay exponent hint < 2: divergent tail suspected");
  if (!spec.f) throw DomainError("empty integrand");

  auto const& f = spec.f;
  auto transformed = [&f, lower](double t) {
    double const s = t / (1.0 - t);
    double const jac = (1.0 + s) * (1.0 + s);
    double const v = f(lower + s);
    if (v == 0.0) return 0.0;
    return v * jac;
  };
  return integrate_interval(transformed, 0.0, 1.0, rel_tol, abs_tol);
}

DivergenceProbe probe_decades(IntegrandSpec const& spec, int probe_decades,
                              int first_decade) {
  if (probe_decades < 3) throw DomainError("probe_decades must be >= 3");
  DivergenceProbe out;
  for (int j = first_decade; j < first_decade + probe_decades; ++j) {
    double const lo = std::pow(10.0, j);
    auto r = integrate_interval(spec.f, lo, 10 * lo, 1e-10);
    if (!r.converged) {
      out.inconclusive = true;
      out.diagnostic = "decade integral did not converge";
    }
    out.decade_integrals.push_back(r.value);
  }
  if (out.inconclusive) return out;

  double const last = out.decade_integrals.back();
  double const prev = out.decade_integrals[out.decade_integrals.size() - 2];
  double const scale = std::max(std::abs(last), std::abs(prev));
  if (scale == 0) {
    out.diagnostic = "integrand vanishes on the probed decades";
    return out;
  }
  if (std::abs(last) > 1.1 * std::abs(prev)) {
    out.inconclusive = true;
    out.diagnostic = "decade integrals still growing: faster than log";
    return out;
  }
  out.log_divergent =
      std::abs(last - prev) <= 0.1 * scale && (last > 0) == (prev > 0);
  out.diagnostic = out.log_divergent ? "1/u tail" : "integrable tail";
  return out;
}

bool detect_log_divergence(IntegrandSpec const& spec, int probe_decades) {
  return quadrature::probe_decades(spec, probe_decades).log_divergent;
}

}  // namespace casimir_landau::quadrature
