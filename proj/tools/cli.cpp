#include "cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "casimir_landau/budget.hpp"
#include "casimir_landau/errors.hpp"
#include "casimir_landau/params.hpp"
#include "casimir_landau/quadrature.hpp"
#include "casimir_landau/vacuum.hpp"

#include "format.hpp"
#include "verify.hpp"

namespace casimir_landau::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

//---------------------------------------------------------------------------//
// Rendering helpers
//---------------------------------------------------------------------------//

//! JSON number carrying exactly the digits printed in text outputs.
json json_number(double v, int precision) {
  if (!std::isfinite(v)) return nullptr;
  std::string const s = format_number(v, precision);
  double parsed = 0;
  std::from_chars(s.data(), s.data() + s.size(), parsed);
  return parsed;
}

struct Row {
  std::string name;
  std::string value;
  std::string unit;
  std::string tag;
};

void print_rows(std::ostream& out, std::vector<Row> const& rows) {
  std::size_t w_name = 0, w_value = 0, w_unit = 0;
  for (auto const& r : rows) {
    w_name = std::max(w_name, r.name.size());
    w_value = std::max(w_value, r.value.size());
    w_unit = std::max(w_unit, r.unit.size());
  }
  for (auto const& r : rows) {
    std::string line = r.name + std::string(w_name - r.name.size() + 2, ' ') +
                       std::string(w_value - r.value.size(), ' ') + r.value +
                       "  " + r.unit;
    if (!r.tag.empty())
      line += std::string(w_unit - r.unit.size() + 2, ' ') + "[" + r.tag + "]";
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
}

void print_csv_rows(std::ostream& out, std::vector<Row> const& rows) {
  out << "quantity,value,unit,tag\n";
  for (auto const& r : rows)
    out << r.name << ',' << r.value << ',' << r.unit << ',' << r.tag << '\n';
}

//---------------------------------------------------------------------------//
// Physics glue
//---------------------------------------------------------------------------//

PhysicalSetup setup_for(RunConfig const& cfg, double field, int level) {
  return {cfg.charge, cfg.mass, field, level};
}

std::optional<double> crossover_or_none(DimensionlessPoint const& pt) {
  if (!(pt.x <= budget::max_x / std::numbers::e)) return std::nullopt;
  return budget::crossover_level(pt);
}

struct SweepRecord {
  double field = 0;
  DimensionlessPoint pt;
  double decay = 0;
  budget::AngularMomentumBudget b;
  std::optional<double> crossover;
};

SweepRecord evaluate_point(RunConfig const& cfg, double field, int level) {
  SweepRecord r;
  r.field = field;
  r.pt = reduce(setup_for(cfg, field, level));
  r.decay = budget::decay_rate(r.pt);
  r.b = budget::assemble(r.pt);
  r.crossover = crossover_or_none(r.pt);
  return r;
}

double rel_tol_for(RunConfig const& cfg, double fallback) {
  double const tol = cfg.rel_tol.value_or(fallback);
  if (!(tol >= quadrature::min_rel_tol && tol <= quadrature::max_rel_tol))
    throw UsageError("rel-tol must lie in [1e-13, 1e-3]");
  return tol;
}

//---------------------------------------------------------------------------//
// Option plumbing
//---------------------------------------------------------------------------//

struct RawOptions {
  std::map<std::string, std::string> values;
  bool quick = false;
  std::string config_path;
};

constexpr char const* known_keys[] = {
    "particle", "charge", "mass",   "field",   "level",    "x",
    "output",   "precision", "rel-tol", "threads", "quick", "perturb",
    "metadata"};

bool is_known(std::string const& key) {
  for (auto const* k : known_keys)
    if (key == k) return true;
  return false;
}

bool truthy(std::string const& v) {
  return v == "1" || v == "true" || v == "yes" || v == "on";
}

RunConfig build_config(Command command, RawOptions const& raw) {
  std::map<std::string, std::string> merged;
  std::string path = raw.config_path;
  if (path.empty())
    if (char const* env = std::getenv(config_env_var); env && *env) path = env;
  if (!path.empty()) {
    for (auto const& [k, v] : read_config_file(path)) {
      if (!is_known(k))
        throw UsageError("unknown key '" + k + "' in config " + path);
      merged[k] = v;
    }
  }
  for (auto const& [k, v] : raw.values) merged[k] = v;
  if (raw.quick) merged["quick"] = "true";

  RunConfig cfg;
  cfg.command = command;
  auto get = [&merged](char const* key) -> std::optional<std::string> {
    auto it = merged.find(key);
    if (it == merged.end()) return std::nullopt;
    return it->second;
  };

  if (auto v = get("particle")) cfg.particle = *v;
  bool const has_charge = get("charge").has_value();
  bool const has_mass = get("mass").has_value();
  if (cfg.particle == "electron") {
    if (has_charge || has_mass)
      throw UsageError("--charge/--mass need --particle custom");
  } else if (cfg.particle == "custom") {
    if (!has_charge || !has_mass)
      throw UsageError("--particle custom needs --charge and --mass");
    cfg.charge = std::stod(*get("charge"));
    cfg.mass = std::stod(*get("mass"));
  } else {
    throw UsageError("particle must be 'electron' or 'custom'");
  }

  if (auto v = get("field")) cfg.field = parse_field(*v);
  if (auto v = get("level")) cfg.level = parse_level(*v);
  if (auto v = get("x")) cfg.x_values = parse_x_values(*v);
  if (auto v = get("output")) cfg.output = parse_output(*v);
  if (auto v = get("precision")) cfg.precision = std::stoi(*v);
  if (cfg.precision < 4 || cfg.precision > 17)
    throw UsageError("precision must lie in [4, 17]");
  if (auto v = get("rel-tol")) cfg.rel_tol = std::stod(*v);
  if (auto v = get("threads")) cfg.threads = std::stoi(*v);
  if (cfg.threads < 1) throw UsageError("threads must be >= 1");
  if (auto v = get("quick")) cfg.quick = truthy(*v);
  if (auto v = get("perturb")) {
#ifdef CASIMIR_LANDAU_TEST_HOOKS
    cfg.perturb = parse_perturb(*v);
#else
    throw UsageError("--perturb is only available in test builds");
#endif
  }
  if (auto v = get("metadata")) cfg.metadata_path = *v;

  long const grid = long(cfg.field.count) * cfg.level.count();
  if (grid > max_grid_points)
    throw UsageError("grid of " + std::to_string(grid) +
                     " points exceeds the 1e6 limit");
  return cfg;
}

void add_common_options(CLI::App& sub, RawOptions& raw) {
  auto add = [&](char const* flag, char const* key, char const* help) {
    sub.add_option_function<std::string>(
        flag, [&raw, key](std::string const& v) { raw.values[key] = v; },
        help);
  };
  sub.add_option("--config", raw.config_path,
                 "key = value config file (default: $CASIMIR_LANDAU_CONFIG)");
  add("--particle", "particle", "electron | custom");
  add("--charge", "charge", "charge in units of e (custom particle)");
  add("--mass", "mass", "mass in units of m_e (custom particle)");
  add("--field", "field", "B0 in Tesla, or min:max:count[:log|:linear]");
  add("--level", "level", "Landau level n, or min:max");
  add("--output", "output", "table | csv | json");
  add("--precision", "precision", "significant digits, 4..17 (default 9)");
  add("--rel-tol", "rel-tol", "quadrature relative tolerance");
  add("--threads", "threads", "worker threads for sweeps");
  add("--metadata", "metadata",
      "write the effective config as JSON to this path ('-' for stderr)");
}

void write_metadata(RunConfig const& cfg, std::ostream& err) {
  if (cfg.metadata_path.empty()) return;
  std::string const text = config_json(cfg) + "\n";
  if (cfg.metadata_path == "-") {
    err << text;
    return;
  }
  std::ofstream file(cfg.metadata_path);
  if (!file) throw std::runtime_error("cannot write " + cfg.metadata_path);
  file << text;
}

}  // namespace

//---------------------------------------------------------------------------//
// Commands
//---------------------------------------------------------------------------//

int cmd_budget(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.field.ranged() || cfg.level.ranged())
    throw UsageError("budget takes a single field and level; use sweep");

  auto const rec = evaluate_point(cfg, cfg.field.min, cfg.level.min);
  auto const& pt = rec.pt;
  auto const& b = rec.b;
  auto const rates = budget::rate_ledger(pt);
  double const lamb = budget::lamb_shift(pt);
  int const p = cfg.precision;
  auto f = [p](double v) { return format_number(v, p); };

  if (pt.nonrelativistic_warning)
    err << "warning: (n + 1/2) x = " << f((pt.n + 0.5) * pt.x)
        << " >= 1e-2, outside the non-relativistic regime\n";

  std::string const crossover = rec.crossover ? f(*rec.crossover) : "none";
  std::vector<Row> rows{
      {"particle", cfg.particle, "", ""},
      {"charge", f(cfg.charge), "e", ""},
      {"mass", f(cfg.mass), "m_e", ""},
      {"B0", f(rec.field), "T", ""},
      {"n", std::to_string(pt.n), "", ""},
      {"alpha", f(pt.alpha), "", "coupling"},
      {"x", f(pt.x), "", "hbar omega_c / mu c^2"},
      {"omega_c", f(pt.omega_c), "1/s", "cyclotron"},
      {"energy_level", f(energy_level(pt)), "hbar omega_c", "landau-spectrum"},
      {"lamb_shift", f(lamb), "hbar omega_c", "lamb-shift"},
      {"spin", f(b.spin), "hbar", "spin"},
      {"transverse_total", f(b.transverse_total), "hbar", "transverse"},
      {"longitudinal", f(b.longitudinal), "hbar", "longitudinal"},
      {"lenz", f(b.lenz), "hbar", "lenz"},
      {"total_qv", f(b.total_qv), "hbar", "total"},
      {"kinetic_unperturbed", f(b.kinetic_unperturbed), "hbar", "kinetic"},
      {"kinetic_corrected", f(b.kinetic_corrected), "hbar", "conservation"},
      {"magnetic_moment", f(budget::magnetic_moment(pt)), "q hbar / 2 mu",
       "magnetic-moment"},
      {"magnetic_moment_ratio", f(b.magnetic_moment_ratio), "", "magnetic-moment"},
      {"crossover_n", crossover, "", "total sign change"},
      {"A_n", f(rates.A_n), "1/s", "decay-rate"},
      {"dS_dt", f(rates.dS_dt), "hbar A_n", "spin-decay"},
      {"dJ_dt", f(rates.dJ_dt), "hbar A_n", "transverse-decay"},
      {"dLenz_dt", f(rates.dLenz_dt), "hbar A_n", "lenz-decay"},
      {"dJqv_dt", f(rates.dJqv_dt), "hbar A_n", "total-decay"},
      {"dlK_dt", f(rates.dlK_dt), "hbar A_n", "kinetic-decay"},
      {"dS_dt_abs", f(rates.dS_dt * rates.A_n), "hbar/s", "spin-decay"},
      {"dJqv_dt_abs", f(rates.dJqv_dt * rates.A_n), "hbar/s", "total-decay"},
      {"dlK_dt_abs", f(rates.dlK_dt * rates.A_n), "hbar/s", "kinetic-decay"},
  };

  switch (cfg.output) {
    case OutputFormat::table:
      print_rows(out, rows);
      break;
    case OutputFormat::csv:
      print_csv_rows(out, rows);
      break;
    case OutputFormat::json: {
      json j;
      j["particle"] = cfg.particle;
      j["charge"] = json_number(cfg.charge, p);
      j["mass"] = json_number(cfg.mass, p);
      j["B0_tesla"] = json_number(rec.field, p);
      j["n"] = pt.n;
      j["alpha"] = json_number(pt.alpha, p);
      j["x"] = json_number(pt.x, p);
      j["omega_c_per_s"] = json_number(pt.omega_c, p);
      j["nonrelativistic_warning"] = pt.nonrelativistic_warning;
      j["lamb_shift_hbar_omega_c"] = json_number(lamb, p);
      j["budget"] = {{"spin", json_number(b.spin, p)},
                     {"transverse_total", json_number(b.transverse_total, p)},
                     {"longitudinal", json_number(b.longitudinal, p)},
                     {"lenz", json_number(b.lenz, p)},
                     {"total_qv", json_number(b.total_qv, p)},
                     {"kinetic_unperturbed", json_number(b.kinetic_unperturbed, p)},
                     {"kinetic_corrected", json_number(b.kinetic_corrected, p)},
                     {"magnetic_moment_ratio",
                      json_number(b.magnetic_moment_ratio, p)}};
      j["crossover_n"] =
          rec.crossover ? json_number(*rec.crossover, p) : json(nullptr);
      j["rates"] = {{"A_n_per_s", json_number(rates.A_n, p)},
                    {"dS_dt", rates.dS_dt},
                    {"dJ_dt", rates.dJ_dt},
                    {"dLenz_dt", rates.dLenz_dt},
                    {"dJqv_dt", rates.dJqv_dt},
                    {"dlK_dt", rates.dlK_dt}};
      out << j.dump(2) << '\n';
      break;
    }
  }
  return exit_ok;
}

int cmd_sweep(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.field.ranged() && !cfg.level.ranged())
    throw UsageError("sweep needs a ranged --field or --level");

  auto const fields = cfg.field.values();
  int const levels = cfg.level.count();
  std::size_t const total = fields.size() * std::size_t(levels);

  std::vector<SweepRecord> records(total);
  std::vector<std::exception_ptr> errors(total);
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < total; i += stride) {
      try {
        records[i] = evaluate_point(cfg, fields[i / levels],
                                    cfg.level.min + int(i % levels));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::size_t const nthreads =
      std::min<std::size_t>(std::size_t(cfg.threads), total);
  if (nthreads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
  }
  for (auto const& e : errors)
    if (e) std::rethrow_exception(e);

  std::size_t warnings = 0;
  for (auto const& r : records) warnings += r.pt.nonrelativistic_warning;
  if (warnings)
    err << "warning: " << warnings
        << " grid points have (n + 1/2) x >= 1e-2 (non-relativistic regime "
           "exceeded)\n";

  int const p = cfg.precision;
  auto f = [p](double v) { return format_number(v, p); };
  std::ostringstream buf;
  if (cfg.output == OutputFormat::json) {
    json arr = json::array();
    for (auto const& r : records) {
      arr.push_back({{"particle", cfg.particle},
                     {"B0_tesla", json_number(r.field, p)},
                     {"n", r.pt.n},
                     {"alpha", json_number(r.pt.alpha, p)},
                     {"x", json_number(r.pt.x, p)},
                     {"omega_c_per_s", json_number(r.pt.omega_c, p)},
                     {"A_n_per_s", json_number(r.decay, p)},
                     {"spin_hbar", json_number(r.b.spin, p)},
                     {"transverse_hbar", json_number(r.b.transverse_total, p)},
                     {"longitudinal_hbar", json_number(r.b.longitudinal, p)},
                     {"lenz_hbar", json_number(r.b.lenz, p)},
                     {"total_qv_hbar", json_number(r.b.total_qv, p)},
                     {"kinetic_corrected_hbar",
                      json_number(r.b.kinetic_corrected, p)},
                     {"crossover_n", r.crossover ? json_number(*r.crossover, p)
                                                 : json(nullptr)}});
    }
    json j;
    j["records"] = std::move(arr);
    buf << j.dump(2) << '\n';
  } else {
    // Table output is the CSV stream as well; sweeps are meant for machines.
    buf << sweep_header << '\n';
    for (auto const& r : records) {
      buf << cfg.particle << ',' << f(r.field) << ',' << r.pt.n << ','
          << f(r.pt.alpha) << ',' << f(r.pt.x) << ',' << f(r.pt.omega_c) << ','
          << f(r.decay) << ',' << f(r.b.spin) << ',' << f(r.b.transverse_total)
          << ',' << f(r.b.longitudinal) << ',' << f(r.b.lenz) << ','
          << f(r.b.total_qv) << ',' << f(r.b.kinetic_corrected) << ','
          << (r.crossover ? f(*r.crossover) : std::string("none")) << '\n';
    }
  }
  out << buf.str();
  if (!out) throw std::runtime_error("failed writing sweep output");
  return exit_ok;
}

int cmd_verify(RunConfig const& cfg, std::ostream& out, std::ostream&) {
  VerifyOptions opt;
  opt.quick = cfg.quick;
  opt.perturb = cfg.perturb;
  auto const checks = run_verification(opt);
  bool const ok = all_passed(checks);
  int const p = std::min(cfg.precision, 6);

  auto status = [](CheckResult const& c) {
    return c.informational ? "INFO" : c.passed ? "PASS" : "FAIL";
  };
  switch (cfg.output) {
    case OutputFormat::json: {
      json arr = json::array();
      for (auto const& c : checks)
        arr.push_back({{"name", c.name},
                       {"tag", c.tag},
                       {"status", status(c)},
                       {"measured", json_number(c.measured, p)},
                       {"tolerance", json_number(c.tolerance, p)},
                       {"detail", c.detail}});
      json j;
      j["checks"] = std::move(arr);
      j["passed"] = ok;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "name,tag,status,measured,tolerance,detail\n";
      for (auto const& c : checks)
        out << c.name << ',' << c.tag << ',' << status(c) << ','
            << format_number(c.measured, p) << ','
            << format_number(c.tolerance, p) << ",\"" << c.detail << "\"\n";
      break;
    case OutputFormat::table: {
      std::size_t w = 0;
      for (auto const& c : checks) w = std::max(w, c.name.size());
      for (auto const& c : checks) {
        out << status(c) << "  " << c.name
            << std::string(w - c.name.size() + 2, ' ') << '[' << c.tag << "]";
        if (!c.informational)
          out << "  residual=" << format_number(c.measured, p)
              << "  tol=" << format_number(c.tolerance, p);
        out << "  " << c.detail << '\n';
      }
      int failed = 0;
      for (auto const& c : checks) failed += !c.informational && !c.passed;
      out << (ok ? "all checks passed" : std::to_string(failed) + " check(s) failed")
          << (cfg.quick ? " (quick)" : "") << '\n';
      break;
    }
  }
  return ok ? exit_ok : exit_verification;
}

int cmd_integrals(RunConfig const& cfg, std::ostream& out, std::ostream& err) {
  std::vector<double> xs = cfg.x_values;
  if (xs.empty()) xs = {1e-4, 1e-5, 1e-6, 1e-7, 1e-8};
  for (double x : xs)
    if (!(x > 0 && x < 1))
      throw DomainError("integrals need x in (0, 1), got x = " +
                        format_number(x, 17));
  if (cfg.level.ranged())
    throw UsageError("integrals take a single --level for the longitudinal kernel");
  int const n = cfg.level.min;
  double const tol = rel_tol_for(cfg, quadrature::acceptance_rel_tol);
  int const p = cfg.precision;
  auto f = [p](double v) { return format_number(v, p); };

  struct IntegralRow {
    double x;
    vacuum::ModeIntegral spin, recoil;
    std::optional<vacuum::ModeIntegral> longitudinal;
    std::string status;
  };
  std::vector<IntegralRow> rows;
  bool any_failure = false;
  for (double x : xs) {
    IntegralRow r{x, {}, {}, {}, "ok"};
    try {
      r.spin = vacuum::spin_integral(x, tol);
      r.recoil = vacuum::recoil_orbital_integral(tol);
      if (x <= 1e-2) r.longitudinal = vacuum::longitudinal_value(n, x, tol);
      bool const converged = r.spin.converged && r.recoil.converged &&
                             (!r.longitudinal || r.longitudinal->converged);
      if (!converged)
        r.status = "nonconverged";
      else if (!r.longitudinal)
        r.status = "ok (longitudinal n/a above x = 1e-2)";
    } catch (NumericalError const& e) {
      r.status = "error";
      err << "x = " << f(x) << ": " << e.what() << '\n';
    }
    any_failure = any_failure || r.status == "nonconverged" || r.status == "error";
    rows.push_back(std::move(r));
  }

  // Asymptotic fits over the rows that carry values.
  std::vector<double> fx, fs, fl;
  for (auto const& r : rows) {
    if (r.status == "error") continue;
    fx.push_back(r.x);
    fs.push_back(r.spin.value);
    fl.push_back(r.longitudinal ? r.longitudinal->value / r.x : NAN);
  }
  std::optional<vacuum::LogFit> spin_fit, long_fit;
  if (fx.size() >= 2) {
    spin_fit = vacuum::fit_log_asymptote(fx, fs);
    bool all_long = true;
    for (double v : fl) all_long = all_long && std::isfinite(v);
    if (all_long) long_fit = vacuum::fit_log_asymptote(fx, fl);
  }

  auto shape = [](IntegralRow const& r) {
    return r.longitudinal ? r.longitudinal->value / (r.x * std::log(2 / r.x))
                          : NAN;
  };

  if (cfg.output == OutputFormat::json) {
    json arr = json::array();
    for (auto const& r : rows) {
      arr.push_back(
          {{"x", json_number(r.x, p)},
           {"spin_integral", json_number(r.spin.value, p)},
           {"spin_error", json_number(r.spin.error_estimate, 3)},
           {"log_2_over_x", json_number(std::log(2 / r.x), p)},
           {"spin_normalization_ratio",
            json_number(vacuum::spin_normalization_ratio(r.x, r.spin.value), p)},
           {"recoil_integral", json_number(r.recoil.value, p)},
           {"recoil_error", json_number(r.recoil.error_estimate, 3)},
           {"longitudinal",
            r.longitudinal ? json_number(r.longitudinal->value, p) : json(nullptr)},
           {"longitudinal_error", r.longitudinal
                                      ? json_number(r.longitudinal->error_estimate, 3)
                                      : json(nullptr)},
           {"longitudinal_shape", json_number(shape(r), p)},
           {"status", r.status}});
    }
    json j;
    j["level"] = n;
    j["rel_tol"] = tol;
    j["rows"] = std::move(arr);
    j["spin_prefactor_ratio"] = json_number(vacuum::spin_prefactor_ratio, p);
    if (spin_fit)
      j["spin_fit"] = {{"C", json_number(spin_fit->constant, p)},
                       {"slope", json_number(spin_fit->slope, p)}};
    if (long_fit)
      j["longitudinal_fit"] = {{"C", json_number(long_fit->constant, p)},
                               {"slope", json_number(long_fit->slope, p)}};
    out << j.dump(2) << '\n';
  } else {
    char const sep = cfg.output == OutputFormat::csv ? ',' : '\t';
    out << "x" << sep << "spin_integral" << sep << "spin_error" << sep
        << "log_2_over_x" << sep << "spin_normalization_ratio" << sep
        << "recoil_integral" << sep << "recoil_error" << sep << "longitudinal"
        << sep << "longitudinal_error" << sep << "longitudinal_shape" << sep
        << "status\n";
    for (auto const& r : rows) {
      out << f(r.x) << sep << f(r.spin.value) << sep
          << format_number(r.spin.error_estimate, 4) << sep
          << f(std::log(2 / r.x)) << sep
          << f(vacuum::spin_normalization_ratio(r.x, r.spin.value)) << sep
          << f(r.recoil.value) << sep
          << format_number(r.recoil.error_estimate, 4) << sep
          << (r.longitudinal ? f(r.longitudinal->value) : "nan") << sep
          << (r.longitudinal ? format_number(r.longitudinal->error_estimate, 4)
                             : "nan")
          << sep << f(shape(r)) << sep << r.status << '\n';
    }
    out << "# spin prefactor ratio (direct reduction / closed form) = "
        << f(vacuum::spin_prefactor_ratio) << '\n';
    if (spin_fit)
      out << "# spin_integral ~ log(C/x): C = " << f(spin_fit->constant)
          << ", free-fit slope = " << f(spin_fit->slope) << '\n';
    if (long_fit)
      out << "# longitudinal/x ~ log(C/x): C = " << f(long_fit->constant)
          << ", free-fit slope = " << f(long_fit->slope) << '\n';
  }
  return any_failure ? exit_nonconvergence : exit_ok;
}

//---------------------------------------------------------------------------//
// Entry point
//---------------------------------------------------------------------------//

int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Quantum-vacuum angular momentum of a Landau-level charge",
               "casimir-landau"};
  app.require_subcommand(1);

  RawOptions raw;
  std::optional<Command> chosen;
  auto* budget_cmd = app.add_subcommand("budget", "angular-momentum budget at one point");
  auto* sweep_cmd = app.add_subcommand("sweep", "budget over a field/level grid");
  auto* verify_cmd = app.add_subcommand("verify", "run the oracle suite");
  auto* integrals_cmd =
      app.add_subcommand("integrals", "photon-mode integrals vs x");
  for (auto* sub : {budget_cmd, sweep_cmd, verify_cmd, integrals_cmd})
    add_common_options(*sub, raw);
  verify_cmd->add_flag("--quick", raw.quick, "reduced grid, every check category");
#ifdef CASIMIR_LANDAU_TEST_HOOKS
  verify_cmd->add_option_function<std::string>(
      "--perturb", [&raw](std::string const& v) { raw.values["perturb"] = v; },
      "fault injection, e.g. lenz=1.9");
#endif
  integrals_cmd->add_option_function<std::string>(
      "--x", [&raw](std::string const& v) { raw.values["x"] = v; },
      "comma list or min:max:count[:log]");
  budget_cmd->callback([&] { chosen = Command::budget; });
  sweep_cmd->callback([&] { chosen = Command::sweep; });
  verify_cmd->callback([&] { chosen = Command::verify; });
  integrals_cmd->callback([&] { chosen = Command::integrals; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    RunConfig const cfg = build_config(*chosen, raw);
    write_metadata(cfg, err);
    switch (cfg.command) {
      case Command::budget:
        return cmd_budget(cfg, out, err);
      case Command::sweep:
        return cmd_sweep(cfg, out, err);
      case Command::verify:
        return cmd_verify(cfg, out, err);
      case Command::integrals:
        return cmd_integrals(cfg, out, err);
    }
  } catch (DomainError const& e) {
    err << "physics-domain error: " << e.what() << '\n';
    return exit_domain;
  } catch (NumericalError const& e) {
    err << "numerical error: " << e.what() << '\n';
    return exit_nonconvergence;
  } catch (std::invalid_argument const& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (std::out_of_range const& e) {
    err << "usage error: value out of range (" << e.what() << ")\n";
    return exit_usage;
  } catch (std::exception const& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace casimir_landau::cli
