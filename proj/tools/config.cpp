#include "config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "format.hpp"

namespace casimir_landau::cli {
namespace {

std::vector<std::string> split(std::string const& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, sep)) out.push_back(item);
  return out;
}

std::string trim(std::string const& s) {
  auto const b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto const e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string const& text) {
  std::string const t = trim(text);
  double v = 0;
  auto const res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size() || t.empty())
    throw std::invalid_argument("not a number: '" + text + "'");
  return v;
}

int to_int(std::string const& text) {
  std::string const t = trim(text);
  long long v = 0;
  auto const res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size() || t.empty()) {
    // Accept integral values written in floating notation, e.g. 1e9.
    double const d = to_double(t);
    if (d != std::floor(d) || std::abs(d) > 2147483647.0)
      throw std::invalid_argument("not an integer: '" + text + "'");
    return static_cast<int>(d);
  }
  if (v > 2147483647LL || v < -2147483647LL)
    throw std::invalid_argument("integer out of range: '" + text + "'");
  return static_cast<int>(v);
}

}  // namespace

std::vector<double> FieldRange::values() const {
  std::vector<double> out;
  if (count == 1) return {min};
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    double const t = double(i) / (count - 1);
    if (i == count - 1)
      out.push_back(max);
    else if (log)
      out.push_back(std::exp(std::log(min) + t * (std::log(max) - std::log(min))));
    else
      out.push_back(min + t * (max - min));
  }
  return out;
}

FieldRange parse_field(std::string const& text) {
  auto const parts = split(text, ':');
  FieldRange r;
  if (parts.size() == 1) {
    r.min = r.max = to_double(parts[0]);
    return r;
  }
  if (parts.size() < 3 || parts.size() > 4)
    throw std::invalid_argument(
        "field range must be 'B' or 'min:max:count[:log|:linear]'");
  r.min = to_double(parts[0]);
  r.max = to_double(parts[1]);
  r.count = to_int(parts[2]);
  if (parts.size() == 4) {
    std::string const scale = trim(parts[3]);
    if (scale == "log")
      r.log = true;
    else if (scale != "linear" && scale != "lin")
      throw std::invalid_argument("field scale must be 'log' or 'linear'");
  }
  if (r.count < 1) throw std::invalid_argument("field range is empty");
  if (r.count > max_grid_points)
    throw std::invalid_argument("field count exceeds 1e6");
  if (r.max < r.min) throw std::invalid_argument("field range has max < min");
  if (r.log && !(r.min > 0))
    throw std::invalid_argument("log field range needs min > 0");
  if (r.count == 1 && r.min != r.max)
    throw std::invalid_argument("field range with count 1 needs min == max");
  return r;
}

LevelRange parse_level(std::string const& text) {
  auto const parts = split(text, ':');
  LevelRange r;
  if (parts.size() == 1) {
    r.min = r.max = to_int(parts[0]);
  } else if (parts.size() == 2) {
    r.min = to_int(parts[0]);
    r.max = to_int(parts[1]);
  } else {
    throw std::invalid_argument("level must be 'n' or 'min:max'");
  }
  if (r.min < 0) throw std::invalid_argument("level must be >= 0");
  if (r.max < r.min) throw std::invalid_argument("level range is empty");
  return r;
}

std::vector<double> parse_x_values(std::string const& text) {
  if (text.find(':') != std::string::npos) {
    auto const r = parse_field(text);
    return r.values();
  }
  std::vector<double> out;
  for (auto const& item : split(text, ',')) out.push_back(to_double(item));
  if (out.empty()) throw std::invalid_argument("no x values given");
  return out;
}

OutputFormat parse_output(std::string const& text) {
  if (text == "table") return OutputFormat::table;
  if (text == "csv") return OutputFormat::csv;
  if (text == "json") return OutputFormat::json;
  throw std::invalid_argument("output must be table, csv or json");
}

Perturbation parse_perturb(std::string const& text) {
  Perturbation p;
  for (auto const& item : split(text, ',')) {
    auto const eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("perturb entries look like 'lenz=1.9'");
    std::string const key = trim(item.substr(0, eq));
    double const v = to_double(item.substr(eq + 1));
    if (key == "spin")
      p.spin = v;
    else if (key == "transverse")
      p.transverse = v;
    else if (key == "longitudinal")
      p.longitudinal = v;
    else if (key == "lenz")
      p.lenz = v;
    else
      throw std::invalid_argument("unknown perturb channel '" + key + "'");
  }
  return p;
}

std::string to_string(Command c) {
  switch (c) {
    case Command::budget:
      return "budget";
    case Command::sweep:
      return "sweep";
    case Command::verify:
      return "verify";
    case Command::integrals:
      return "integrals";
  }
  return "?";
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::table:
      return "table";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
  }
  return "?";
}

std::string to_string(FieldRange const& r) {
  if (!r.ranged()) return format_number(r.min, 17);
  return format_number(r.min, 17) + ":" + format_number(r.max, 17) + ":" +
         std::to_string(r.count) + (r.log ? ":log" : ":linear");
}

std::string to_string(LevelRange const& r) {
  if (!r.ranged()) return std::to_string(r.min);
  return std::to_string(r.min) + ":" + std::to_string(r.max);
}

std::map<std::string, std::string> parse_config(std::istream& in,
                                                std::string const& origin) {
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto const hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto const eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                  ": expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    while (!key.empty() && key.front() == '-') key.erase(0, 1);
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> read_config_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);
  return parse_config(in, path);
}

std::string config_json(RunConfig const& cfg) {
  nlohmann::ordered_json j;
  j["command"] = to_string(cfg.command);
  j["particle"] = cfg.particle;
  j["charge"] = cfg.charge;
  j["mass"] = cfg.mass;
  j["field"] = to_string(cfg.field);
  j["level"] = to_string(cfg.level);
  if (!cfg.x_values.empty()) j["x"] = cfg.x_values;
  j["output"] = to_string(cfg.output);
  j["precision"] = cfg.precision;
  if (cfg.rel_tol)
    j["rel_tol"] = *cfg.rel_tol;
  else
    j["rel_tol"] = nullptr;
  j["threads"] = cfg.threads;
  j["quick"] = cfg.quick;
  if (cfg.perturb.active()) {
    j["perturb"] = {{"spin", cfg.perturb.spin},
                    {"transverse", cfg.perturb.transverse},
                    {"longitudinal", cfg.perturb.longitudinal},
                    {"lenz", cfg.perturb.lenz}};
  }
  return j.dump(2);
}

}  // namespace casimir_landau::cli
