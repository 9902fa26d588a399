#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace casimir_landau::cli {

enum class Command { budget, sweep, verify, integrals };
enum class OutputFormat { table, csv, json };

//! min == max and count == 1 for a single value.
struct FieldRange {
  double min = 1.0;
  double max = 1.0;
  int count = 1;
  bool log = false;

  bool ranged() const { return count > 1; }
  std::vector<double> values() const;
};

struct LevelRange {
  int min = 0;
  int max = 0;

  bool ranged() const { return max > min; }
  int count() const { return max - min + 1; }
};

//! Multipliers applied to channels inside the verifier (fault injection).
struct Perturbation {
  double spin = 1.0;
  double transverse = 1.0;
  double longitudinal = 1.0;
  double lenz = 1.0;

  bool active() const {
    return spin != 1.0 || transverse != 1.0 || longitudinal != 1.0 ||
           lenz != 1.0;
  }
};

struct RunConfig {
  Command command = Command::budget;
  std::string particle = "electron";
  double charge = -1.0;
  double mass = 1.0;
  FieldRange field;
  LevelRange level;
  std::vector<double> x_values;  // integrals command
  OutputFormat output = OutputFormat::table;
  int precision = 9;
  std::optional<double> rel_tol;
  int threads = 1;
  bool quick = false;
  Perturbation perturb;
  std::string metadata_path;
};

inline constexpr long max_grid_points = 1'000'000;

FieldRange parse_field(std::string const& text);
LevelRange parse_level(std::string const& text);
std::vector<double> parse_x_values(std::string const& text);
OutputFormat parse_output(std::string const& text);
Perturbation parse_perturb(std::string const& text);

std::string to_string(Command c);
std::string to_string(OutputFormat f);
std::string to_string(FieldRange const& r);
std::string to_string(LevelRange const& r);

//! Flat "key = value" lines; '#' starts a comment. Keys are flag names
//! without leading dashes.
std::map<std::string, std::string> read_config_file(std::string const& path);
std::map<std::string, std::string> parse_config(std::istream& in,
                                                std::string const& origin);

//! Effective configuration as a JSON object string (sidecar metadata).
std::string config_json(RunConfig const& cfg);

}  // namespace casimir_landau::cli
