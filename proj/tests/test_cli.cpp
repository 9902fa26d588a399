#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "config.hpp"
#include "doctest.h"
#include "format.hpp"
#include "json.hpp"

using namespace casimir_landau::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "casimir-landau");
  std::ostringstream out, err;
  int const code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(std::string const& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

std::vector<std::string> split(std::string const& line) {
  std::vector<std::string> cells;
  std::istringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  return cells;
}

std::filesystem::path temp_file(std::string const& name,
                                std::string const& contents) {
  auto const path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(1.0, 9) == "1");
  CHECK(format_number(0.1, 9) == "0.1");
  CHECK(format_number(1.0 / 3.0, 5) == "0.33333");
  CHECK(format_number(2.26551612345e-10, 6) == "2.26552e-10");
  CHECK(format_number(-0.0, 6) == "0");
  CHECK(significant_digits("1.2345e-10") == 5);
  CHECK(significant_digits("0.00120") == 3);
}

TEST_CASE("field and level parsing") {
  auto const single = parse_field("2.5");
  CHECK_FALSE(single.ranged());
  CHECK(single.values() == std::vector<double>{2.5});

  auto const lin = parse_field("1:3:3");
  CHECK(lin.values() == std::vector<double>{1, 2, 3});
  auto const log = parse_field("1:100:3:log");
  REQUIRE(log.values().size() == 3);
  CHECK(log.values()[1] == doctest::Approx(10));
  CHECK_THROWS(parse_field("3:1:2"));
  CHECK_THROWS(parse_field("1:2:0"));

  auto const lv = parse_level("2:6");
  CHECK(lv.count() == 5);
  CHECK_THROWS(parse_level("-1"));
  CHECK_THROWS(parse_perturb("lenz"));
  CHECK(parse_perturb("lenz=1.9").lenz == 1.9);
}

TEST_CASE("budget at one point") {
  auto const r = invoke({"budget", "--field", "1", "--level", "1"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("total_qv") != std::string::npos);
  CHECK(r.out.find("[total]") != std::string::npos);
  CHECK(r.out.find("crossover_n") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("budget rejects a zero field with a physics-domain error") {
  auto const r = invoke({"budget", "--field", "0"});
  CHECK(r.code == exit_domain);
  CHECK(r.err.find("x = 0") != std::string::npos);
}

TEST_CASE("ground level has zero rates") {
  auto const r = invoke({"budget", "--field", "1", "--level", "0", "--output", "json"});
  REQUIRE(r.code == exit_ok);
  auto const j = nlohmann::json::parse(r.out);
  CHECK(j["rates"]["A_n_per_s"].get<double>() == 0.0);
  CHECK(j["n"].get<int>() == 0);
}

TEST_CASE("budget warns outside the non-relativistic regime") {
  auto const r = invoke({"budget", "--particle", "custom", "--charge", "1",
                         "--mass", "1e-4", "--field", "1", "--level", "0"});
  CHECK(r.code == exit_ok);
  CHECK(r.err.find("warning") != std::string::npos);
}

TEST_CASE("custom particle needs both charge and mass") {
  CHECK(invoke({"budget", "--particle", "custom", "--charge", "1"}).code ==
        exit_usage);
  CHECK(invoke({"budget", "--charge", "1"}).code == exit_usage);
  CHECK(invoke({"budget", "--particle", "muon"}).code == exit_usage);
}

TEST_CASE("usage errors") {
  CHECK(invoke({}).code == exit_usage);
  CHECK(invoke({"frobnicate"}).code == exit_usage);
  CHECK(invoke({"budget", "--precision", "3"}).code == exit_usage);
  CHECK(invoke({"budget", "--field", "1:2:3"}).code == exit_usage);
  CHECK(invoke({"sweep", "--field", "1"}).code == exit_usage);
  CHECK(invoke({"sweep", "--field", "1:10:10000", "--level", "0:1000"}).code ==
        exit_usage);
  CHECK(invoke({"integrals", "--rel-tol", "1e-20"}).code == exit_usage);
}

TEST_CASE("sweep over levels at 1 T") {
  auto const r = invoke({"sweep", "--field", "1", "--level", "0:200"});
  REQUIRE(r.code == exit_ok);
  auto const rows = lines(r.out);
  REQUIRE(rows.size() == 202);
  CHECK(rows[0] == sweep_header);

  int sign_change = -1;
  double previous = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto const cells = split(rows[i]);
    REQUIRE(cells.size() == 14);
    CHECK(std::stoi(cells[2]) == int(i) - 1);
    double const total = std::stod(cells[11]);
    if (i > 1 && previous > 0 && total < 0) sign_change = int(i) - 1;
    previous = total;
  }
  CHECK(sign_change >= 110);
  CHECK(sign_change <= 115);
}

TEST_CASE("sweep rows are field-major and x grows with B0") {
  auto const r = invoke({"sweep", "--field", "1:10:4", "--level", "0:2"});
  REQUIRE(r.code == exit_ok);
  auto const rows = lines(r.out);
  REQUIRE(rows.size() == 13);
  double last_x = 0;
  for (std::size_t i = 1; i < rows.size(); i += 3) {
    double const x = std::stod(split(rows[i])[4]);
    CHECK(x > last_x);
    last_x = x;
  }
  CHECK(split(rows[1])[2] == "0");
  CHECK(split(rows[3])[2] == "2");
}

TEST_CASE("sweep json round-trips the printed digits") {
  auto const csv = invoke({"sweep", "--field", "1:2:2", "--precision", "6"});
  auto const js = invoke({"sweep", "--field", "1:2:2", "--precision", "6",
                          "--output", "json"});
  REQUIRE(csv.code == exit_ok);
  REQUIRE(js.code == exit_ok);
  auto const records = nlohmann::json::parse(js.out)["records"];
  auto const rows = lines(csv.out);
  REQUIRE(records.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    auto const cells = split(rows[i + 1]);
    CHECK(format_number(records[i]["x"].get<double>(), 6) == cells[4]);
    CHECK(format_number(records[i]["total_qv_hbar"].get<double>(), 6) == cells[11]);
  }
}

TEST_CASE("sweep reports no crossover above 2/e") {
  auto const r = invoke({"sweep", "--particle", "custom", "--charge", "1",
                         "--mass", "1.6e-5", "--field", "1:2:2"});
  REQUIRE(r.code == exit_ok);
  auto const rows = lines(r.out);
  CHECK(split(rows[1]).back() == "none");
}

TEST_CASE("sweep output is independent of thread count") {
  auto const one = invoke({"sweep", "--field", "0.5:20:10:log", "--level", "0:4"});
  auto const four = invoke({"sweep", "--field", "0.5:20:10:log", "--level",
                            "0:4", "--threads", "4"});
  REQUIRE(one.code == exit_ok);
  CHECK(one.out == four.out);
}

TEST_CASE("config file, environment default and flag override") {
  auto const path = temp_file("casimir_landau_test.cfg",
                              "# test config\n"
                              "field = 10\n"
                              "--level = 3\n"
                              "output = csv\n");
  auto const from_file =
      invoke({"budget", "--config", path.string()});
  REQUIRE(from_file.code == exit_ok);
  CHECK(from_file.out.rfind("quantity,value,unit,tag", 0) == 0);
  CHECK(from_file.out.find("B0,10,T") != std::string::npos);
  CHECK(from_file.out.find("n,3,") != std::string::npos);

  auto const overridden =
      invoke({"budget", "--config", path.string(), "--level", "5"});
  CHECK(overridden.out.find("n,5,") != std::string::npos);

  ::setenv(config_env_var, path.c_str(), 1);
  auto const from_env = invoke({"budget"});
  ::unsetenv(config_env_var);
  CHECK(from_env.out == from_file.out);

  auto const bad = temp_file("casimir_landau_bad.cfg", "colour = blue\n");
  CHECK(invoke({"budget", "--config", bad.string()}).code == exit_usage);
  CHECK(invoke({"budget", "--config", "/nonexistent/x.cfg"}).code == exit_usage);
}

TEST_CASE("metadata sidecar") {
  auto const path = std::filesystem::temp_directory_path() / "casimir_meta.json";
  auto const r = invoke({"budget", "--field", "2", "--metadata", path.string()});
  REQUIRE(r.code == exit_ok);
  std::ifstream in(path);
  auto const j = nlohmann::json::parse(in);
  CHECK(j["command"] == "budget");
  CHECK(j["field"] == "2");
}

TEST_CASE("verify passes on a clean build") {
  auto const r = invoke({"verify", "--quick"});
  CHECK(r.code == exit_ok);
  CHECK(r.out.find("FAIL") == std::string::npos);
  CHECK(r.out.find("(quick)") != std::string::npos);
}

TEST_CASE("verify quick covers every category of the full run") {
  auto names = [](std::string const& text) {
    std::vector<std::string> result;
    for (auto const& line : lines(text))
      if (line.size() > 6 && line[4] == ' ')
        result.push_back(line.substr(6, line.find(' ', 6) - 6));
    return result;
  };
  auto const quick = invoke({"verify", "--quick"});
  auto const full = invoke({"verify"});
  CHECK(full.code == exit_ok);
  CHECK(names(quick.out) == names(full.out));
  CHECK(full.out.find("84 grid points") != std::string::npos);
  CHECK(quick.out.find("4 grid points") != std::string::npos);
}

#ifdef CASIMIR_LANDAU_TEST_HOOKS
TEST_CASE("injected lenz fault fails the channel sum and names it") {
  auto const r = invoke({"verify", "--quick", "--perturb", "lenz=1.9"});
  CHECK(r.code == exit_verification);
  bool named = false;
  for (auto const& line : lines(r.out))
    if (line.rfind("FAIL", 0) == 0 && line.find("budget.channel-sum") != std::string::npos)
      named = line.find("[total]") != std::string::npos;
  CHECK(named);
}
#endif

TEST_CASE("integrals table") {
  auto const r = invoke({"integrals", "--x", "1e-4,1e-6,1e-8", "--output", "csv"});
  REQUIRE(r.code == exit_ok);
  auto const rows = lines(r.out);
  REQUIRE(rows.size() >= 4);
  double previous = 0;
  for (std::size_t i = 1; i <= 3; ++i) {
    auto const cells = split(rows[i]);
    double const spin = std::stod(cells[1]);
    CHECK(spin > previous);
    previous = spin;
    CHECK(std::stod(cells[5]) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(cells.back() == "ok");
  }
  CHECK(r.out.find("# spin prefactor ratio") != std::string::npos);
  CHECK(r.out.find("C = ") != std::string::npos);
}

TEST_CASE("integrals domain") {
  CHECK(invoke({"integrals", "--x", "1.5"}).code == exit_domain);
  CHECK(invoke({"integrals", "--x", "0"}).code == exit_domain);
  auto const wide = invoke({"integrals", "--x", "0.5", "--output", "json"});
  REQUIRE(wide.code == exit_ok);
  auto const j = nlohmann::json::parse(wide.out);
  CHECK(j["rows"][0]["longitudinal"].is_null());
}
