#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace casimir_landau::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_domain = 2,
  exit_nonconvergence = 3,
  exit_verification = 4,
};

//! Environment variable naming the default config file.
inline constexpr char const* config_env_var = "CASIMIR_LANDAU_CONFIG";

/*!
 * Run the command line with \p args (args[0] is the program name). Data
 * goes to \p out, diagnostics to \p err. Returns the process exit code.
 */
int run(std::vector<std::string> const& args, std::ostream& out,
        std::ostream& err);

int cmd_budget(RunConfig const& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(RunConfig const& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(RunConfig const& cfg, std::ostream& out, std::ostream& err);
int cmd_integrals(RunConfig const& cfg, std::ostream& out, std::ostream& err);

//! Fixed CSV header of the sweep stream.
inline constexpr char const* sweep_header =
    "particle,B0_tesla,n,alpha,x,omega_c_per_s,A_n_per_s,spin_hbar,"
    "transverse_hbar,longitudinal_hbar,lenz_hbar,total_qv_hbar,"
    "kinetic_corrected_hbar,crossover_n";

}  // namespace casimir_landau::cli
