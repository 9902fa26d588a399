#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace casimir_landau::cli {

struct CheckResult {
  std::string name;
  std::string tag;  //!< which result of the model the check covers
  double measured = 0;
  double tolerance = 0;
  bool passed = false;
  bool informational = false;  //!< reported, never fails the run
  std::string detail;
};

struct VerifyOptions {
  bool quick = false;
  Perturbation perturb;
};

std::vector<CheckResult> run_verification(VerifyOptions const& options);

bool all_passed(std::vector<CheckResult> const& checks);

}  // namespace casimir_landau::cli
