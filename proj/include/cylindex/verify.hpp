#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cylindex/numeric_spectra.hpp"

namespace cylindex {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Coefficient used by the numeric checks; tests swap it to exercise the failure path.
using CoefficientFactory =
    std::function<CoefficientFn(const PerturbationParams&, const ProfilePair&, int)>;

struct VerifyContext {
  CoefficientFactory coefficient;
  Discretization disc;  // center is replaced by m
  Thresholds thresholds;

  static VerifyContext standard();
};

struct Check {
  std::string suite;
  std::string name;
  std::function<CheckResult(const VerifyContext&)> run;
};

/// Known suites: "appendix-a", "quantization", "contrast" and "all".
bool is_known_suite(const std::string& suite);

/// Checks of one suite; "all" is the union. Throws std::invalid_argument on an unknown suite.
std::vector<Check> suite_checks(const std::string& suite);

/// Runs every check; exceptions thrown by a check count as failures.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, const VerifyContext& ctx);

/// 0 if every result passed, 2 otherwise.
int verify_exit_code(const std::vector<CheckResult>& results);

}  // namespace cylindex
