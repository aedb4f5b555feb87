#pragma once

#include <functional>
#include <string>
#include <vector>

namespace rankone::cli {

struct CheckResult {
  std::string check_id;
  std::string paper_anchor;
  double achieved_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteOptions {
  /// Relative perturbation applied to Gamma inside the Gamma checks (test hook).
  double perturb_gamma = 0.0;
};

struct Check {
  std::string id;
  std::string anchor;
  double tolerance;
  std::function<double(const SuiteOptions&)> run;  // returns the achieved error
};

/// Every check, in report order.
const std::vector<Check>& all_checks();

/// Runs one check; exceptions count as failure with infinite error.
CheckResult run_check(const Check& check, const SuiteOptions& options);

}  // namespace rankone::cli
