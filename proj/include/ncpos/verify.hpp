#pragma once

#include <string>
#include <vector>

namespace ncpos {

/// One check at one size.
struct CheckResult {
  std::string suite;
  std::string check;
  std::string statement;  ///< the result being tested, stated in words
  int n = 0;
  long long cases = 0;    ///< objects examined
  bool pass = false;
  bool skipped = false;   ///< n is beyond the check's exhaustive limit
  std::string detail;     ///< first counterexample or a short summary
  double ms = 0.0;
};

/// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Runs one suite for every n in [lo, hi]. Sizes beyond what a check can
/// exhaust come back with skipped set. Throws InvalidArgument on an unknown
/// suite or lo < 2.
std::vector<CheckResult> run_suite(const std::string& suite, int lo, int hi);

/// Largest n any check of the suite runs at.
int suite_limit(const std::string& suite);

}  // namespace ncpos
