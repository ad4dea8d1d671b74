#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace tsf {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double elapsed_ms = 0;
  std::string detail;
};

struct VerifyOptions {
  int max_n = 6;
  int max_d = 3;
};

/// Names accepted by run_suite, in report order ("all" excluded).
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Checks run in a fixed order.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions &options);

} // namespace tsf
