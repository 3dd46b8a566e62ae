#pragma once

// Self-check driver behind `quadrics verify`.

#include <string>
#include <vector>

namespace quadrics {

struct CheckResult {
  std::string name;
  int n = 0;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  int max_n = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  std::string to_json() const;
};

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Run one suite up to max_n (each suite clamps n to what it can afford).
/// Throws InvalidArgument for an unknown suite.
VerifyReport run_suite(const std::string& suite, int max_n);

}  // namespace quadrics
