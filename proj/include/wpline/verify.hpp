#pragma once

#include <string>
#include <vector>

namespace wpline {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  bool indeterminate = false;
  std::string detail;
};

std::vector<std::string> verify_suites();

// Runs one named suite ("all" runs everything) and returns per-check results.
std::vector<CheckResult> run_verify(const std::string& suite, int cap = 32,
                                    unsigned seed = 20240401);

}  // namespace wpline
