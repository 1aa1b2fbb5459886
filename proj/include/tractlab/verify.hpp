#pragma once

#include <string>
#include <vector>

namespace tractlab {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

// Module suites: maps, tracts, hypmetric, orbits, conjugacy, semiconj, render.
std::vector<std::string> suite_names();

// Runs one suite or "all". Throws ConfigError for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& suite);

}  // namespace tractlab
