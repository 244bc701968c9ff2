#pragma once

// Regression suites against the shipped table fixtures and closed formulas.

#include <string>
#include <vector>

namespace gtkey {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Directory holding table1.json, table23.json and example_gtkey.json.
std::string default_data_dir();

std::vector<std::string> suite_names();
/// Runs one suite ("table1", "table3", "example-gtkey", "weyl", "determinant") or "all".
std::vector<Check> run_suite(const std::string& name, const std::string& data_dir);

}  // namespace gtkey
