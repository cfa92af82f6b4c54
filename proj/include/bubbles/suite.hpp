#pragma once

// Invariant batteries over both mathematical modules.

#include <string>
#include <vector>

namespace bubbles::suite {

struct Config {
  int order = 64;
  /// Perturbs one bubble value so that the admissibility battery must fail.
  bool corrupt = false;
  unsigned threads = 0;
};

struct BatteryResult {
  std::string name;
  bool pass = true;
  int cases = 0;
  std::string detail;
};

std::vector<std::string> battery_names();
/// Runs every battery, in parallel when threads allow; results keep the order of battery_names().
std::vector<BatteryResult> run_all(const Config& config);

}  // namespace bubbles::suite
