#pragma once

#include <string>
#include <vector>

namespace psent::oracles {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// |a - b| / max(|a|, |b|), 0 when both vanish.
double relative_diff(double a, double b);

/// Fast cross-checks of every closed form against its independent oracle.
std::vector<CheckResult> run_selftest();

}  // namespace psent::oracles
