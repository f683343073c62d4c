#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace bandforge {

// One named assertion inside a report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

}  // namespace bandforge
