#pragma once

#include <cstdint>
#include <string>

namespace kclosure {

// One row of a verification run. `status` is "pass", "fail" or "skip";
// skips carry the reason in `note`.
struct CheckReport {
  std::string suite;
  std::string group;
  unsigned k = 0;
  std::string method;
  std::uint64_t order_lhs = 0;
  std::uint64_t order_rhs = 0;
  std::string status;
  std::string note;
  double millis = 0.0;

  bool passed() const { return status == "pass"; }
  bool skipped() const { return status == "skip"; }
};

}  // namespace kclosure
